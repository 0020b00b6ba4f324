#include "friezekit/surface.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fk {

namespace {

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long wrap1(long p, long n) { return ((p - 1) % n + n) % n + 1; }

using Key = std::pair<int, long>;

bool crosses(const CV& a, const CV& b, const CV& c, const CV& d) {
  Key x = a.key(), y = b.key(), z = c.key(), w = d.key();
  if (y < x) std::swap(x, y);
  if (w < z) std::swap(z, w);
  return (x < z && z < y && y < w) || (z < x && x < w && w < y);
}

SurfaceKind parse_kind(const std::string& s) {
  if (s == "polygon") return SurfaceKind::polygon;
  if (s == "punctured_disk") return SurfaceKind::punctured_disk;
  if (s == "annulus") return SurfaceKind::annulus;
  throw input_error("unknown surface kind '" + s + "'");
}

long get_long(const nlohmann::json& j, const char* field, const std::string& ctx) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw input_error(ctx + ": missing integer field '" + field + "'");
  return j[field].get<long>();
}

}  // namespace

std::string kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::polygon: return "polygon";
    case SurfaceKind::punctured_disk: return "punctured_disk";
    case SurfaceKind::annulus: return "annulus";
  }
  return "?";
}

std::string cv_name(const CV& v) {
  if (v.kind == CV::lower) return std::to_string(v.pos);
  if (v.kind == CV::upper) return "i" + std::to_string(v.pos);
  return "P";
}

int LiftTri::side_index(const CV& a, const CV& b) const {
  for (int k = 0; k < 3; ++k) {
    const CV& x = v[k];
    const CV& y = v[(k + 1) % 3];
    if ((x == a && y == b) || (x == b && y == a)) return k;
  }
  return -1;
}

Triangulation Triangulation::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return from_json(doc);
}

Triangulation Triangulation::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("surface") || !doc.contains("arcs"))
    throw input_error("triangulation needs 'surface' and 'arcs'");
  const auto& sj = doc["surface"];
  if (!sj.is_object() || !sj.contains("kind") || !sj["kind"].is_string())
    throw input_error("surface needs a 'kind'");
  Triangulation T;
  T.surf_.kind = parse_kind(sj["kind"].get<std::string>());
  T.surf_.n = static_cast<int>(get_long(sj, "n", "surface"));
  if (T.surf_.kind == SurfaceKind::annulus) T.surf_.m = static_cast<int>(get_long(sj, "m", "surface"));
  const int n = T.surf_.n, m = T.surf_.m;
  switch (T.surf_.kind) {
    case SurfaceKind::polygon:
      if (n < 4) throw input_error("polygon needs at least 4 vertices");
      break;
    case SurfaceKind::punctured_disk:
      if (n < 2) throw input_error("punctured disk needs at least 2 marked points");
      break;
    case SurfaceKind::annulus:
      if (n < 1 || m < 1) throw input_error("annulus needs marked points on both boundaries");
      break;
  }
  if (!doc["arcs"].is_array()) throw input_error("'arcs' must be an array");
  for (const auto& aj : doc["arcs"]) {
    if (!aj.is_object() || !aj.contains("label") || !aj["label"].is_string() ||
        !aj.contains("kind") || !aj["kind"].is_string())
      throw input_error("each arc needs string 'label' and 'kind'");
    Arc a;
    a.label = aj["label"].get<std::string>();
    if (a.label.empty()) throw input_error("empty arc label");
    for (char c : a.label)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw input_error("malformed label '" + a.label + "'");
    if (!(std::isalpha(static_cast<unsigned char>(a.label[0])) || a.label[0] == '_'))
      throw input_error("label must start with a letter: '" + a.label + "'");
    std::string kind = aj["kind"].get<std::string>();
    std::string ctx = "arc '" + a.label + "'";
    if (kind == "peripheral") {
      a.kind = ArcKind::peripheral;
      a.a = get_long(aj, "from", ctx);
      a.b = get_long(aj, "to", ctx);
      if (aj.contains("boundary")) {
        std::string bd = aj["boundary"].get<std::string>();
        if (bd == "inner")
          a.inner = true;
        else if (bd != "outer")
          throw input_error(ctx + ": boundary must be 'outer' or 'inner'");
      }
    } else if (kind == "radius") {
      a.kind = ArcKind::radius;
      a.a = get_long(aj, "at", ctx);
    } else if (kind == "bridge") {
      a.kind = ArcKind::bridge;
      a.a = get_long(aj, "outer", ctx);
      a.b = get_long(aj, "inner", ctx);
    } else if (kind == "ell_loop") {
      a.kind = ArcKind::ell_loop;
      a.a = get_long(aj, "at", ctx);
      if (!aj.contains("radius") || !aj["radius"].is_string())
        throw input_error(ctx + ": ell_loop needs its 'radius' label");
      a.radius = aj["radius"].get<std::string>();
    } else {
      throw input_error(ctx + ": unknown kind '" + kind + "'");
    }
    T.arcs_.push_back(a);
  }
  for (int i = 1; i <= n; ++i) T.outer_labels_.push_back("b" + std::to_string(i));
  for (int u = 1; u <= m; ++u) T.inner_labels_.push_back("B" + std::to_string(u));
  if (doc.contains("boundary_labels")) {
    const auto& bl = doc["boundary_labels"];
    if (bl.contains("outer")) T.outer_labels_ = bl["outer"].get<std::vector<std::string>>();
    if (bl.contains("inner")) T.inner_labels_ = bl["inner"].get<std::vector<std::string>>();
    if (T.outer_labels_.size() != static_cast<size_t>(n) ||
        T.inner_labels_.size() != static_cast<size_t>(m))
      throw input_error("boundary label count mismatch");
  }
  T.normalize_arcs();
  T.validate();
  T.derive_triangles();
  return T;
}

nlohmann::json Triangulation::to_json() const {
  nlohmann::json doc;
  doc["surface"] = {{"kind", kind_name(surf_.kind)}, {"n", surf_.n}};
  if (surf_.kind == SurfaceKind::annulus) doc["surface"]["m"] = surf_.m;
  doc["arcs"] = nlohmann::json::array();
  for (const auto& a : arcs_) {
    nlohmann::json j{{"label", a.label}};
    switch (a.kind) {
      case ArcKind::peripheral:
        j["kind"] = "peripheral";
        j["from"] = a.a;
        j["to"] = a.b;
        if (a.inner) j["boundary"] = "inner";
        break;
      case ArcKind::radius:
        j["kind"] = "radius";
        j["at"] = a.a;
        break;
      case ArcKind::bridge:
        j["kind"] = "bridge";
        j["outer"] = a.a;
        j["inner"] = a.b;
        break;
      case ArcKind::ell_loop:
        j["kind"] = "ell_loop";
        j["at"] = a.a;
        j["radius"] = a.radius;
        break;
    }
    doc["arcs"].push_back(j);
  }
  bool custom = false;
  for (int i = 1; i <= surf_.n; ++i) custom |= outer_labels_[i - 1] != "b" + std::to_string(i);
  for (int u = 1; u <= surf_.m; ++u) custom |= inner_labels_[u - 1] != "B" + std::to_string(u);
  if (custom) {
    doc["boundary_labels"]["outer"] = outer_labels_;
    if (surf_.m > 0) doc["boundary_labels"]["inner"] = inner_labels_;
  }
  return doc;
}

void Triangulation::normalize_arcs() {
  const long n = surf_.n, m = surf_.m;
  for (auto& a : arcs_) {
    switch (a.kind) {
      case ArcKind::peripheral: {
        if (a.a > a.b) std::swap(a.a, a.b);
        long per = a.inner ? m : n;
        if (a.inner && surf_.kind != SurfaceKind::annulus)
          throw input_error("arc '" + a.label + "': inner boundary exists only on an annulus");
        if (surf_.kind == SurfaceKind::polygon) {
          if (a.a < 1 || a.b > n)
            throw input_error("arc '" + a.label + "': polygon vertices are 1.." + std::to_string(n));
          break;
        }
        long k = floordiv(a.a - 1, per);
        a.a -= k * per;
        a.b -= k * per;
        if (surf_.kind == SurfaceKind::punctured_disk && a.b - a.a == n) {
          a.kind = ArcKind::ell_loop;
          for (const auto& r : arcs_)
            if (r.kind == ArcKind::radius && wrap1(r.a, n) == a.a) a.radius = r.label;
        }
        break;
      }
      case ArcKind::radius:
      case ArcKind::ell_loop:
        if (surf_.kind != SurfaceKind::punctured_disk)
          throw input_error("arc '" + a.label + "': radii and loops need a punctured disk");
        a.a = wrap1(a.a, n);
        if (a.kind == ArcKind::ell_loop) a.b = a.a + n;
        break;
      case ArcKind::bridge: {
        if (surf_.kind != SurfaceKind::annulus)
          throw input_error("arc '" + a.label + "': bridges need an annulus");
        long k = floordiv(a.a - 1, n);
        a.a -= k * n;
        a.b -= k * m;
        break;
      }
    }
  }
}

void Triangulation::validate() {
  const long n = surf_.n, m = surf_.m;
  size_t expected = 0;
  switch (surf_.kind) {
    case SurfaceKind::polygon: expected = n - 3; break;
    case SurfaceKind::punctured_disk: expected = n; break;
    case SurfaceKind::annulus: expected = n + m; break;
  }
  if (arcs_.size() != expected)
    throw input_error("non-maximal: " + kind_name(surf_.kind) + " needs " + std::to_string(expected) +
                      " arcs, got " + std::to_string(arcs_.size()));
  std::set<std::string> labels;
  for (const auto& l : outer_labels_) labels.insert(l);
  for (const auto& l : inner_labels_) labels.insert(l);
  if (labels.size() != outer_labels_.size() + inner_labels_.size())
    throw input_error("duplicate boundary labels");
  for (const auto& a : arcs_) {
    if (!labels.insert(a.label).second) throw input_error("duplicate label '" + a.label + "'");
    if (a.kind == ArcKind::peripheral) {
      long span = a.b - a.a, per = a.inner ? m : n;
      if (span < 2) throw input_error("arc '" + a.label + "' is a boundary edge or degenerate");
      if (surf_.kind == SurfaceKind::polygon) {
        if (a.a == 1 && a.b == n) throw input_error("arc '" + a.label + "' is a boundary edge");
      } else if (span > per) {
        throw input_error("arc '" + a.label + "' wraps more than once");
      }
    }
  }
  for (const auto& a : arcs_) {
    if (a.kind != ArcKind::ell_loop) continue;
    const Arc* r = find_arc(a.radius);
    if (!r || r->kind != ArcKind::radius || r->a != a.a)
      throw input_error("ell_loop '" + a.label + "' needs a radius at the same point");
  }
  // Edge table for label lookup.
  edges_.clear();
  auto put = [&](CV a, CV b, const std::string& label, bool boundary) {
    auto c = canonical(a, b);
    auto key = std::make_pair(c.first.key(), c.second.key());
    if (!edges_.emplace(key, std::make_pair(label, boundary)).second)
      throw input_error("arc '" + label + "' duplicates an existing arc or boundary edge");
  };
  for (int i = 1; i <= n; ++i) put(CV::lo(i), CV::lo(i + 1), outer_labels_[i - 1], true);
  for (int u = 1; u <= m; ++u) put(CV::up(u), CV::up(u + 1), inner_labels_[u - 1], true);
  auto lifts = arc_lifts(0, 0);
  for (const auto& e : lifts)
    if (!e.boundary) put(e.u, e.v, e.label, false);
  // Pairwise compatibility of lifts.
  long slack = coord_slack();
  auto wide = arc_lifts(-slack - 1, slack + 1);
  for (const auto& e : lifts) {
    if (e.boundary) continue;
    for (const auto& f : wide) {
      if (f.boundary) continue;
      if (crosses(e.u, e.v, f.u, f.v))
        throw input_error("arcs '" + e.label + "' and '" + f.label + "' cross");
    }
  }
}

long Triangulation::coord_slack() const {
  long mx = 1;
  for (const auto& a : arcs_) mx = std::max({mx, std::labs(a.a), std::labs(a.b)});
  long per = std::max(1, std::min(surf_.n, surf_.m > 0 ? surf_.m : surf_.n));
  return 3 + mx / per;
}

CV Triangulation::shift(const CV& x, long k) const {
  if (x.kind == CV::lower) return CV::lo(x.pos + k * surf_.n);
  if (x.kind == CV::upper) return CV::up(x.pos + k * surf_.m);
  return x;
}

long Triangulation::shift_index(const CV& x) const {
  if (x.kind == CV::lower) return floordiv(x.pos - 1, surf_.n);
  if (x.kind == CV::upper) return floordiv(x.pos - 1, surf_.m);
  return 0;
}

std::pair<CV, CV> Triangulation::canonical(const CV& a, const CV& b) const {
  CV x = a, y = b;
  if (y < x) std::swap(x, y);
  if (surf_.kind == SurfaceKind::polygon) {
    x.pos = wrap1(x.pos, surf_.n);
    y.pos = wrap1(y.pos, surf_.n);
    if (y < x) std::swap(x, y);
    return {x, y};
  }
  long k = shift_index(x.kind == CV::puncture ? y : x);
  x = shift(x, -k);
  y = shift(y, -k);
  if (y < x) std::swap(x, y);
  return {x, y};
}

std::optional<std::pair<std::string, bool>> Triangulation::edge_label(const CV& a,
                                                                      const CV& b) const {
  auto c = canonical(a, b);
  auto it = edges_.find({c.first.key(), c.second.key()});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::vector<LiftEdge> Triangulation::arc_lifts(long k0, long k1) const {
  std::vector<LiftEdge> out;
  const long n = surf_.n, m = surf_.m;
  bool polygon = surf_.kind == SurfaceKind::polygon;
  if (polygon) k0 = k1 = 0;
  for (long k = k0; k <= k1; ++k) {
    for (const auto& a : arcs_) {
      LiftEdge e;
      e.label = a.label;
      switch (a.kind) {
        case ArcKind::peripheral:
          if (a.inner) {
            e.u = CV::up(a.a + k * m);
            e.v = CV::up(a.b + k * m);
          } else {
            e.u = CV::lo(a.a + k * n);
            e.v = CV::lo(a.b + k * n);
          }
          break;
        case ArcKind::radius:
          e.u = CV::lo(a.a + k * n);
          e.v = CV::punct();
          break;
        case ArcKind::ell_loop:
          e.u = CV::lo(a.a + k * n);
          e.v = CV::lo(a.a + n + k * n);
          break;
        case ArcKind::bridge:
          e.u = CV::lo(a.a + k * n);
          e.v = CV::up(a.b + k * m);
          break;
      }
      if (e.v < e.u) std::swap(e.u, e.v);
      out.push_back(e);
    }
    long top = polygon ? n - 1 : n;
    for (long i = 1; i <= top; ++i)
      out.push_back({CV::lo(i + k * n), CV::lo(i + 1 + k * n), outer_labels_[i - 1], true});
    if (polygon) out.push_back({CV::lo(1), CV::lo(n), outer_labels_[n - 1], true});
    for (long u = 1; u <= m; ++u)
      out.push_back({CV::up(u + k * m), CV::up(u + 1 + k * m), inner_labels_[u - 1], true});
  }
  return out;
}

LiftTri Triangulation::make_tri(CV a, CV b, CV c) const {
  std::array<CV, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  LiftTri t;
  t.v = v;
  for (int k = 0; k < 3; ++k) {
    auto lab = edge_label(v[k], v[(k + 1) % 3]);
    if (!lab) throw internal_error("triangle side without label");
    t.side[k] = lab->first;
    t.boundary[k] = lab->second;
  }
  if (surf_.kind == SurfaceKind::punctured_disk) {
    for (int k = 0; k < 3; ++k) {
      const Arc* loop = find_arc(t.side[k]);
      if (loop && loop->kind == ArcKind::ell_loop && t.side[(k + 1) % 3] == loop->radius &&
          t.side[(k + 2) % 3] == loop->radius)
        t.self_folded = true;
    }
  }
  return t;
}

std::vector<LiftTri> Triangulation::cliques(const std::vector<LiftEdge>& edges) const {
  std::map<Key, std::vector<CV>> adj;
  std::set<std::pair<Key, Key>> has;
  for (const auto& e : edges) {
    if (!has.insert({e.u.key(), e.v.key()}).second) continue;
    adj[e.u.key()].push_back(e.v);
    adj[e.v.key()].push_back(e.u);
  }
  std::vector<LiftTri> out;
  for (const auto& e : edges) {
    if (!has.count({e.u.key(), e.v.key()})) continue;
    has.erase({e.u.key(), e.v.key()});
    const auto& nu = adj[e.u.key()];
    const auto& nv = adj[e.v.key()];
    std::set<Key> sv;
    for (const auto& w : nv) sv.insert(w.key());
    for (const auto& w : nu) {
      if (!(e.v < w)) continue;
      if (sv.count(w.key())) out.push_back(make_tri(e.u, e.v, w));
    }
  }
  return out;
}

std::vector<LiftTri> Triangulation::triangles_between(long lo, long hi) const {
  std::vector<LiftTri> out;
  if (surf_.kind == SurfaceKind::polygon) {
    const long n = surf_.n;
    for (const auto& t : tris_) {
      std::array<CV, 3> v = t.v;
      for (auto& x : v) x.pos = lo + ((x.pos - lo) % n + n) % n;
      bool inside = true;
      for (auto& x : v) inside = inside && x.pos <= hi;
      if (inside) out.push_back(make_tri(v[0], v[1], v[2]));
    }
    std::sort(out.begin(), out.end(), [](const LiftTri& a, const LiftTri& b) { return a.v < b.v; });
    return out;
  }
  long slack = coord_slack();
  long k0 = floordiv(lo - 1, surf_.n) - slack, k1 = floordiv(hi - 1, surf_.n) + slack;
  for (const auto& t : cliques(arc_lifts(k0, k1))) {
    bool any = false, inside = true;
    for (const auto& x : t.v) {
      if (!x.is_lower()) continue;
      any = true;
      inside = inside && x.pos >= lo && x.pos <= hi;
    }
    if (any && inside) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const LiftTri& a, const LiftTri& b) {
    return std::make_tuple(a.v[0].key(), a.v[1].key(), a.v[2].key()) <
           std::make_tuple(b.v[0].key(), b.v[1].key(), b.v[2].key());
  });
  return out;
}

void Triangulation::derive_triangles() {
  tris_.clear();
  const long n = surf_.n;
  size_t expected = 0;
  if (surf_.kind == SurfaceKind::polygon) {
    expected = n - 2;
    auto edges = arc_lifts(0, 0);
    tris_ = cliques(edges);
  } else {
    expected = surf_.kind == SurfaceKind::annulus ? n + surf_.m : n;
    long slack = coord_slack();
    for (const auto& t : cliques(arc_lifts(-slack - 1, slack + 1))) {
      const CV& first = t.v[0];
      if (shift_index(first) == 0) tris_.push_back(t);
    }
  }
  std::sort(tris_.begin(), tris_.end(), [](const LiftTri& a, const LiftTri& b) {
    return std::make_tuple(a.v[0].key(), a.v[1].key(), a.v[2].key()) <
           std::make_tuple(b.v[0].key(), b.v[1].key(), b.v[2].key());
  });
  if (tris_.size() != expected)
    throw input_error("arcs do not cut the surface into triangles (found " +
                      std::to_string(tris_.size()) + " triangles, expected " +
                      std::to_string(expected) + ")");
}

std::vector<std::string> Triangulation::arc_labels() const {
  std::vector<std::string> out;
  for (const auto& a : arcs_) out.push_back(a.label);
  return out;
}

std::vector<std::string> Triangulation::boundary_labels() const {
  std::vector<std::string> out = outer_labels_;
  out.insert(out.end(), inner_labels_.begin(), inner_labels_.end());
  return out;
}

std::vector<std::string> Triangulation::variables() const {
  auto out = arc_labels();
  auto b = boundary_labels();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool Triangulation::is_boundary_label(const std::string& s) const {
  return std::find(outer_labels_.begin(), outer_labels_.end(), s) != outer_labels_.end() ||
         std::find(inner_labels_.begin(), inner_labels_.end(), s) != inner_labels_.end();
}

const Arc* Triangulation::find_arc(const std::string& label) const {
  for (const auto& a : arcs_)
    if (a.label == label) return &a;
  return nullptr;
}

std::vector<int> Triangulation::quiddity() const {
  std::vector<int> q(surf_.n, 0);
  for (const auto& t : tris_)
    for (const auto& x : t.v)
      if (x.is_lower()) ++q[wrap1(x.pos, surf_.n) - 1];
  return q;
}

std::vector<std::vector<int>> Triangulation::signed_adjacency() const {
  const size_t d = arcs_.size();
  std::vector<std::vector<int>> B(d, std::vector<int>(d, 0));
  std::map<std::string, int> idx;
  for (size_t i = 0; i < d; ++i) idx[arcs_[i].label] = static_cast<int>(i);
  auto radius_of = [&](const std::string& l) -> int {
    const Arc* a = find_arc(l);
    if (a && a->kind == ArcKind::ell_loop) return idx.at(a->radius);
    return -1;
  };
  auto bump = [&](int i, int j) {
    B[i][j] += 1;
    B[j][i] -= 1;
  };
  for (const auto& t : tris_) {
    if (t.self_folded) continue;
    for (int s = 0; s < 3; ++s) {
      int s2 = (s + 1) % 3;
      if (t.boundary[s] || t.boundary[s2]) continue;
      int i = idx.at(t.side[s]), j = idx.at(t.side[s2]);
      bump(i, j);
      int rj = radius_of(t.side[s2]);
      if (rj >= 0) bump(i, rj);
      int ri = radius_of(t.side[s]);
      if (ri >= 0) bump(ri, j);
    }
  }
  return B;
}

Triangulation Triangulation::flipped(const std::string& label) const {
  if (is_boundary_label(label)) throw input_error("cannot flip boundary edge '" + label + "'");
  const Arc* arc = find_arc(label);
  if (!arc) throw input_error("unknown arc '" + label + "'");
  if (arc->kind == ArcKind::ell_loop)
    throw unsupported("flipping ell_loop '" + label + "' needs a tagged flip");
  for (const auto& a : arcs_)
    if (a.kind == ArcKind::ell_loop && a.radius == label)
      throw unsupported("flipping enclosed radius '" + label + "' needs a tagged flip");
  const long n = surf_.n;
  auto lifts = arc_lifts(0, 0);
  LiftEdge e;
  for (const auto& l : lifts)
    if (l.label == label) e = l;
  long lo = e.u.is_lower() ? e.u.pos : 1, hi = e.v.is_lower() ? e.v.pos : lo;
  std::vector<LiftTri> around;
  if (surf_.kind == SurfaceKind::polygon) {
    for (const auto& t : tris_)
      if (t.side_index(e.u, e.v) >= 0) around.push_back(t);
  } else {
    for (const auto& t : triangles_between(lo - 2 * n - 2, hi + 2 * n + 2))
      if (t.side_index(e.u, e.v) >= 0) around.push_back(t);
  }
  if (around.size() != 2) throw internal_error("arc does not border two triangles");
  CV x = around[0].opposite(around[0].side_index(e.u, e.v));
  CV y = around[1].opposite(around[1].side_index(e.u, e.v));
  if (y < x) std::swap(x, y);
  Arc na;
  na.label = label;
  if (x.is_lower() && y.is_lower()) {
    na.kind = ArcKind::peripheral;
    na.a = x.pos;
    na.b = y.pos;
    if (surf_.kind == SurfaceKind::punctured_disk && y.pos - x.pos == n) {
      na.kind = ArcKind::ell_loop;
      auto r = edge_label(x, CV::punct());
      if (!r) throw internal_error("loop without radius");
      na.radius = r->first;
    }
  } else if (x.is_lower() && y.kind == CV::puncture) {
    na.kind = ArcKind::radius;
    na.a = x.pos;
  } else if (x.is_lower() && y.kind == CV::upper) {
    na.kind = ArcKind::bridge;
    na.a = x.pos;
    na.b = y.pos;
  } else if (x.kind == CV::upper && y.kind == CV::upper) {
    na.kind = ArcKind::peripheral;
    na.inner = true;
    na.a = std::min(x.pos, y.pos);
    na.b = std::max(x.pos, y.pos);
  } else {
    throw internal_error("unexpected flip quadrilateral");
  }
  Triangulation T = *this;
  for (auto& a : T.arcs_)
    if (a.label == label) a = na;
  T.normalize_arcs();
  T.validate();
  T.derive_triangles();
  return T;
}

Triangulation Triangulation::inner_view() const {
  if (surf_.kind != SurfaceKind::annulus) throw input_error("inner boundary needs an annulus");
  const long n = surf_.n, m = surf_.m;
  Triangulation T;
  T.surf_ = {SurfaceKind::annulus, static_cast<int>(m), static_cast<int>(n)};
  for (long p = 1; p <= m; ++p) T.outer_labels_.push_back(inner_labels_[wrap1(m - p, m) - 1]);
  for (long q = 1; q <= n; ++q) T.inner_labels_.push_back(outer_labels_[wrap1(n - q, n) - 1]);
  for (const auto& a : arcs_) {
    Arc b = a;
    if (a.kind == ArcKind::peripheral) {
      long per = a.inner ? m : n;
      b.a = per + 1 - a.b;
      b.b = per + 1 - a.a;
      b.inner = !a.inner;
    } else if (a.kind == ArcKind::bridge) {
      b.a = m + 1 - a.b;
      b.b = n + 1 - a.a;
    }
    T.arcs_.push_back(b);
  }
  T.normalize_arcs();
  T.validate();
  T.derive_triangles();
  return T;
}

ArcSpec make_arc(long i, long j, int k, long n) {
  if (n < 1) throw input_error("period must be positive");
  if (i < 1 || i > n || j < 1 || j > n)
    throw input_error("marked points must lie in 1.." + std::to_string(n));
  if (k < 1) throw input_error("level must be at least 1");
  return {i, j, k, n};
}

ComplementSpec complement(const ArcSpec& g) {
  if (g.i != g.j) return {g.j, g.i, g.k, g.n};
  return {g.i, g.j, g.k - 1, g.n};
}

CrossingData crossing_data(const Triangulation& T, const ArcSpec& g) {
  return crossing_data(T, g.lift_from(), g.lift_to());
}

CrossingData crossing_data(const Triangulation& T, long s, long t) {
  const long n = T.n();
  if (t <= s) throw input_error("arc endpoints must satisfy s < t");
  bool polygon = T.surface().kind == SurfaceKind::polygon;
  if (polygon && t - s > n - 1) throw input_error("polygon arcs span at most n-1 positions");
  CrossingData cd;
  cd.s = CV::lo(s);
  cd.t = CV::lo(t);
  if (auto lab = T.edge_label(cd.s, cd.t)) {
    cd.direct_label = lab->first;
    cd.direct_boundary = lab->second;
    return cd;
  }
  auto inside = [&](const CV& x) { return x.is_lower() && x.pos > s && x.pos < t; };
  auto outside = [&](const CV& x) {
    return !x.is_lower() || x.pos < s || x.pos > t;
  };
  auto crossed = [&](const CV& a, const CV& b) {
    return (inside(a) && outside(b)) || (inside(b) && outside(a));
  };
  std::vector<LiftTri> all =
      polygon ? T.triangles_between(s, s + n - 1) : T.triangles_between(s - 2 * n - 2, t + 2 * n + 2);
  std::vector<LiftTri> chain;
  for (const auto& tr : all) {
    int c = 0;
    for (int k = 0; k < 3; ++k) c += crossed(tr.v[k], tr.v[(k + 1) % 3]);
    if (c > 0) chain.push_back(tr);
  }
  if (chain.empty()) throw internal_error("no crossed triangles for a non-edge arc");
  int start = -1;
  for (size_t i = 0; i < chain.size(); ++i) {
    const auto& tr = chain[i];
    for (int q = 0; q < 3; ++q) {
      if (!(tr.v[q] == cd.s)) continue;
      int c = 0;
      for (int r = 0; r < 3; ++r) c += crossed(tr.v[r], tr.v[(r + 1) % 3]);
      if (c == 1 && crossed(tr.v[(q + 1) % 3], tr.v[(q + 2) % 3])) start = static_cast<int>(i);
    }
  }
  if (start < 0) throw internal_error("no starting triangle at s");
  std::vector<bool> used(chain.size(), false);
  int cur = start;
  bool moved = false;
  std::pair<CV, CV> prev{CV::punct(), CV::punct()};
  while (true) {
    used[cur] = true;
    cd.tris.push_back(chain[cur]);
    const auto& tr = chain[cur];
    int next_side = -1;
    for (int q = 0; q < 3; ++q) {
      CV a = tr.v[q], b = tr.v[(q + 1) % 3];
      if (!crossed(a, b)) continue;
      if (moved && ((a == prev.first && b == prev.second) || (a == prev.second && b == prev.first)))
        continue;
      next_side = q;
    }
    if (next_side < 0) break;
    CV a = tr.v[next_side], b = tr.v[(next_side + 1) % 3];
    int nxt = -1;
    for (size_t i = 0; i < chain.size(); ++i)
      if (static_cast<int>(i) != cur && chain[i].side_index(a, b) >= 0) nxt = static_cast<int>(i);
    if (nxt < 0 || used[nxt]) throw internal_error("broken crossing chain");
    CrossedEdge e;
    e.rho = inside(a) ? a : b;
    e.lambda = inside(a) ? b : a;
    e.label = tr.side[next_side];
    cd.edges.push_back(e);
    prev = {a, b};
    moved = true;
    cur = nxt;
  }
  if (!cd.tris.back().has(cd.t) || cd.tris.size() != chain.size())
    throw internal_error("crossing chain does not reach t");
  cd.direct_label.clear();
  return cd;
}

BandData band_data(const Triangulation& T, int k) {
  if (T.surface().kind != SurfaceKind::annulus) throw input_error("band graphs need an annulus");
  if (k < 1) throw input_error("bracelet wrap count must be at least 1");
  const long n = T.n(), m = T.surface().m;
  std::vector<std::pair<CV, CV>> verts;
  std::vector<std::string> labels;
  long p = 0;
  for (const auto& a : T.arcs())
    if (a.kind == ArcKind::bridge) ++p;
  if (p == 0) throw internal_error("annulus triangulation without bridges");
  for (long s = -2; s <= k + 2; ++s)
    for (const auto& a : T.arcs())
      if (a.kind == ArcKind::bridge) {
        verts.push_back({CV::lo(a.a + s * n), CV::up(a.b + s * m)});
        labels.push_back(a.label);
      }
  std::vector<size_t> order(verts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return std::make_pair(verts[x].first.pos, verts[x].second.pos) <
           std::make_pair(verts[y].first.pos, verts[y].second.pos);
  });
  size_t first = 0;
  while (verts[order[first]].first.pos < 1) ++first;
  BandData bd;
  bd.k = k;
  bd.shift_lower = k * n;
  bd.shift_upper = k * m;
  long lo = verts[order[first - 1]].first.pos - n - 1;
  long hi = verts[order[first + k * p]].first.pos + n + 1;
  auto tris = T.triangles_between(lo, hi);
  for (long t = 0; t <= k * p; ++t) {
    auto [a1, b1] = verts[order[first + t - 1]];
    auto [a2, b2] = verts[order[first + t]];
    int found = -1;
    for (size_t i = 0; i < tris.size(); ++i)
      if (tris[i].side_index(a1, b1) >= 0 && tris[i].side_index(a2, b2) >= 0) found = static_cast<int>(i);
    if (found < 0) throw internal_error("no triangle between consecutive bridges");
    bd.tris.push_back(tris[found]);
    if (t >= 1) bd.edges.push_back({a1, b1, labels[order[first + t - 1]]});
  }
  return bd;
}

}  // namespace fk
