#include "friezekit/bci.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fk {

namespace {

bool same_edge(const CV& a, const CV& b, const CV& c, const CV& d) {
  return (a == c && b == d) || (a == d && b == c);
}

bool same_step(const CoverEdge& x, const CoverEdge& y) {
  return same_edge(x.u, x.v, y.u, y.v) && x.k == y.k && x.label == y.label;
}

CoverEdge side_edge(const LiftTri& t, const CV& a, const CV& b, int tri, bool right) {
  int q = t.side_index(a, b);
  if (q < 0) throw internal_error("cover side missing");
  CoverEdge e;
  e.u = a;
  e.v = b;
  e.label = t.side[q];
  e.boundary = t.boundary[q];
  e.tri = tri;
  e.right = right;
  return e;
}

// Unique matching of vertices to triangles by repeatedly fixing forced pairs.
bool peel(const std::vector<std::vector<int>>& options, size_t ntri, std::vector<int>& out) {
  const size_t nv = options.size();
  out.assign(nv, -1);
  std::vector<char> used(ntri, 0);
  size_t done = 0;
  while (done < nv) {
    bool progress = false;
    for (size_t i = 0; i < nv; ++i) {
      if (out[i] >= 0) continue;
      int only = -1, cnt = 0;
      for (int t : options[i])
        if (!used[t]) {
          ++cnt;
          only = t;
        }
      if (cnt == 0) return false;
      if (cnt == 1) {
        out[i] = only;
        used[only] = 1;
        ++done;
        progress = true;
      }
    }
    if (progress) continue;
    for (size_t t = 0; t < ntri && !progress; ++t) {
      if (used[t]) continue;
      int only = -1, cnt = 0;
      for (size_t i = 0; i < nv; ++i)
        if (out[i] < 0 && std::count(options[i].begin(), options[i].end(), static_cast<int>(t))) {
          ++cnt;
          only = static_cast<int>(i);
        }
      if (cnt == 1) {
        out[only] = static_cast<int>(t);
        used[t] = 1;
        ++done;
        progress = true;
      }
    }
    if (!progress) return false;
  }
  return true;
}

std::string letters(size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

}  // namespace

int Cover::full_index(size_t i) const {
  for (size_t q = 0; q < R_full.size(); ++q)
    if (R_full[q] == R[i]) return static_cast<int>(q) + 1;
  return static_cast<int>(i) + 1;
}

Cover polygon_cover(const Triangulation& T, const ArcSpec& g) {
  return polygon_cover(T, crossing_data(T, g));
}

Cover polygon_cover(const Triangulation& T, const CrossingData& cd) {
  Cover c;
  c.s = cd.s;
  c.t = cd.t;
  c.tris = cd.tris;
  c.crossed = cd.edges;
  c.direct_label = cd.direct_label;
  c.direct_boundary = cd.direct_boundary;
  for (long p = cd.s.pos + 1; p < cd.t.pos; ++p) c.R_full.push_back(CV::lo(p));
  const size_t d = cd.d();
  if (d == 0) return c;
  for (size_t k = 1; k <= d; ++k) {
    const auto& e = cd.edges[k - 1];
    CoverEdge ce;
    ce.u = e.rho;
    ce.v = e.lambda;
    ce.label = e.label;
    ce.k = static_cast<int>(k);
    c.edges.push_back(ce);
  }
  c.edges.push_back(side_edge(c.tris[0], c.s, cd.edges[0].rho, 0, true));
  c.edges.push_back(side_edge(c.tris[0], c.s, cd.edges[0].lambda, 0, false));
  for (size_t k = 1; k < d; ++k) {
    const auto& a = cd.edges[k - 1];
    const auto& b = cd.edges[k];
    if (a.lambda == b.lambda)
      c.edges.push_back(side_edge(c.tris[k], a.rho, b.rho, static_cast<int>(k), true));
    else
      c.edges.push_back(side_edge(c.tris[k], a.lambda, b.lambda, static_cast<int>(k), false));
  }
  c.edges.push_back(side_edge(c.tris[d], cd.edges[d - 1].rho, c.t, static_cast<int>(d), true));
  c.edges.push_back(side_edge(c.tris[d], cd.edges[d - 1].lambda, c.t, static_cast<int>(d), false));
  for (size_t k = 1; k <= d; ++k) {
    const auto& e = cd.edges[k - 1];
    if (c.R.empty() || !(c.R.back() == e.rho)) {
      c.R.push_back(e.rho);
      c.fan.push_back({static_cast<int>(k) - 1, static_cast<int>(k)});
    } else {
      c.fan.back().second = static_cast<int>(k);
    }
    if (c.L.empty() || !(c.L.back() == e.lambda)) c.L.push_back(e.lambda);
  }
  // Far vertices: matched to uncrossed triangles before reduction.
  std::vector<LiftTri> extra;
  for (const auto& t : T.triangles_between(cd.s.pos, cd.t.pos)) {
    bool all_lower = std::all_of(t.v.begin(), t.v.end(), [](const CV& x) { return x.is_lower(); });
    if (!all_lower) continue;
    if (std::find(c.tris.begin(), c.tris.end(), t) != c.tris.end()) continue;
    extra.push_back(t);
  }
  std::vector<CV> far;
  for (const auto& v : c.R_full)
    if (std::find(c.R.begin(), c.R.end(), v) == c.R.end()) far.push_back(v);
  std::vector<std::vector<int>> options(far.size());
  for (size_t i = 0; i < far.size(); ++i)
    for (size_t t = 0; t < extra.size(); ++t)
      if (extra[t].has(far[i])) options[i].push_back(static_cast<int>(t));
  std::vector<int> assign;
  if (far.size() != extra.size() || !peel(options, extra.size(), assign))
    throw internal_error("far vertices are not uniquely matched");
  for (size_t i = 0; i < far.size(); ++i) c.forced.push_back({extra[assign[i]], far[i], letters(i)});
  return c;
}

bool is_bci(const Cover& c, const BCITuple& b) {
  if (b.size() != c.r()) return false;
  std::set<int> seen;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] >= static_cast<int>(c.tris.size())) return false;
    if (!c.tris[b[i]].has(c.R[i])) return false;
    if (!seen.insert(b[i]).second) return false;
  }
  return true;
}

std::vector<BCITuple> enumerate_bci(const Cover& c) {
  std::vector<BCITuple> out;
  BCITuple cur;
  std::vector<char> used(c.tris.size(), 0);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == c.r()) {
      out.push_back(cur);
      return;
    }
    for (int t = c.fan[i].first; t <= c.fan[i].second; ++t) {
      if (used[t]) continue;
      used[t] = 1;
      cur.push_back(t);
      go(i + 1);
      cur.pop_back();
      used[t] = 0;
    }
  };
  go(0);
  return out;
}

std::vector<BCITuple> enumerate_bci_bruteforce(const Cover& c) {
  std::vector<std::vector<int>> cand(c.r());
  for (size_t i = 0; i < c.r(); ++i)
    for (size_t t = 0; t < c.tris.size(); ++t)
      if (c.tris[t].has(c.R[i])) cand[i].push_back(static_cast<int>(t));
  std::vector<BCITuple> out;
  BCITuple cur(c.r());
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == c.r()) {
      if (is_bci(c, cur)) out.push_back(cur);
      return;
    }
    for (int t : cand[i]) {
      cur[i] = t;
      go(i + 1);
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string tuple_name(const Cover& c, const BCITuple& b, bool full) {
  std::string s = "(";
  if (!full) {
    for (size_t i = 0; i < b.size(); ++i) s += (i ? ",D" : "D") + std::to_string(b[i]);
    return s + ")";
  }
  bool first = true;
  for (const auto& v : c.R_full) {
    s += first ? "" : ",";
    first = false;
    auto it = std::find(c.R.begin(), c.R.end(), v);
    if (it != c.R.end()) {
      s += "D" + std::to_string(b[it - c.R.begin()]);
    } else {
      for (const auto& f : c.forced)
        if (f.vertex == v) s += f.name;
    }
  }
  return s + ")";
}

bool TPath::operator==(const TPath& o) const {
  if (verts != o.verts || steps.size() != o.steps.size()) return false;
  for (size_t i = 0; i < steps.size(); ++i)
    if (!same_step(steps[i], o.steps[i])) return false;
  return true;
}

std::string TPath::str() const {
  std::string s = "(";
  for (size_t i = 0; i < steps.size(); ++i) s += (i ? ", " : "") + steps[i].label;
  return s + ")";
}

std::string TPathReport::str() const {
  std::string s;
  for (int i = 0; i < 6; ++i) s += "T" + std::to_string(i + 1) + (t[i] ? ":pass " : ":fail ");
  if (!s.empty()) s.pop_back();
  return s;
}

TPath trail(const Cover& c, const BCITuple& b) {
  TPath a;
  a.verts.push_back(c.s);
  if (c.d() == 0) {
    CoverEdge e;
    e.u = c.s;
    e.v = c.t;
    e.label = c.direct_label;
    e.boundary = c.direct_boundary;
    a.steps.push_back(e);
    a.verts.push_back(c.t);
    return a;
  }
  if (!is_bci(c, b)) throw input_error("not a BCI tuple");
  const size_t d = c.d();
  std::vector<char> matched(d + 1, 0);
  for (int t : b) matched[t] = 1;
  std::vector<std::pair<double, CoverEdge>> keyed;
  for (const auto& e : c.edges) {
    if (e.k > 0) {
      if (matched[e.k - 1] != matched[e.k]) keyed.push_back({static_cast<double>(e.k), e});
    } else if (e.right != static_cast<bool>(matched[e.tri])) {
      keyed.push_back({e.tri + 0.5, e});
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  CV cur = c.s;
  for (auto& [key, e] : keyed) {
    (void)key;
    if (e.u == cur)
      cur = e.v;
    else if (e.v == cur)
      cur = e.u;
    else
      throw internal_error("trail is not connected");
    a.steps.push_back(e);
    a.verts.push_back(cur);
  }
  if (!(cur == c.t)) throw internal_error("trail does not end at t");
  return a;
}

TPathReport validate_tpath(const Cover& c, const TPath& a) {
  TPathReport r;
  const size_t L = a.steps.size();
  r.t[0] = !a.verts.empty() && a.verts.size() == L + 1 && a.verts.front() == c.s && a.verts.back() == c.t;
  bool t2 = a.verts.size() == L + 1;
  for (size_t j = 0; t2 && j < L; ++j) {
    const auto& e = a.steps[j];
    bool known = c.d() == 0 ? same_edge(e.u, e.v, c.s, c.t)
                            : std::any_of(c.edges.begin(), c.edges.end(),
                                          [&](const CoverEdge& f) { return same_step(e, f); });
    t2 = known && same_edge(e.u, e.v, a.verts[j], a.verts[j + 1]);
  }
  r.t[1] = t2;
  bool t3 = true;
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i + 1; j < L; ++j) t3 = t3 && !same_step(a.steps[i], a.steps[j]);
  r.t[2] = t3;
  r.t[3] = L % 2 == 1;
  bool t5 = true;
  for (size_t j = 1; j < L; j += 2) t5 = t5 && a.steps[j].k > 0;
  r.t[4] = t5;
  bool t6 = true;
  int last = 0;
  for (size_t j = 0; j < L; ++j) {
    if (a.steps[j].k == 0) continue;
    t6 = t6 && a.steps[j].k > last;
    last = a.steps[j].k;
  }
  r.t[5] = t6;
  return r;
}

BCITuple triangles_of(const Cover& c, const TPath& a) {
  TPathReport rep = validate_tpath(c, a);
  if (!rep.ok()) throw input_error("not a reduced T-path: " + rep.str());
  if (c.d() == 0) return {};
  const size_t d = c.d();
  std::vector<int> status(d + 1, -1);
  auto set = [&](size_t k, int v) {
    if (status[k] >= 0 && status[k] != v) throw input_error("T-path crosses inconsistently");
    status[k] = v;
  };
  std::vector<char> crossed_in(d + 1, 0);
  for (size_t j = 0; j < a.steps.size(); ++j) {
    const auto& e = a.steps[j];
    if (e.k == 0) continue;
    crossed_in[e.k] = 1;
    const auto& ce = c.crossed[e.k - 1];
    bool r_to_l = a.verts[j] == ce.rho;
    set(e.k, r_to_l ? 1 : 0);
    set(e.k - 1, r_to_l ? 0 : 1);
  }
  for (size_t k = 1; k <= d; ++k)
    if (!crossed_in[k] && status[k - 1] >= 0 && status[k] < 0) status[k] = status[k - 1];
  for (size_t k = d; k >= 1; --k)
    if (!crossed_in[k] && status[k] >= 0 && status[k - 1] < 0) status[k - 1] = status[k];
  for (size_t k = 1; k <= d; ++k)
    if (!crossed_in[k] && status[k] != status[k - 1]) throw input_error("T-path crosses inconsistently");
  std::vector<int> M;
  for (size_t k = 0; k <= d; ++k)
    if (status[k] == 1) M.push_back(static_cast<int>(k));
  if (M.size() != c.r()) throw input_error("T-path does not match every right vertex");
  std::vector<std::vector<int>> options(c.r());
  for (size_t i = 0; i < c.r(); ++i)
    for (size_t q = 0; q < M.size(); ++q)
      if (M[q] >= c.fan[i].first && M[q] <= c.fan[i].second) options[i].push_back(static_cast<int>(q));
  std::vector<int> assign;
  if (!peel(options, M.size(), assign)) throw input_error("T-path triangles admit no unique assignment");
  BCITuple b(c.r());
  for (size_t i = 0; i < c.r(); ++i) b[i] = M[assign[i]];
  if (!(trail(c, b) == a)) throw input_error("T-path is not the trail of its triangles");
  return b;
}

std::vector<TPath> enumerate_tpaths(const Cover& c) {
  std::vector<TPath> out;
  if (c.d() == 0) {
    out.push_back(trail(c, {}));
    return out;
  }
  TPath cur;
  cur.verts.push_back(c.s);
  std::vector<char> used(c.edges.size(), 0);
  std::function<void(int)> go = [&](int last_k) {
    const CV here = cur.verts.back();
    if (here == c.t && cur.steps.size() % 2 == 1) out.push_back(cur);
    bool even_next = (cur.steps.size() + 1) % 2 == 0;
    for (size_t i = 0; i < c.edges.size(); ++i) {
      if (used[i]) continue;
      const auto& e = c.edges[i];
      if (!(e.u == here) && !(e.v == here)) continue;
      if (even_next && e.k == 0) continue;
      if (e.k > 0 && e.k <= last_k) continue;
      used[i] = 1;
      cur.steps.push_back(e);
      cur.verts.push_back(e.u == here ? e.v : e.u);
      go(e.k > 0 ? e.k : last_k);
      cur.verts.pop_back();
      cur.steps.pop_back();
      used[i] = 0;
    }
  };
  go(0);
  return out;
}

LaurentPoly tpath_weight(const TPath& a, bool keep_boundary) {
  LaurentPoly num = LaurentPoly::constant(1), den = LaurentPoly::constant(1);
  for (size_t j = 0; j < a.steps.size(); ++j) {
    const auto& e = a.steps[j];
    if (e.boundary && !keep_boundary) continue;
    if (j % 2 == 0)
      num *= LaurentPoly::variable(e.label);
    else
      den *= LaurentPoly::variable(e.label);
  }
  return monomial_quotient(num, den);
}

LaurentPoly expand_via_bci(const Triangulation& T, const CrossingData& cd, bool keep_boundary) {
  Cover c = polygon_cover(T, cd);
  LaurentPoly sum;
  for (const auto& b : enumerate_bci(c)) sum += tpath_weight(trail(c, b), keep_boundary);
  return sum;
}

Lattice bci_lattice(const Cover& c) {
  Lattice L;
  L.nodes = enumerate_bci(c);
  std::map<BCITuple, int> index;
  for (size_t i = 0; i < L.nodes.size(); ++i) index[L.nodes[i]] = static_cast<int>(i);
  for (size_t n = 0; n < L.nodes.size(); ++n) {
    const auto& b = L.nodes[n];
    LaurentPoly h = LaurentPoly::constant(1);
    int rank = 0;
    for (size_t i = 0; i < c.r(); ++i) {
      for (int k = c.fan[i].first + 1; k <= b[i]; ++k) h *= LaurentPoly::variable(c.crossed[k - 1].label);
      rank += b[i] - c.fan[i].first;
      if (b[i] < c.fan[i].second) {
        BCITuple up = b;
        up[i] += 1;
        auto it = index.find(up);
        if (it != index.end()) L.twists.push_back({static_cast<int>(n), it->second, static_cast<int>(i)});
      }
    }
    L.height.push_back(h);
    L.rank.push_back(rank);
  }
  BCITuple lo, hi;
  for (size_t i = 0; i < c.r(); ++i) {
    lo.push_back(c.fan[i].first);
    hi.push_back(c.fan[i].second);
  }
  if (index.count(lo)) L.minimal = index[lo];
  if (index.count(hi)) L.maximal = index[hi];
  return L;
}

PosetQ poset_Q(const Cover& c) {
  PosetQ q;
  q.d = static_cast<int>(c.d());
  for (int k = 1; k < q.d; ++k) {
    const LiftTri& t = c.tris[k];
    const auto& a = c.crossed[k - 1];
    const auto& b = c.crossed[k];
    int sa = t.side_index(a.rho, a.lambda), sb = t.side_index(b.rho, b.lambda);
    if (sa < 0 || sb < 0) throw internal_error("crossed edges missing from their triangle");
    if (sb == (sa + 1) % 3)
      q.arrows.push_back({k, k + 1});
    else
      q.arrows.push_back({k + 1, k});
  }
  return q;
}

std::vector<std::vector<int>> order_ideals(const PosetQ& q) {
  std::vector<std::vector<int>> out;
  if (q.d > 30) throw input_error("poset too large for ideal enumeration");
  for (unsigned long mask = 0; mask < (1UL << q.d); ++mask) {
    bool ok = true;
    for (auto [a, b] : q.arrows)
      if ((mask >> (b - 1) & 1) && !(mask >> (a - 1) & 1)) ok = false;
    if (!ok) continue;
    std::vector<int> ideal;
    for (int k = 1; k <= q.d; ++k)
      if (mask >> (k - 1) & 1) ideal.push_back(k);
    out.push_back(ideal);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ideal_of(const Cover& c, const BCITuple& b) {
  std::vector<int> s;
  for (size_t i = 0; i < c.r(); ++i)
    for (int k = c.fan[i].first + 1; k <= b[i]; ++k) s.push_back(k);
  std::sort(s.begin(), s.end());
  return s;
}

bool check_lattice_isomorphism(const Cover& c, const Lattice& L, const PosetQ& q, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto ideals = order_ideals(q);
  std::set<std::vector<int>> all(ideals.begin(), ideals.end());
  std::set<std::vector<int>> image;
  std::vector<std::vector<int>> of(L.nodes.size());
  for (size_t n = 0; n < L.nodes.size(); ++n) {
    of[n] = ideal_of(c, L.nodes[n]);
    if (!all.count(of[n])) return fail("image of " + tuple_name(c, L.nodes[n], false) + " is not an ideal");
    if (static_cast<int>(of[n].size()) != L.rank[n]) return fail("rank differs from ideal size");
    image.insert(of[n]);
  }
  if (image.size() != L.nodes.size() || image != all) return fail("map is not a bijection onto J(Q)");
  std::set<std::pair<std::vector<int>, std::vector<int>>> covers;
  for (const auto& x : ideals)
    for (const auto& y : ideals)
      if (y.size() == x.size() + 1 && std::includes(y.begin(), y.end(), x.begin(), x.end()))
        covers.insert({x, y});
  std::set<std::pair<std::vector<int>, std::vector<int>>> twists;
  for (const auto& t : L.twists) twists.insert({of[t.from], of[t.to]});
  if (covers != twists) return fail("twists do not match the covering relations of J(Q)");
  return true;
}

std::string lattice_dot(const Cover& c, const Lattice& L) {
  std::ostringstream os;
  os << "digraph bci_lattice {\n  rankdir=BT;\n";
  for (size_t n = 0; n < L.nodes.size(); ++n)
    os << "  n" << n << " [label=\"" << tuple_name(c, L.nodes[n], true) << "\"];\n";
  for (const auto& t : L.twists)
    os << "  n" << t.from << " -> n" << t.to << " [label=\"R" << c.full_index(t.r) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string poset_dot(const PosetQ& q) {
  std::ostringstream os;
  os << "digraph poset_Q {\n";
  for (int k = 1; k <= q.d; ++k) os << "  " << k << ";\n";
  for (auto [a, b] : q.arrows) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json lattice_json(const Cover& c, const Lattice& L) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (size_t n = 0; n < L.nodes.size(); ++n)
    j["nodes"].push_back({{"tuple", L.nodes[n]},
                          {"name", tuple_name(c, L.nodes[n], true)},
                          {"rank", L.rank[n]},
                          {"height", to_text(L.height[n])}});
  j["twists"] = nlohmann::json::array();
  for (const auto& t : L.twists)
    j["twists"].push_back({{"from", t.from}, {"to", t.to}, {"vertex", "R" + std::to_string(c.full_index(t.r))}});
  j["minimal"] = L.minimal;
  j["maximal"] = L.maximal;
  return j;
}

nlohmann::json cover_json(const Cover& c) {
  nlohmann::json j;
  j["s"] = cv_name(c.s);
  j["t"] = cv_name(c.t);
  j["d"] = c.d();
  j["r_unreduced"] = c.R_full.size();
  j["r"] = c.r();
  if (c.d() == 0) {
    j["direct"] = c.direct_label;
    return j;
  }
  j["triangles"] = nlohmann::json::array();
  for (size_t k = 0; k < c.tris.size(); ++k) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : c.tris[k].v) v.push_back(cv_name(x));
    j["triangles"].push_back({{"name", "D" + std::to_string(k)}, {"vertices", v}});
  }
  j["crossed"] = nlohmann::json::array();
  for (const auto& e : c.crossed) j["crossed"].push_back(e.label);
  j["R"] = nlohmann::json::array();
  for (size_t i = 0; i < c.r(); ++i) {
    nlohmann::json fan = nlohmann::json::array();
    for (int t = c.fan[i].first; t <= c.fan[i].second; ++t) fan.push_back("D" + std::to_string(t));
    j["R"].push_back({{"vertex", cv_name(c.R[i])},
                      {"index", c.full_index(i)},
                      {"fan", fan},
                      {"first", "D" + std::to_string(c.fan[i].first)},
                      {"last", "D" + std::to_string(c.fan[i].second)}});
  }
  j["L"] = nlohmann::json::array();
  for (const auto& v : c.L) j["L"].push_back(cv_name(v));
  j["forced"] = nlohmann::json::array();
  for (const auto& f : c.forced) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : f.tri.v) v.push_back(cv_name(x));
    j["forced"].push_back({{"name", f.name}, {"vertex", cv_name(f.vertex)}, {"triangle", v}});
  }
  return j;
}

}  // namespace fk
