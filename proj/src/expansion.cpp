#include "friezekit/expansion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "friezekit/bci.hpp"

namespace fk {

namespace {

CV other_end(const CrossedEdge& e, const CV& x) { return e.rho == x ? e.lambda : e.rho; }

CV opposite_of(const LiftTri& t, const CV& a, const CV& b) {
  for (const auto& x : t.v)
    if (!(x == a) && !(x == b)) return x;
  throw internal_error("degenerate triangle");
}

std::pair<std::string, bool> side_label(const LiftTri& t1, const LiftTri& t2, const CV& a,
                                        const CV& b) {
  for (const LiftTri* t : {&t1, &t2}) {
    int k = t->side_index(a, b);
    if (k >= 0) return {t->side[k], t->boundary[k]};
  }
  throw internal_error("tile side not found in its triangles");
}

bool same_edge(const CV& a, const CV& b, const CV& c, const CV& d) {
  return (a == c && b == d) || (a == d && b == c);
}

// Builds tiles from triangles D_0..D_d and crossed edges e_1..e_d.
TileGraph build_tiles(const std::vector<LiftTri>& tris, const std::vector<CrossedEdge>& es) {
  TileGraph G;
  const size_t d = es.size();
  if (d == 0) return G;
  std::vector<std::array<int, 4>> vid(d);  // SW, SE, NE, NW graph ids
  auto new_edge = [&](int u, int v, const std::pair<std::string, bool>& lab) {
    G.edges.push_back({u, v, lab.first, lab.second});
    return static_cast<int>(G.edges.size()) - 1;
  };
  for (size_t t = 0; t < d; ++t) {
    Tile tile;
    tile.diagonal = es[t].label;
    const LiftTri& A = tris[t];
    const LiftTri& B = tris[t + 1];
    std::array<CV, 4>& c = tile.corner;
    if (t == 0) {
      c[0] = opposite_of(A, es[0].rho, es[0].lambda);
      c[1] = es[0].rho;
      c[3] = es[0].lambda;
      c[2] = opposite_of(B, es[0].rho, es[0].lambda);
      for (int q = 0; q < 4; ++q) vid[t][q] = G.vertices++;
      tile.edge[S] = new_edge(vid[t][0], vid[t][1], side_label(A, B, c[0], c[1]));
      tile.edge[W] = new_edge(vid[t][0], vid[t][3], side_label(A, B, c[0], c[3]));
      tile.edge[E] = new_edge(vid[t][1], vid[t][2], side_label(A, B, c[1], c[2]));
      tile.edge[N] = new_edge(vid[t][3], vid[t][2], side_label(A, B, c[3], c[2]));
    } else {
      Tile& prev = G.tiles.back();
      const std::array<CV, 4>& pc = prev.corner;
      const CrossedEdge& ep = es[t - 1];
      // The glue side is the side of A that is neither e_{t-1} nor e_t.
      auto is_glue = [&](const CV& x, const CV& y) {
        return A.side_index(x, y) >= 0 && !same_edge(x, y, ep.rho, ep.lambda) &&
               !same_edge(x, y, es[t].rho, es[t].lambda);
      };
      bool is_north = is_glue(pc[3], pc[2]);
      if (!is_north && !is_glue(pc[1], pc[2]))
        throw internal_error("snake glue edge is neither north nor east");
      if (is_north) {
        prev.glue = 'N';
        c[0] = pc[3];
        c[1] = pc[2];
        c[3] = other_end(ep, c[0]);
        vid[t][0] = vid[t - 1][3];
        vid[t][1] = vid[t - 1][2];
        tile.x = prev.x;
        tile.y = prev.y + 1;
      } else {
        prev.glue = 'E';
        c[0] = pc[1];
        c[3] = pc[2];
        c[1] = other_end(ep, c[0]);
        vid[t][0] = vid[t - 1][1];
        vid[t][3] = vid[t - 1][2];
        tile.x = prev.x + 1;
        tile.y = prev.y;
      }
      for (const CV& q : B.v)
        if (!A.has(q)) c[2] = q;
      if (is_north) {
        vid[t][3] = G.vertices++;
        vid[t][2] = G.vertices++;
        tile.edge[S] = prev.edge[N];
        tile.edge[W] = new_edge(vid[t][0], vid[t][3], side_label(A, B, c[0], c[3]));
      } else {
        vid[t][1] = G.vertices++;
        vid[t][2] = G.vertices++;
        tile.edge[W] = prev.edge[E];
        tile.edge[S] = new_edge(vid[t][0], vid[t][1], side_label(A, B, c[0], c[1]));
      }
      tile.edge[N] = new_edge(vid[t][3], vid[t][2], side_label(A, B, c[3], c[2]));
      tile.edge[E] = new_edge(vid[t][1], vid[t][2], side_label(A, B, c[1], c[2]));
      if (!same_edge(c[3], c[1], es[t].rho, es[t].lambda))
        throw internal_error("tile diagonal misplaced");
    }
    G.tiles.push_back(tile);
  }
  return G;
}

}  // namespace

TileGraph snake_graph(const CrossingData& cd) {
  if (cd.d() == 0) throw input_error("arc crosses no arc of the triangulation");
  return build_tiles(cd.tris, cd.edges);
}

TileGraph snake_graph(const Triangulation& T, const ArcSpec& g) {
  return snake_graph(crossing_data(T, g));
}

TileGraph band_graph(const Triangulation& T, int k) {
  BandData bd = band_data(T, k);
  TileGraph G = build_tiles(bd.tris, bd.edges);
  G.band = true;
  const LiftTri& D0 = bd.tris.front();
  int xs = -1;
  for (int q = 0; q < 3; ++q)
    if (D0.v[q].kind == D0.v[(q + 1) % 3].kind) xs = q;
  if (xs < 0) throw internal_error("band cut edge not found");
  CV a = D0.v[xs], b = D0.v[(xs + 1) % 3];
  auto shifted = [&](const CV& v) {
    if (v.kind == CV::lower) return CV::lo(v.pos + bd.shift_lower);
    return CV::up(v.pos + bd.shift_upper);
  };
  CV ga = shifted(a), gb = shifted(b);
  Tile& first = G.tiles.front();
  Tile& last = G.tiles.back();
  int fe = -1, le = -1;
  for (int s = 0; s < 4; ++s) {
    const auto& c = first.corner;
    static const int ends[4][2] = {{3, 2}, {1, 2}, {0, 1}, {0, 3}};
    if (same_edge(c[ends[s][0]], c[ends[s][1]], a, b)) fe = s;
    const auto& l = last.corner;
    if (same_edge(l[ends[s][0]], l[ends[s][1]], ga, gb)) le = s;
  }
  if (fe < 0 || le < 0) throw internal_error("band identification edges not found");
  int keep = first.edge[fe], drop = last.edge[le];
  // Merge endpoints so that x in the first tile meets g^k x in the last.
  std::vector<int> parent(G.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  // Vertex ids of corners are recoverable from edges: S=(SW,SE), N=(NW,NE).
  auto corner_ids = [&](const Tile& tile) {
    std::array<int, 4> ids{};
    ids[0] = G.edges[tile.edge[S]].u;
    ids[1] = G.edges[tile.edge[S]].v;
    ids[3] = G.edges[tile.edge[N]].u;
    ids[2] = G.edges[tile.edge[N]].v;
    return ids;
  };
  auto fid = corner_ids(first), lid = corner_ids(last);
  for (int q = 0; q < 4; ++q)
    for (int r = 0; r < 4; ++r)
      if ((first.corner[q] == a && last.corner[r] == ga) || (first.corner[q] == b && last.corner[r] == gb))
        parent[find(lid[r])] = find(fid[q]);
  std::map<int, int> compact;
  for (int v = 0; v < G.vertices; ++v) compact.emplace(find(v), static_cast<int>(compact.size()));
  std::vector<GraphEdge> edges;
  std::vector<int> remap(G.edges.size(), -1);
  for (size_t e = 0; e < G.edges.size(); ++e) {
    if (static_cast<int>(e) == drop) continue;
    remap[e] = static_cast<int>(edges.size());
    GraphEdge ge = G.edges[e];
    ge.u = compact[find(ge.u)];
    ge.v = compact[find(ge.v)];
    edges.push_back(ge);
  }
  remap[drop] = remap[keep];
  G.edges = std::move(edges);
  G.vertices = static_cast<int>(compact.size());
  for (auto& tile : G.tiles)
    for (auto& e : tile.edge) e = remap[e];
  return G;
}

bool is_good(const TileGraph& G, const EdgeSet& m) {
  std::vector<char> in(G.edges.size(), 0);
  for (int e : m) in[e] = 1;
  for (const auto& t : G.tiles) {
    int c = 0;
    for (int e : t.edge) c += in[e];
    if (c >= 2) return true;
  }
  return false;
}

std::vector<EdgeSet> matchings_transfer(const TileGraph& G) {
  const int V = G.vertices;
  const int Ecount = static_cast<int>(G.edges.size());
  std::vector<int> last(V, -1);
  for (int e = 0; e < Ecount; ++e) {
    last[G.edges[e].u] = std::max(last[G.edges[e].u], e);
    last[G.edges[e].v] = std::max(last[G.edges[e].v], e);
  }
  std::vector<std::vector<int>> closing(Ecount);
  for (int v = 0; v < V; ++v)
    if (last[v] >= 0) closing[last[v]].push_back(v);
  std::vector<EdgeSet> out;
  std::vector<char> matched(V, 0);
  EdgeSet cur;
  std::function<void(int)> go = [&](int e) {
    if (e == Ecount) {
      if (!G.band || is_good(G, cur)) out.push_back(cur);
      return;
    }
    const auto& ge = G.edges[e];
    auto closes_ok = [&]() {
      for (int v : closing[e])
        if (!matched[v]) return false;
      return true;
    };
    if (!matched[ge.u] && !matched[ge.v] && ge.u != ge.v) {
      matched[ge.u] = matched[ge.v] = 1;
      cur.push_back(e);
      if (closes_ok()) go(e + 1);
      cur.pop_back();
      matched[ge.u] = matched[ge.v] = 0;
    }
    if (closes_ok()) go(e + 1);
  };
  for (int v = 0; v < V; ++v)
    if (last[v] < 0) return out;
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> matchings_bruteforce(const TileGraph& G) {
  const size_t Ecount = G.edges.size();
  if (Ecount > 24) throw input_error("brute force limited to 24 edges");
  std::vector<EdgeSet> out;
  for (unsigned long mask = 0; mask < (1UL << Ecount); ++mask) {
    std::vector<int> deg(G.vertices, 0);
    for (size_t e = 0; e < Ecount; ++e)
      if (mask >> e & 1) {
        ++deg[G.edges[e].u];
        ++deg[G.edges[e].v];
      }
    if (!std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; })) continue;
    EdgeSet m;
    for (size_t e = 0; e < Ecount; ++e)
      if (mask >> e & 1) m.push_back(static_cast<int>(e));
    if (G.band && !is_good(G, m)) continue;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LaurentPoly label_var(const std::string& label) { return LaurentPoly::variable(label); }

}  // namespace

LaurentPoly edge_weight(const TileGraph& G, const EdgeSet& m, bool keep_boundary) {
  LaurentPoly w = LaurentPoly::constant(1);
  for (int e : m)
    if (keep_boundary || !G.edges[e].boundary) w *= label_var(G.edges[e].label);
  return w;
}

std::vector<Matching> enumerate_matchings(const TileGraph& G, bool keep_boundary) {
  std::vector<Matching> out;
  for (auto& m : matchings_transfer(G)) out.push_back({m, edge_weight(G, m, keep_boundary)});
  return out;
}

LaurentPoly matching_polynomial(const TileGraph& G, bool keep_boundary) {
  if (G.band) {
    LaurentPoly sum;
    for (const auto& m : matchings_transfer(G)) sum += edge_weight(G, m, keep_boundary);
    return sum;
  }
  const int V = G.vertices;
  const int Ecount = static_cast<int>(G.edges.size());
  std::vector<int> last(V, -1);
  for (int e = 0; e < Ecount; ++e) {
    last[G.edges[e].u] = std::max(last[G.edges[e].u], e);
    last[G.edges[e].v] = std::max(last[G.edges[e].v], e);
  }
  using State = std::vector<bool>;
  std::map<State, LaurentPoly> states;
  states[State(V, false)] = LaurentPoly::constant(1);
  for (int e = 0; e < Ecount; ++e) {
    const auto& ge = G.edges[e];
    LaurentPoly w = (keep_boundary || !ge.boundary) ? label_var(ge.label) : LaurentPoly::constant(1);
    std::map<State, LaurentPoly> next;
    for (auto& [st, poly] : states) {
      auto emit = [&](State s, const LaurentPoly& p) {
        for (int v : {ge.u, ge.v})
          if (last[v] == e) {
            if (!s[v]) return;
            s[v] = false;
          }
        next[s] += p;
      };
      emit(st, poly);
      if (!st[ge.u] && !st[ge.v]) {
        State s = st;
        s[ge.u] = s[ge.v] = true;
        emit(s, poly * w);
      }
    }
    states = std::move(next);
  }
  auto it = states.find(State(V, false));
  return it == states.end() ? LaurentPoly() : it->second;
}

LaurentPoly crossing_monomial(const TileGraph& G) {
  LaurentPoly m = LaurentPoly::constant(1);
  for (const auto& t : G.tiles) m *= label_var(t.diagonal);
  return m;
}

Engine parse_engine(const std::string& s) {
  if (s == "matching") return Engine::matching;
  if (s == "tpath") return Engine::tpath;
  if (s == "both") return Engine::both;
  throw input_error("unknown engine '" + s + "'");
}

BraceletEngine parse_bracelet_engine(const std::string& s) {
  if (s == "band") return BraceletEngine::band;
  if (s == "chebyshev") return BraceletEngine::chebyshev;
  if (s == "both") return BraceletEngine::both;
  throw input_error("unknown bracelet engine '" + s + "'");
}

namespace {

LaurentPoly over_table(const Triangulation& T, const LaurentPoly& p, bool keep_boundary) {
  return p.over(keep_boundary ? T.variables() : T.arc_labels());
}

// An ell-loop carries the product of its radius and the notched radius,
// which takes the loop's label.
LaurentPoly loop_weights(const Triangulation& T, LaurentPoly p) {
  for (const auto& a : T.arcs())
    if (a.kind == ArcKind::ell_loop) p = absorb_factor(p, a.label, a.radius);
  return p;
}

void check_agree(const LaurentPoly& a, const LaurentPoly& b, const std::string& what) {
  if (a != b)
    throw Error(ErrorKind::verification, "engine disagreement on " + what + ": " + to_text(a) +
                                             " vs " + to_text(b) + " (" + first_difference(a, b) + ")");
}

}  // namespace

LaurentPoly laurent_of_lift(const Triangulation& T, long s, long t, Engine e, bool keep_boundary) {
  if (T.surface().kind == SurfaceKind::polygon) {
    if (t - s == T.n()) return over_table(T, LaurentPoly(), keep_boundary);
    if (t - s > T.n()) throw input_error("polygon arcs span at most n positions");
  }
  if (t == s) return over_table(T, LaurentPoly(), keep_boundary);
  CrossingData cd = crossing_data(T, s, t);
  if (cd.d() == 0) {
    if (cd.direct_boundary && !keep_boundary) return over_table(T, LaurentPoly::constant(1), false);
    return over_table(T, loop_weights(T, label_var(cd.direct_label)), keep_boundary);
  }
  std::string what = "arc (" + std::to_string(s) + "," + std::to_string(t) + ")";
  LaurentPoly viam, viat;
  if (e != Engine::tpath) {
    TileGraph G = snake_graph(cd);
    viam = over_table(
        T, loop_weights(T, monomial_quotient(matching_polynomial(G, keep_boundary), crossing_monomial(G))),
        keep_boundary);
  }
  if (e != Engine::matching) viat = over_table(T, loop_weights(T, expand_via_bci(T, cd, keep_boundary)), keep_boundary);
  if (e == Engine::both) check_agree(viam, viat, what);
  return e == Engine::tpath ? viat : viam;
}

LaurentPoly laurent_of_arc(const Triangulation& T, const ArcSpec& g, Engine e, bool keep_boundary) {
  return laurent_of_lift(T, g.lift_from(), g.lift_to(), e, keep_boundary);
}

LaurentPoly laurent_of_bracelet(const Triangulation& T, int k, BraceletEngine e, bool keep_boundary) {
  if (T.surface().kind == SurfaceKind::punctured_disk) {
    if (k < 0) throw input_error("bracelet wrap count must be non-negative");
    return over_table(T, LaurentPoly::constant(2), keep_boundary);
  }
  if (T.surface().kind != SurfaceKind::annulus)
    throw input_error("bracelets need a punctured disk or an annulus");
  if (k < 1) throw input_error("bracelet wrap count must be at least 1 on an annulus");
  auto band = [&](int kk) {
    TileGraph G = band_graph(T, kk);
    return over_table(T, monomial_quotient(matching_polynomial(G, keep_boundary), crossing_monomial(G)),
                      keep_boundary);
  };
  LaurentPoly vb, vc;
  if (e != BraceletEngine::chebyshev) vb = band(k);
  if (e != BraceletEngine::band) vc = over_table(T, chebyshev_apply(k, band(1)), keep_boundary);
  if (e == BraceletEngine::both) check_agree(vb, vc, "bracelet " + std::to_string(k));
  return e == BraceletEngine::chebyshev ? vc : vb;
}

nlohmann::json graph_to_json(const TileGraph& G) {
  nlohmann::json j;
  j["band"] = G.band;
  j["vertices"] = G.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : G.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  j["tiles"] = nlohmann::json::array();
  for (const auto& t : G.tiles) {
    nlohmann::json tj{{"diagonal", t.diagonal},
                      {"x", t.x},
                      {"y", t.y},
                      {"N", G.edges[t.edge[N]].label},
                      {"E", G.edges[t.edge[E]].label},
                      {"S", G.edges[t.edge[S]].label},
                      {"W", G.edges[t.edge[W]].label},
                      {"edges", {t.edge[N], t.edge[E], t.edge[S], t.edge[W]}}};
    if (t.glue) tj["glue"] = std::string(1, t.glue);
    j["tiles"].push_back(tj);
  }
  return j;
}

}  // namespace fk
