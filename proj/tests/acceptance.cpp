#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "friezekit/bci.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/report.hpp"

using namespace fk;

namespace {

// All comparisons are exact: integers and term maps must be identical.
constexpr long kTolerance = 0;
constexpr double kBudgetSeconds = 10.0;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

Triangulation load(const std::string& name) { return Triangulation::from_file(std::string(FK_DATA_DIR) + "/" + name); }

LaurentPoly P(const std::string& s) { return parse_text(s); }

bool same(const mpz_class& a, const mpz_class& b) { return abs(a - b) <= kTolerance; }

bool row_is(const IntegerFrieze& F, long i0, int r, const std::vector<long>& want) {
  for (size_t t = 0; t < want.size(); ++t)
    if (!same(F.at(i0 + static_cast<long>(t), i0 + static_cast<long>(t) + r), want[t])) return false;
  return true;
}

void suite(Outcome& o, const std::string& file, const std::string& name, VerifyParams p = {}) {
  Report r = run_verify(load(file), name, p);
  o.need(r.ok(), file + " " + name + ": " + r.summary());
}

Outcome integer_friezes() {
  Outcome o;
  IntegerFrieze A = integer_frieze({4, 1, 2, 3, 2}, 5, 0, 5);
  o.need(row_is(A, 0, 3, {3, 1, 5, 5, 7}), "(4,1,2,3,2) row 3");
  o.need(row_is(A, 0, 4, {2, 2, 8, 17, 5}), "(4,1,2,3,2) row 4");
  o.need(row_is(A, 0, 5, {3, 3, 27, 12, 3}), "(4,1,2,3,2) row 5");
  IntegerFrieze B = integer_frieze({2, 4, 1, 5, 1}, 6, 3, 8);
  const std::vector<std::vector<long>> b = {{1, 1, 1, 1, 1, 1, 1, 1},  {5, 1, 2, 4, 1, 5, 1, 2},
                                            {4, 1, 7, 3, 4, 4, 1, 7},  {3, 3, 5, 11, 3, 3, 3, 5},
                                            {8, 2, 18, 8, 2, 8, 2, 18}, {5, 7, 13, 5, 5, 5, 7, 13}};
  for (int r = 1; r <= 6; ++r) o.need(row_is(B, 3, r, b[r - 1]), "(2,4,1,5,1) row " + std::to_string(r));
  IntegerFrieze C = integer_frieze({1, 2, 6}, 12, 0, 6);
  const std::vector<std::vector<long>> c = {
      {1, 1, 1, 1, 1, 1},     {1, 2, 6, 1, 2, 6},     {1, 11, 5, 1, 11, 5},    {5, 9, 4, 5, 9, 4},
      {4, 7, 19, 4, 7, 19},   {3, 33, 15, 3, 33, 15}, {14, 26, 11, 14, 26, 11}, {11, 19, 51, 11, 19, 51},
      {8, 88, 40, 8, 88, 40}, {37, 69, 29, 37, 69, 29}, {29, 50, 134, 29, 50, 134}, {21, 231, 105, 21, 231, 105}};
  for (int r = 1; r <= 12; ++r) o.need(row_is(C, 0, r, c[r - 1]), "(1,2,6) row " + std::to_string(r));
  return o;
}

Outcome growth() {
  Outcome o;
  IntegerFrieze F = integer_frieze({1, 2, 6}, 6 * 3 + 1, 0, 12);
  auto s = growth_coefficients(F, 6);
  o.need(same(s[1], 3) && same(s[2], 7) && same(s[3], 18), "s_1, s_2, s_3");
  for (long i = 0; i + 1 < 12; ++i)
    for (int k = 1; k <= 3; ++k)
      o.need(same(F.at(i, i + 1 + 3 * k) - F.at(i + 1, i + 3 * k), s[k]), "column independence");
  for (unsigned k = 0; k <= 3; ++k)
    o.need(chebyshev_apply(k, LaurentPoly::constant(3)) == LaurentPoly::constant(s[k]), "chebyshev " + std::to_string(k));
  for (int k = 0; k + 2 <= 6; ++k) o.need(same(s[k + 2], s[1] * s[k + 1] - s[k]), "recurrence " + std::to_string(k));
  return o;
}

Outcome worked_expansion() {
  Outcome o;
  Triangulation T = load("d5_worked.json");
  ArcSpec g = make_arc(5, 4, 2, 5);
  LaurentPoly num = P("x0*x1*x4 + 2*x1*x3*x4 + 2*x0^2 + 4*x0*x3 + 2*x3^2");
  LaurentPoly want = monomial_quotient(num, P("x0*x1*x4"));
  LaurentPoly X = laurent_of_arc(T, g, Engine::both, false);
  o.need(X.terms() == want.over(X.vars()).terms(), "term map of X");
  o.need(matchings_transfer(snake_graph(T, g)).size() == 11, "11 perfect matchings");
  Cover c = polygon_cover(T, g);
  o.need(enumerate_bci(c).size() == 11, "11 BCI tuples");
  o.need(enumerate_tpaths(c).size() == 11, "11 reduced T-paths");
  o.need(same(evaluate_ones(X), 11), "value at ones");
  return o;
}

Outcome bracelets() {
  Outcome o;
  Triangulation T = load("c31.json");
  o.need(matchings_transfer(band_graph(T, 2)).size() == 14, "14 good matchings");
  LaurentPoly num = P(
      "x1^4*x3^2 + x2^4*x3^2 + 2*x0*x1^3*x3 + 2*x0*x1*x2^2*x3 + x0^2*x1^2 + 2*x1^2*x2*x3 + 2*x2^3*x3 + 2*x0*x1*x2 + "
      "x2^2");
  LaurentPoly X2 = laurent_of_bracelet(T, 2, BraceletEngine::band);
  o.need(X2 == monomial_quotient(num, P("x1^2*x2^2*x3^2")) && X2.terms().size() == 9, "nine-term polynomial");
  LaurentPoly X1 = laurent_of_bracelet(T, 1, BraceletEngine::band);
  o.need(chebyshev_apply(2, X1) == X2, "T_2 of the 1-bracelet");
  o.need(laurent_of_bracelet(T, 2, BraceletEngine::both) == X2, "engines agree");
  Triangulation D = load("d5_intro.json");
  for (int k = 1; k <= 5; ++k) o.need(laurent_of_bracelet(D, k, BraceletEngine::both) == P("2"), "D_5 bracelet");
  return o;
}

Outcome pentagon() {
  Outcome o;
  Triangulation T = load("p5.json");
  LaurentPoly kept = laurent_of_lift(T, 5, 8, Engine::both, true);
  o.need(specialize_ones(kept, T.boundary_labels()) == P("a*b^-1 + b^-1"), "x(gamma) = a/b + 1/b");
  for (long s = 1; s <= 5; ++s) {
    long t = s + 2;
    o.need(laurent_of_lift(T, s, t, Engine::matching, false) == laurent_of_lift(T, t, s + 5, Engine::matching, false),
           "glide symmetry at " + std::to_string(s));
  }
  return o;
}

Outcome identities() {
  Outcome o;
  VerifyParams three_levels;
  three_levels.rows = 15;
  suite(o, "d5_intro.json", "diamond", three_levels);
  suite(o, "d5_worked.json", "diamond", three_levels);
  three_levels.rows = 9;
  suite(o, "c31.json", "diamond", three_levels);
  for (const char* f : {"d5_intro.json", "d5_worked.json", "c31.json"}) suite(o, f, "progression");
  VerifyParams four;
  four.level = 4;
  suite(o, "d5_intro.json", "arithmetic", four);
  suite(o, "d5_worked.json", "arithmetic", four);
  IntegerFrieze F = integer_frieze({6, 1, 4, 1, 2}, 15, 0, 5);
  o.need(F.at(1, 7) - F.at(1, 2) == 3 && F.at(1, 12) - F.at(1, 7) == 3, "common difference 3");
  o.need(F.at(2, 10) - F.at(2, 5) == 9 && F.at(2, 15) - F.at(2, 10) == 9, "common difference 9");
  o.need(verify_n_arithmetic(F).ok(), "n-arithmetic integer frieze");
  VerifyParams k3;
  k3.level = 3;
  suite(o, "c31.json", "complement-diff", k3);
  suite(o, "d5_intro.json", "complement-diff", four);
  IntegerFrieze G = integer_frieze({1, 2, 6}, 9, 0, 6);
  auto s = growth_coefficients(G, 2);
  o.need(same(G.at(3, 7), 5) && same(G.at(3, 7), s[1] * G.at(3, 4) + G.at(1, 3)), "5 = 3*1 + 2");
  o.need(same(G.at(1, 9), 19) && same(G.at(1, 9), s[2] * G.at(1, 3) + G.at(3, 7)), "19 = 7*2 + 5");
  return o;
}

Outcome bijection() {
  Outcome o;
  for (const char* f : {"d5_intro.json", "d5_worked.json", "d5_selffolded.json", "c31.json", "p5.json",
                        "p6_fan.json", "p6_zigzag.json", "p8_mixed.json"})
    suite(o, f, "bijection");
  Cover c = polygon_cover(load("d5_worked.json"), make_arc(5, 4, 2, 5));
  Lattice L = bci_lattice(c);
  o.need(L.nodes.size() == 11, "11 lattice nodes");
  PosetQ q = poset_Q(c);
  std::vector<std::pair<int, int>> arrows = q.arrows;
  std::sort(arrows.begin(), arrows.end());
  o.need(arrows == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {4, 3}, {4, 5}}, "poset arrows");
  o.need(order_ideals(q).size() == 11, "11 order ideals");
  std::string why;
  o.need(check_lattice_isomorphism(c, L, q, &why), "lattice isomorphism " + why);
  return o;
}

Outcome engines() {
  Outcome o;
  size_t arcs = 0;
  for (const char* f : {"d5_intro.json", "d5_worked.json", "c31.json"}) {
    Triangulation T = load(f);
    for (const auto& g : arc_sweep(T, 2)) {
      if (crossing_data(T, g).d() > 8) continue;
      ++arcs;
      LaurentPoly m = laurent_of_arc(T, g, Engine::matching, false);
      LaurentPoly t = laurent_of_arc(T, g, Engine::tpath, false);
      o.need(m.terms() == t.over(m.vars()).terms(), std::string(f) + " arc (" + std::to_string(g.i) + "," +
                                                        std::to_string(g.j) + ") level " + std::to_string(g.k));
    }
    for (Boundary bd : {Boundary::outer, Boundary::inner}) {
      if (bd == Boundary::inner && T.surface().kind != SurfaceKind::annulus) continue;
      Triangulation V = bd == Boundary::outer ? T : T.inner_view();
      const int rows = 3 * V.n();
      LaurentFrieze F = laurent_frieze(T, bd, rows, V.n() + 1);
      auto qd = V.quiddity();
      IntegerFrieze I = integer_frieze(std::vector<long>(qd.begin(), qd.end()), rows, F.i0, F.cols);
      for (const auto& [ij, v] : specialize_ones(F).entry)
        o.need(same(v, I.at(ij.first, ij.second)), std::string(f) + " coherence");
    }
  }
  o.need(arcs >= 60, "at least 60 arcs compared");
  o.notes.push_back(std::to_string(arcs) + " arcs");
  return o;
}

Outcome oracles() {
  Outcome o;
  size_t graphs = 0, covers = 0;
  for (const char* f : {"d5_intro.json", "d5_worked.json", "d5_selffolded.json", "c31.json", "p5.json",
                        "p6_fan.json", "p6_zigzag.json", "p8_mixed.json"}) {
    Triangulation T = load(f);
    for (const auto& g : arc_sweep(T, 2)) {
      CrossingData cd = crossing_data(T, g);
      if (cd.d() == 0) continue;
      if (cd.d() <= 6) {
        TileGraph G = snake_graph(cd);
        ++graphs;
        o.need(matchings_transfer(G) == matchings_bruteforce(G), std::string(f) + " snake graph");
      }
      Cover c = polygon_cover(T, cd);
      if (c.r() <= 4) {
        ++covers;
        auto tuples = enumerate_bci(c);
        std::sort(tuples.begin(), tuples.end());
        o.need(tuples == enumerate_bci_bruteforce(c), std::string(f) + " BCI tuples");
      }
    }
  }
  Triangulation C = load("c31.json");
  for (int k = 1; k <= 2; ++k) {
    TileGraph G = band_graph(C, k);
    ++graphs;
    std::vector<EdgeSet> good;
    for (const auto& m : matchings_bruteforce(G))
      if (is_good(G, m)) good.push_back(m);
    o.need(matchings_transfer(G) == good, "band graph k=" + std::to_string(k));
  }
  o.notes.push_back(std::to_string(graphs) + " graphs, " + std::to_string(covers) + " covers");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"integer frieze regression", integer_friezes},
      {"growth coefficients", growth},
      {"Laurent expansion regression", worked_expansion},
      {"bracelet regression", bracelets},
      {"pentagon case", pentagon},
      {"identity property suites", identities},
      {"bijection and lattice", bijection},
      {"engine cross-equivalence", engines},
      {"oracle equivalence at micro scale", oracles},
  };
  int failed = 0;
  for (size_t n = 0; n < criteria.size(); ++n) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds) o.need(false, "over the time budget");
    std::ostringstream line;
    line << "criterion " << n + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[n].first << " ("
         << static_cast<int>(secs * 1000) << " ms";
    for (const auto& note : o.notes) line << "; " << note;
    line << ")";
    std::puts(line.str().c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
