#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "friezekit/expansion.hpp"
#include "friezekit/report.hpp"

using namespace fk;

namespace {

LaurentPoly P(const std::string& s) { return parse_text(s); }

const char* kWorked = "1 + 2*x0^-1*x3 + 2*x0*x1^-1*x4^-1 + 4*x1^-1*x3*x4^-1 + 2*x0^-1*x1^-1*x3^2*x4^-1";

const char* kBrac2 =
    "x1^4*x3^2 + x2^4*x3^2 + 2*x0*x1^3*x3 + 2*x0*x1*x2^2*x3 + x0^2*x1^2 + 2*x1^2*x2*x3 + 2*x2^3*x3 "
    "+ 2*x0*x1*x2 + x2^2";

std::string side_labels(const TileGraph& G, const Tile& t) {
  std::string s;
  for (int k : {W, S, N, E}) s += G.edges[t.edge[k]].label + (k == E ? "" : ",");
  return s;
}

}  // namespace

TEST_CASE("snake graph of the worked arc") {
  Triangulation T = load("d5_worked.json");
  TileGraph G = snake_graph(T, make_arc(5, 4, 2, 5));
  REQUIRE(G.tiles.size() == 5);
  std::vector<std::string> diag;
  for (const auto& t : G.tiles) diag.push_back(t.diagonal);
  CHECK(diag == std::vector<std::string>{"x0", "x4", "x1", "x1", "x4"});
  std::vector<std::string> sides;
  for (const auto& t : G.tiles) sides.push_back(side_labels(G, t));
  CHECK(sides == std::vector<std::string>{"b4,b5,x3,x4", "x0,x3,x1,x1", "x1,x4,x1,x4", "x4,x1,x4,x1", "x1,x1,x0,x3"});
  for (size_t j = 0; j + 1 < G.tiles.size(); ++j) {
    const Tile& a = G.tiles[j];
    const Tile& b = G.tiles[j + 1];
    if (a.glue == 'N') CHECK(a.edge[N] == b.edge[S]);
    if (a.glue == 'E') CHECK(a.edge[E] == b.edge[W]);
    CHECK((a.glue == 'N' || a.glue == 'E'));
  }
  CHECK(G.tiles.back().glue == 0);
  CHECK(matchings_transfer(G).size() == 11);
  CHECK(matchings_bruteforce(G) == matchings_transfer(G));
}

TEST_CASE("expansion of the worked arc") {
  Triangulation T = load("d5_worked.json");
  ArcSpec g = make_arc(5, 4, 2, 5);
  LaurentPoly X = laurent_of_arc(T, g, Engine::matching, false);
  CHECK(X == P(kWorked));
  CHECK(laurent_of_arc(T, g, Engine::tpath, false) == X);
  CHECK(laurent_of_arc(T, g, Engine::both, false) == X);
  CHECK(evaluate_ones(X) == 11);
}

TEST_CASE("pentagon arc keeping the boundary") {
  Triangulation T = load("p5.json");
  ArcSpec g = make_arc(3, 5, 1, 5);
  LaurentPoly kept = laurent_of_lift(T, 5, 8, Engine::matching, true);
  CHECK(specialize_ones(kept, T.boundary_labels()) == P("a*b^-1 + b^-1"));
  CHECK(laurent_of_lift(T, 5, 8, Engine::both, false) == P("a*b^-1 + b^-1"));
  CHECK(laurent_of_arc(T, g, Engine::both, false) != LaurentPoly());
}

TEST_CASE("conventions for arcs of the triangulation and boundary edges") {
  Triangulation T = load("p5.json");
  CHECK(laurent_of_lift(T, 1, 3, Engine::both, false) == P("a"));
  CHECK(laurent_of_lift(T, 1, 2, Engine::both, false) == P("1"));
  CHECK(laurent_of_lift(T, 1, 2, Engine::matching, true) == P("b1"));
  Triangulation D = load("d5_intro.json");
  CHECK(laurent_of_arc(D, make_arc(1, 3, 1, 5), Engine::both, false) == P("x2"));
  CHECK(laurent_of_arc(D, make_arc(1, 2, 1, 5), Engine::both, false) == P("1"));
}

TEST_CASE("single crossing and fan arcs") {
  Triangulation T = load("p5.json");
  TileGraph G = snake_graph(T, make_arc(2, 4, 1, 5));
  REQUIRE(G.tiles.size() == 1);
  CHECK(G.tiles[0].diagonal == "a");
  std::multiset<std::string> sides;
  for (int k = 0; k < 4; ++k) sides.insert(G.edges[G.tiles[0].edge[k]].label);
  CHECK(sides == std::multiset<std::string>{"b", "b1", "b2", "b3"});
  CHECK(matchings_transfer(G).size() == 2);
  Triangulation F = load("p6_fan.json");
  TileGraph H = snake_graph(F, make_arc(2, 5, 1, 6));
  CHECK(H.tiles.size() == 2);
  CHECK(matchings_transfer(H).size() == 3);
  CHECK(matchings_bruteforce(H).size() == 3);
}

TEST_CASE("band graph of the annulus") {
  Triangulation T = load("c31.json");
  TileGraph G = band_graph(T, 2);
  REQUIRE(G.tiles.size() == 6);
  CHECK(G.band);
  std::vector<std::string> diag;
  for (const auto& t : G.tiles) diag.push_back(t.diagonal);
  CHECK(diag == std::vector<std::string>{"x1", "x2", "x3", "x1", "x2", "x3"});
  auto good = matchings_transfer(G);
  CHECK(good.size() == 14);
  auto all = matchings_bruteforce(G);
  std::set<EdgeSet> perfect(all.begin(), all.end());
  for (const auto& m : good) {
    CHECK(is_good(G, m));
    CHECK(perfect.count(m) == 1);
  }
  CHECK(band_graph(T, 1).tiles.size() == 3);
  CHECK_THROWS_AS(band_graph(T, 0), Error);
  CHECK_THROWS_AS(band_graph(load("d5_intro.json"), 1), Error);
}

TEST_CASE("bracelets") {
  Triangulation T = load("c31.json");
  LaurentPoly X2 = laurent_of_bracelet(T, 2, BraceletEngine::band);
  LaurentPoly num = P(kBrac2);
  CHECK(X2 == monomial_quotient(num, P("x1^2*x2^2*x3^2")));
  CHECK(X2.terms().size() == 9);
  LaurentPoly X1 = laurent_of_bracelet(T, 1, BraceletEngine::band);
  CHECK(X1 * X1 - P("2") == X2);
  CHECK(laurent_of_bracelet(T, 2, BraceletEngine::chebyshev) == X2);
  for (int k = 1; k <= 4; ++k)
    CHECK(laurent_of_bracelet(T, k, BraceletEngine::both) == chebyshev_apply(k, X1));
  Triangulation D = load("d5_intro.json");
  for (int k = 0; k <= 5; ++k) CHECK(laurent_of_bracelet(D, k, BraceletEngine::both) == P("2"));
}

TEST_CASE("band periodicity") {
  Triangulation T = load("c31.json");
  TileGraph one = band_graph(T, 1);
  for (int k = 2; k <= 4; ++k) {
    TileGraph G = band_graph(T, k);
    REQUIRE(G.tiles.size() == k * one.tiles.size());
    for (size_t j = 0; j < G.tiles.size(); ++j)
      CHECK(G.tiles[j].diagonal == one.tiles[j % one.tiles.size()].diagonal);
  }
}

TEST_CASE("engines agree and matching counts match") {
  for (const char* f : {"d5_intro.json", "d5_worked.json", "c31.json", "p6_zigzag.json", "p8_mixed.json"}) {
    Triangulation T = load(f);
    for (const auto& g : arc_sweep(T, 2)) {
      CrossingData cd = crossing_data(T, g);
      if (cd.d() == 0 || cd.d() > 8) continue;
      CAPTURE(f);
      CAPTURE(g.i);
      CAPTURE(g.j);
      CAPTURE(g.k);
      LaurentPoly m = laurent_of_arc(T, g, Engine::matching, false);
      CHECK(laurent_of_arc(T, g, Engine::tpath, false) == m);
      TileGraph G = snake_graph(cd);
      auto ms = matchings_transfer(G);
      if (G.tiles.size() <= 6) CHECK(matchings_bruteforce(G) == ms);
      LaurentPoly kept = laurent_of_arc(T, g, Engine::matching, true);
      CHECK(evaluate_ones(kept * crossing_monomial(G)) == static_cast<long>(ms.size()));
    }
  }
}

TEST_CASE("skein identity on diagonals") {
  for (const char* f : {"d5_intro.json", "d5_worked.json", "c31.json"}) {
    Triangulation T = load(f);
    for (long i = 1; i <= T.n(); ++i)
      for (long m = 1; m <= 2 * T.n(); ++m) {
        CAPTURE(f);
        CAPTURE(i);
        CAPTURE(m);
        auto x = [&](long s, long t) { return laurent_of_lift(T, s, t, Engine::matching, false); };
        CHECK(x(i, i + m) * x(i + 1, i + m + 1) - x(i + 1, i + m) * x(i, i + m + 1) == P("1"));
      }
  }
}

TEST_CASE("glide symmetry on polygons") {
  for (const char* f : {"p5.json", "p6_fan.json", "p6_zigzag.json", "p8_mixed.json"}) {
    Triangulation T = load(f);
    const long n = T.n();
    for (long s = 1; s <= n; ++s)
      for (long t = s + 2; t <= s + n - 2; ++t) {
        CAPTURE(f);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(laurent_of_lift(T, s, t, Engine::matching, false) ==
              laurent_of_lift(T, t, s + n, Engine::matching, false));
      }
  }
}

TEST_CASE("polygon span errors") {
  Triangulation T = load("p5.json");
  CHECK(laurent_of_lift(T, 1, 6, Engine::matching, false).is_zero());
  CHECK(laurent_of_lift(T, 3, 3, Engine::matching, false).is_zero());
  CHECK_THROWS_AS(laurent_of_lift(T, 1, 7, Engine::matching, false), Error);
  CHECK_THROWS_AS(laurent_of_lift(T, 3, 2, Engine::matching, false), Error);
  CHECK_THROWS_AS(parse_engine("fast"), Error);
}

TEST_CASE("graph export") {
  TileGraph G = snake_graph(load("d5_worked.json"), make_arc(5, 4, 2, 5));
  auto j = graph_to_json(G);
  CHECK(j.at("tiles").size() == 5);
}
