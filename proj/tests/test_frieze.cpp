#include "doctest.h"
#include "fixtures.hpp"
#include "friezekit/frieze.hpp"

using namespace fk;

namespace {

LaurentPoly P(const std::string& s) { return parse_text(s); }

std::vector<long> row_of(const IntegerFrieze& F, long i0, int r, int count) {
  std::vector<long> out;
  for (long t = 0; t < count; ++t) out.push_back(F.at(i0 + t, i0 + t + r).get_si());
  return out;
}

using Row = std::vector<long>;

}  // namespace

TEST_CASE("pentagon frieze rows") {
  IntegerFrieze F = integer_frieze({4, 1, 2, 3, 2}, 5, 0, 5);
  CHECK(row_of(F, 0, 0, 5) == Row{0, 0, 0, 0, 0});
  CHECK(row_of(F, 0, 1, 5) == Row{1, 1, 1, 1, 1});
  CHECK(row_of(F, 0, 2, 5) == Row{4, 1, 2, 3, 2});
  CHECK(row_of(F, 0, 3, 5) == Row{3, 1, 5, 5, 7});
  CHECK(row_of(F, 0, 4, 5) == Row{2, 2, 8, 17, 5});
  CHECK(row_of(F, 0, 5, 5) == Row{3, 3, 27, 12, 3});
  CHECK(verify_diamond(integer_frieze({4, 1, 2, 3, 2}, 6, 0, 10)).ok());
}

TEST_CASE("shaded frieze rows") {
  IntegerFrieze F = integer_frieze({2, 4, 1, 5, 1}, 6, 3, 8);
  CHECK(row_of(F, 3, 2, 8) == Row{5, 1, 2, 4, 1, 5, 1, 2});
  CHECK(row_of(F, 3, 3, 8) == Row{4, 1, 7, 3, 4, 4, 1, 7});
  CHECK(row_of(F, 3, 4, 8) == Row{3, 3, 5, 11, 3, 3, 3, 5});
  CHECK(row_of(F, 3, 5, 8) == Row{8, 2, 18, 8, 2, 8, 2, 18});
  CHECK(row_of(F, 3, 6, 8) == Row{5, 7, 13, 5, 5, 5, 7, 13});
}

TEST_CASE("growth frieze rows and coefficients") {
  IntegerFrieze F = integer_frieze({1, 2, 6}, 12, 0, 12);
  CHECK(row_of(F, 0, 3, 3) == Row{1, 11, 5});
  CHECK(row_of(F, 0, 6, 3) == Row{3, 33, 15});
  CHECK(row_of(F, 0, 9, 3) == Row{8, 88, 40});
  CHECK(row_of(F, 0, 11, 3) == Row{29, 50, 134});
  CHECK(row_of(F, 0, 12, 3) == Row{21, 231, 105});
  auto s = growth_coefficients(F, 3);
  CHECK(s == std::vector<mpz_class>{2, 3, 7, 18});
  CHECK_FALSE(verify_n_arithmetic(F).ok());
}

TEST_CASE("positivity errors name the entry") {
  CHECK_THROWS_WITH_AS(integer_frieze({1, 1}, 4), doctest::Contains("non-positive entry 0 at (0,3)"), Error);
  CHECK_THROWS_AS(integer_frieze({0, 2}, 4), Error);
  CHECK_THROWS_AS(integer_frieze({1, 2, 6}, 1), Error);
}

TEST_CASE("perturbed entries break at most four diamonds") {
  for (long i = 2; i <= 4; ++i)
    for (int r = 2; r <= 4; ++r) {
      IntegerFrieze F = integer_frieze({4, 1, 2, 3, 2}, 7, 0, 9);
      REQUIRE(verify_diamond(F).ok());
      F.entry[{i, i + r}] += 1;
      Report rep = verify_diamond(F);
      CHECK(rep.failures.size() >= 1);
      CHECK(rep.failures.size() <= 4);
    }
}

TEST_CASE("Laurent frieze of the punctured pentagon") {
  Triangulation T = load("d5_worked.json");
  LaurentFrieze F = laurent_frieze(T, Boundary::outer, 10, 5);
  CHECK(F.at(5, 14) ==
        P("1 + 2*x0^-1*x3 + 2*x0*x1^-1*x4^-1 + 4*x1^-1*x3*x4^-1 + 2*x0^-1*x1^-1*x3^2*x4^-1"));
  for (long i = 1; i <= 5; ++i) {
    CHECK(F.at(i, i).is_zero());
    CHECK(F.at(i, i + 1) == P("1"));
  }
  CHECK(verify_diamond(F).ok());
  auto q = T.quiddity();
  IntegerFrieze I = integer_frieze(std::vector<long>(q.begin(), q.end()), 10, 1, 5);
  IntegerFrieze S = specialize_ones(F);
  for (const auto& [ij, v] : S.entry) CHECK(v == I.at(ij.first, ij.second));
}

TEST_CASE("Laurent frieze of the annulus on both boundaries") {
  Triangulation T = load("c31.json");
  CHECK(verify_diamond(laurent_frieze(T, Boundary::outer, 9, 4)).ok());
  CHECK(verify_diamond(laurent_frieze(T, Boundary::inner, 3, 2)).ok());
  auto s = growth_coefficients(T, 3);
  auto si = growth_coefficients(T, 3, Boundary::inner);
  for (int k = 1; k <= 3; ++k) CHECK(s[k] == si[k]);
  CHECK(s[2] == laurent_of_bracelet(T, 2, BraceletEngine::band));
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == chebyshev_apply(k, s[1]).over(T.arc_labels()));
}

TEST_CASE("growth on punctured disks is two") {
  for (const char* f : {"d5_intro.json", "d5_worked.json"}) {
    auto s = growth_coefficients(load(f), 3);
    for (const auto& x : s) CHECK(x == P("2"));
  }
}

TEST_CASE("remark checks at integer level") {
  IntegerFrieze F = integer_frieze({1, 2, 6}, 9, 0, 6);
  auto s = growth_coefficients(F, 2);
  CHECK(F.at(1, 9) == 19);
  CHECK(F.at(1, 9) == s[2] * F.at(1, 3) + F.at(3, 7));
  CHECK(F.at(3, 7) == 5);
  CHECK(F.at(3, 7) == s[1] * F.at(3, 4) + F.at(1, 3));
}

TEST_CASE("progression formulas") {
  Triangulation T = load("d5_intro.json");
  for (long i = 1; i <= 5; ++i) {
    long j = i % 5 + 1;
    CHECK(verify_progression(T, i, j, 3, 1).ok());
    LaurentPoly lhs = laurent_of_arc(T, make_arc(i, j, 3, 5), Engine::matching, false);
    LaurentPoly rhs = P("2") * laurent_of_arc(T, make_arc(i, j, 1, 5), Engine::matching, false) +
                      complement_value(T, i, j, 2);
    CHECK(lhs == rhs);
  }
  Triangulation C = load("c31.json");
  for (int k = 2; k <= 4; ++k)
    for (int m = 1; m < k; ++m) {
      CHECK(verify_progression(C, 1, 2, k, m).ok());
      CHECK(verify_progression(C, 2, 2, k, m).ok());
    }
}

TEST_CASE("kinked complements are negated arcs") {
  Triangulation T = load("d5_intro.json");
  CHECK(complement_value(T, 2, 4, 0) == -laurent_of_arc(T, make_arc(2, 4, 1, 5), Engine::matching, false));
  CHECK(complement_value(T, 2, 4, -1) == -laurent_of_arc(T, make_arc(2, 4, 2, 5), Engine::matching, false));
  CHECK(complement_value(T, 3, 3, 1).is_zero());
}

TEST_CASE("complement differences") {
  Triangulation D = load("d5_intro.json");
  for (long i = 1; i <= 5; ++i)
    for (long j = 1; j <= 5; ++j) {
      auto cd = complement_differences(D, i, j, 4);
      CHECK(cd.report.ok());
      for (int k = 1; k <= 4; ++k) CHECK(cd.c[k] == cd.c[1]);
      if (i == j) CHECK(cd.c[1] == laurent_of_arc(D, make_arc(i, i, 1, 5), Engine::matching, false));
    }
  Triangulation C = load("c31.json");
  auto cd = complement_differences(C, 1, 3, 3);
  CHECK(cd.report.ok());
  CHECK(cd.c.size() == 4);
  CHECK(cd.c[0] == cd.c[1]);
}

TEST_CASE("arithmetic progressions") {
  Triangulation D = load("d5_intro.json");
  for (long i = 1; i <= 5; ++i) {
    CHECK(verify_arithmetic(D, i, i % 5 + 1, 4).ok());
    Report vacuous = verify_arithmetic(D, i, i, 1);
    CHECK(vacuous.ok());
  }
  LaurentPoly g1 = laurent_of_arc(D, make_arc(1, 2, 1, 5), Engine::matching, false);
  LaurentPoly g2 = laurent_of_arc(D, make_arc(1, 2, 2, 5), Engine::matching, false);
  CHECK(g2 - g1 == g1 + complement_value(D, 1, 2, 1));
  CHECK_THROWS_AS(verify_arithmetic(load("c31.json"), 1, 2, 3), Error);
  IntegerFrieze F = integer_frieze({6, 1, 4, 1, 2}, 15, 0, 5);
  CHECK(row_of(F, 0, 3, 5) == Row{5, 3, 3, 1, 11});
  CHECK(row_of(F, 0, 6, 5) == Row{4, 4, 7, 11, 16});
  CHECK(row_of(F, 0, 15, 5) == Row{27, 3, 27, 12, 75});
  CHECK(F.at(1, 2) == 1);
  CHECK(F.at(1, 7) == 4);
  CHECK(F.at(1, 12) == 7);
  CHECK(F.at(2, 5) == 3);
  CHECK(F.at(2, 10) == 12);
  CHECK(F.at(2, 15) == 21);
  CHECK(verify_n_arithmetic(F).ok());
}

TEST_CASE("levels and output formats") {
  CHECK(level_of_row(0, 5) == 0);
  CHECK(level_of_row(1, 5) == 1);
  CHECK(level_of_row(5, 5) == 1);
  CHECK(level_of_row(6, 5) == 2);
  IntegerFrieze F = integer_frieze({4, 1, 2, 3, 2}, 3, 0, 5);
  CHECK(to_tsv(F) == "0\t0\t0\t0\t0\n1\t1\t1\t1\t1\n4\t1\t2\t3\t2\n3\t1\t5\t5\t7\n");
  auto j = to_json(F);
  CHECK(j["grid"][3]["entries"][2] == "5");
  CHECK(j["grid"][3]["level"] == 1);
  CHECK(to_latex(F).find("\\begin{array}") == 0);
  CHECK(parse_boundary("inner") == Boundary::inner);
  CHECK_THROWS_AS(parse_boundary("left"), Error);
}

TEST_CASE("failure reports carry both sides and the first difference") {
  Report r;
  r.name = "demo";
  r.check("demo identity", P("x + 1"), P("x + 2"));
  r.check("agreeing identity", P("x"), P("x"));
  CHECK(r.checked == 2);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].lhs == "1 + x");
  CHECK(r.failures[0].rhs == "2 + x");
  CHECK_FALSE(r.failures[0].diff.empty());
  CHECK(r.to_json()["ok"] == false);
}
