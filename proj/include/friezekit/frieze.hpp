#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "friezekit/expansion.hpp"
#include "friezekit/laurent.hpp"
#include "friezekit/surface.hpp"

namespace fk {

// Entries F(i, j) for i0 <= i < i0 + cols and 0 <= j - i <= rows.
template <class V>
struct FriezeGrid {
  long n = 1;
  int rows = 0;
  long i0 = 0;
  int cols = 0;
  std::string source;  // "recurrence" or "expansion"
  std::map<std::pair<long, long>, V> entry;

  bool has(long i, long j) const { return entry.count({i, j}) > 0; }
  const V& at(long i, long j) const;
};

using IntegerFrieze = FriezeGrid<mpz_class>;
using LaurentFrieze = FriezeGrid<LaurentPoly>;

// Level of a row: rows (k-1)n+1 .. kn form level k.
int level_of_row(int row, long n);

// F(i, i+2) = q[i mod n]; cols defaults to n.
IntegerFrieze integer_frieze(const std::vector<long>& q, int rows, long i0 = 0, int cols = -1);

enum class Boundary { outer, inner };
Boundary parse_boundary(const std::string& s);

LaurentFrieze laurent_frieze(const Triangulation& T, Boundary bd, int rows, int cols,
                             bool keep_boundary = false, long i0 = 1);

IntegerFrieze specialize_ones(const LaurentFrieze& F);

// s_0 .. s_K, checked to be independent of the column.
std::vector<mpz_class> growth_coefficients(const IntegerFrieze& F, int K);
std::vector<LaurentPoly> growth_coefficients(const LaurentFrieze& F, int K);
// Growth coefficients of T from its frieze, compared with the bracelet elements.
std::vector<LaurentPoly> growth_coefficients(const Triangulation& T, int K, Boundary bd = Boundary::outer);

struct Failure {
  std::string where, lhs, rhs, diff;
};

struct Report {
  std::string name;
  int checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void check(const std::string& where, const LaurentPoly& lhs, const LaurentPoly& rhs);
  void check(const std::string& where, const mpz_class& lhs, const mpz_class& rhs);
  void expect(const std::string& where, bool ok, const std::string& detail = "");
  void merge(const Report& r);
  std::string summary() const;
  nlohmann::json to_json() const;
};

Report verify_diamond(const IntegerFrieze& F);
Report verify_diamond(const LaurentFrieze& F);

// Value of gamma_l(i, j)^C; levels l <= 0 are the kinked curves.
LaurentPoly complement_value(const Triangulation& T, long i, long j, int l, Engine e = Engine::matching);

Report verify_progression(const Triangulation& T, long i, long j, int k, int m,
                          Engine e = Engine::matching);

struct ComplementDifferences {
  std::vector<LaurentPoly> c;  // c[0] = c_1 by convention, then c_1 .. c_K
  std::vector<LaurentPoly> s;  // s_0 .. s_K
  Report report;
};
ComplementDifferences complement_differences(const Triangulation& T, long i, long j, int K);

Report verify_arithmetic(const Triangulation& T, long i, long j, int K);
// Constant differences along every column in steps of n.
Report verify_n_arithmetic(const IntegerFrieze& F);

std::string to_tsv(const IntegerFrieze& F);
std::string to_tsv(const LaurentFrieze& F);
nlohmann::json to_json(const IntegerFrieze& F);
nlohmann::json to_json(const LaurentFrieze& F);
std::string to_latex(const IntegerFrieze& F);
std::string to_latex(const LaurentFrieze& F);

}  // namespace fk
