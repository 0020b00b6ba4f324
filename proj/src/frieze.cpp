#include "friezekit/frieze.hpp"

#include <cctype>
#include <sstream>
#include <type_traits>

namespace fk {

namespace {

std::string pos(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string value_text(const mpz_class& v) { return v.get_str(); }
std::string value_text(const LaurentPoly& v) { return to_text(v); }

template <class V>
V constant_of(long c) {
  if constexpr (std::is_same_v<V, mpz_class>)
    return mpz_class(c);
  else
    return LaurentPoly::constant(c);
}

template <class V>
Report diamond_report(const FriezeGrid<V>& F) {
  Report r;
  r.name = "diamond";
  for (const auto& [ij, a] : F.entry) {
    auto [i, j] = ij;
    if (j < i + 1) continue;
    if (!F.has(i + 1, j + 1) || !F.has(i + 1, j) || !F.has(i, j + 1)) continue;
    V lhs = a * F.at(i + 1, j + 1) - F.at(i + 1, j) * F.at(i, j + 1);
    r.check("diamond at " + pos(i, j), lhs, constant_of<V>(1));
  }
  return r;
}

template <class V>
std::vector<V> growth_from(const FriezeGrid<V>& F, int K) {
  const long n = F.n;
  if (K < 0) throw input_error("K must be non-negative");
  if (F.rows < K * n + 1) throw input_error("frieze window too small for growth coefficient " + std::to_string(K));
  std::vector<V> s{constant_of<V>(2)};
  for (int k = 1; k <= K; ++k) {
    bool found = false;
    V first;
    for (long i = F.i0; i < F.i0 + F.cols; ++i) {
      if (!F.has(i, i + 1 + k * n) || !F.has(i + 1, i + k * n)) continue;
      V v = F.at(i, i + 1 + k * n) - F.at(i + 1, i + k * n);
      if (!found) {
        first = v;
        found = true;
      } else if (!(v == first)) {
        throw Error(ErrorKind::verification, "growth coefficient " + std::to_string(k) + " depends on the column at i=" +
                                                 std::to_string(i) + ": " + value_text(v) + " vs " + value_text(first));
      }
    }
    if (!found) throw input_error("frieze window too narrow for growth coefficients");
    s.push_back(first);
  }
  return s;
}

template <class V>
std::string tsv(const FriezeGrid<V>& F) {
  std::ostringstream os;
  for (int r = 0; r <= F.rows; ++r) {
    for (long i = F.i0; i < F.i0 + F.cols; ++i) os << (i > F.i0 ? "\t" : "") << value_text(F.at(i, i + r));
    os << "\n";
  }
  return os.str();
}

template <class V>
nlohmann::json json_of(const FriezeGrid<V>& F) {
  nlohmann::json j;
  j["n"] = F.n;
  j["rows"] = F.rows;
  j["cols"] = F.cols;
  j["i0"] = F.i0;
  j["source"] = F.source;
  j["grid"] = nlohmann::json::array();
  for (int r = 0; r <= F.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (long i = F.i0; i < F.i0 + F.cols; ++i) row.push_back(value_text(F.at(i, i + r)));
    j["grid"].push_back({{"row", r}, {"level", level_of_row(r, F.n)}, {"entries", row}});
  }
  j["entries"] = nlohmann::json::array();
  for (const auto& [ij, v] : F.entry) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", value_text(v)}});
  return j;
}

std::string latex_text(const mpz_class& v) { return v.get_str(); }

std::string latex_text(const LaurentPoly& p) {
  std::string s = to_text(p);
  std::string out;
  for (size_t q = 0; q < s.size(); ++q) {
    if (s[q] == '*') continue;
    if (s[q] == '^') {
      size_t e = q + 1;
      while (e < s.size() && (s[e] == '-' || std::isdigit(static_cast<unsigned char>(s[e])))) ++e;
      out += "^{" + s.substr(q + 1, e - q - 1) + "}";
      q = e - 1;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(s[q]))) {
      size_t e = q;
      while (e < s.size() && std::isalpha(static_cast<unsigned char>(s[e]))) ++e;
      size_t d = e;
      while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
      out += s.substr(q, e - q);
      if (d > e) out += "_{" + s.substr(e, d - e) + "}";
      q = d - 1;
      continue;
    }
    out += s[q];
  }
  return out;
}

// Rows are staggered so that each diamond reads as in the usual drawing.
template <class V>
std::string latex(const FriezeGrid<V>& F) {
  const int width = 2 * F.cols + F.rows;
  std::ostringstream os;
  os << "\\begin{array}{" << std::string(width, 'c') << "}\n";
  for (int r = 0; r <= F.rows; ++r) {
    std::vector<std::string> cells(width);
    for (long i = F.i0; i < F.i0 + F.cols; ++i) cells[r + 2 * (i - F.i0)] = latex_text(F.at(i, i + r));
    for (int c = 0; c < width; ++c) os << (c ? " & " : "") << cells[c];
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

const Triangulation& view(const Triangulation& T, Boundary bd, Triangulation& store) {
  if (bd == Boundary::outer) return T;
  if (T.surface().kind != SurfaceKind::annulus) throw input_error("only an annulus has an inner boundary");
  store = T.inner_view();
  return store;
}

}  // namespace

template <class V>
const V& FriezeGrid<V>::at(long i, long j) const {
  auto it = entry.find({i, j});
  if (it == entry.end()) throw input_error("entry " + pos(i, j) + " is outside the window");
  return it->second;
}

template struct FriezeGrid<mpz_class>;
template struct FriezeGrid<LaurentPoly>;

int level_of_row(int row, long n) {
  if (row <= 0) return 0;
  return static_cast<int>((row - 1) / n) + 1;
}

IntegerFrieze integer_frieze(const std::vector<long>& q, int rows, long i0, int cols) {
  const long n = static_cast<long>(q.size());
  if (n < 1) throw input_error("empty quiddity sequence");
  for (long a : q)
    if (a <= 0) throw input_error("quiddity entries must be positive integers");
  if (rows < 2) throw input_error("rows must be at least 2");
  if (cols < 0) cols = static_cast<int>(n);
  auto md = [n](long i) { return ((i % n) + n) % n; };
  std::vector<std::vector<mpz_class>> row(rows + 1, std::vector<mpz_class>(n));
  for (long i = 0; i < n; ++i) {
    row[0][i] = 0;
    row[1][i] = 1;
    row[2][i] = q[i];
  }
  for (int r = 2; r < rows; ++r) {
    for (long i = 0; i < n; ++i) {
      const mpz_class num = row[r][i] * row[r][md(i + 1)] - 1;
      const mpz_class& den = row[r - 1][md(i + 1)];
      if (den == 0 || num % den != 0)
        throw Error(ErrorKind::input, "non-integral entry at " + pos(i, i + r + 1) +
                                          ": quiddity sequence is not realizable");
      mpz_class v = num / den;
      if (v <= 0)
        throw Error(ErrorKind::input, "non-positive entry " + v.get_str() + " at " + pos(i, i + r + 1) +
                                          ": quiddity sequence is not realizable");
      row[r + 1][i] = v;
    }
  }
  IntegerFrieze F;
  F.n = n;
  F.rows = rows;
  F.i0 = i0;
  F.cols = cols;
  F.source = "recurrence";
  for (long i = i0; i < i0 + cols; ++i)
    for (int r = 0; r <= rows; ++r) F.entry[{i, i + r}] = row[r][md(i)];
  return F;
}

Boundary parse_boundary(const std::string& s) {
  if (s == "outer") return Boundary::outer;
  if (s == "inner") return Boundary::inner;
  throw input_error("boundary must be 'outer' or 'inner'");
}

LaurentFrieze laurent_frieze(const Triangulation& T0, Boundary bd, int rows, int cols, bool keep_boundary,
                             long i0) {
  Triangulation store;
  const Triangulation& T = view(T0, bd, store);
  const long n = T.n();
  if (rows < 0 || cols < 1) throw input_error("rows and cols must be positive");
  if (T.surface().kind == SurfaceKind::polygon && rows > n)
    throw input_error("a polygon frieze has at most n rows");
  LaurentFrieze F;
  F.n = n;
  F.rows = rows;
  F.i0 = i0;
  F.cols = cols;
  F.source = "expansion";
  std::map<std::pair<long, int>, LaurentPoly> memo;
  auto md = [n](long i) { return ((i % n) + n) % n; };
  for (long i = i0; i < i0 + cols; ++i) {
    for (int r = 0; r <= rows; ++r) {
      auto key = std::make_pair(md(i), r);
      auto it = memo.find(key);
      if (it == memo.end()) {
        LaurentPoly v;
        if (r == 0)
          v = LaurentPoly(keep_boundary ? T.variables() : T.arc_labels());
        else if (r == 1 && !keep_boundary)
          v = LaurentPoly::constant(1).over(T.arc_labels());
        else
          v = laurent_of_lift(T, i, i + r, Engine::matching, keep_boundary);
        it = memo.emplace(key, v).first;
      }
      F.entry[{i, i + r}] = it->second;
    }
  }
  return F;
}

IntegerFrieze specialize_ones(const LaurentFrieze& F) {
  IntegerFrieze G;
  G.n = F.n;
  G.rows = F.rows;
  G.i0 = F.i0;
  G.cols = F.cols;
  G.source = F.source;
  for (const auto& [ij, v] : F.entry) G.entry[ij] = evaluate_ones(v);
  return G;
}

std::vector<mpz_class> growth_coefficients(const IntegerFrieze& F, int K) { return growth_from(F, K); }
std::vector<LaurentPoly> growth_coefficients(const LaurentFrieze& F, int K) { return growth_from(F, K); }

std::vector<LaurentPoly> growth_coefficients(const Triangulation& T0, int K, Boundary bd) {
  Triangulation store;
  const Triangulation& T = view(T0, bd, store);
  if (T.surface().kind == SurfaceKind::polygon) throw input_error("polygons have no growth coefficients");
  LaurentFrieze F = laurent_frieze(T, Boundary::outer, static_cast<int>(K * T.n() + 1), static_cast<int>(T.n()) + 1);
  auto s = growth_from(F, K);
  for (int k = 1; k <= K; ++k) {
    LaurentPoly b = laurent_of_bracelet(T, k, BraceletEngine::band).over(T.arc_labels());
    if (!(b == s[k]))
      throw Error(ErrorKind::verification, "growth coefficient " + std::to_string(k) + " differs from the bracelet: " +
                                               to_text(s[k]) + " vs " + to_text(b) + " (" + first_difference(s[k], b) +
                                               ")");
  }
  return s;
}

void Report::check(const std::string& where, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  ++checked;
  if (!(lhs == rhs)) failures.push_back({where, to_text(lhs), to_text(rhs), first_difference(lhs, rhs)});
}

void Report::check(const std::string& where, const mpz_class& lhs, const mpz_class& rhs) {
  ++checked;
  if (lhs != rhs) failures.push_back({where, lhs.get_str(), rhs.get_str(), ""});
}

void Report::expect(const std::string& where, bool ok, const std::string& detail) {
  ++checked;
  if (!ok) failures.push_back({where, detail, "", ""});
}

void Report::merge(const Report& r) {
  checked += r.checked;
  failures.insert(failures.end(), r.failures.begin(), r.failures.end());
  notes.insert(notes.end(), r.notes.begin(), r.notes.end());
}

std::string Report::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "pass" : "FAIL") << " (" << checked << " checks, " << failures.size() << " failures)\n";
  for (const auto& f : failures) {
    os << "  " << f.where << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
    if (!f.diff.empty()) os << "    first difference: " << f.diff << "\n";
  }
  for (const auto& n : notes) os << "  " << n << "\n";
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"name", name}, {"ok", ok()}, {"checked", checked}};
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"first_difference", f.diff}});
  j["notes"] = notes;
  return j;
}

Report verify_diamond(const IntegerFrieze& F) { return diamond_report(F); }
Report verify_diamond(const LaurentFrieze& F) { return diamond_report(F); }

namespace {

LaurentPoly arc_value(const Triangulation& T, long i, long j, int k, Engine e) {
  return laurent_of_arc(T, make_arc(i, j, k, T.n()), e, false).over(T.arc_labels());
}

std::string arc_name(long i, long j, int k) {
  return "gamma_" + std::to_string(k) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

LaurentPoly complement_value(const Triangulation& T, long i, long j, int l, Engine e) {
  if (l <= 0) return -arc_value(T, i, j, 1 - l, e);
  ComplementSpec c = complement(make_arc(i, j, l, T.n()));
  if (c.empty()) return LaurentPoly(T.arc_labels());
  return arc_value(T, c.i, c.j, c.k, e);
}

Report verify_progression(const Triangulation& T, long i, long j, int k, int m, Engine e) {
  if (k < 2 || m < 1 || m > k - 1) throw input_error("progression needs k >= 2 and 1 <= m <= k-1");
  Report r;
  r.name = "progression";
  LaurentPoly lhs = arc_value(T, i, j, k, e);
  LaurentPoly rhs = arc_value(T, i, j, m, e) * laurent_of_bracelet(T, k - m, BraceletEngine::band) +
                    complement_value(T, i, j, k - 2 * m + 1, e);
  r.check(arc_name(i, j, k) + " with m=" + std::to_string(m), lhs, rhs.over(T.arc_labels()));
  return r;
}

ComplementDifferences complement_differences(const Triangulation& T, long i, long j, int K) {
  if (K < 1) throw input_error("K must be at least 1");
  ComplementDifferences out;
  out.report.name = "complement-diff";
  const auto vars = T.arc_labels();
  for (int k = 1; k <= K; ++k)
    out.c.push_back((arc_value(T, i, j, k, Engine::matching) - complement_value(T, i, j, k)).over(vars));
  out.c.insert(out.c.begin(), out.c.front());
  out.s.push_back(LaurentPoly::constant(2).over(vars));
  for (int k = 1; k <= K; ++k) out.s.push_back(laurent_of_bracelet(T, k, BraceletEngine::band).over(vars));
  const auto& c = out.c;
  const auto& s = out.s;
  if (i == j) out.report.check("c_1 = x(gamma_1)", c[1], arc_value(T, i, j, 1, Engine::matching));
  for (int k = 2; k <= K; ++k) {
    LaurentPoly rec = (s[k - 1] - s[k - 2]) * c[1] + c[k - 2];
    out.report.check("recurrence c_" + std::to_string(k), c[k], rec.over(vars));
    LaurentPoly sum = LaurentPoly::constant(1);
    if (k % 2 == 0) {
      for (int q = 0; q <= k - 1; ++q) sum += (q % 2 == 0 ? -s[q] : s[q]);
    } else {
      for (int q = 1; q <= k - 1; ++q) sum += (q % 2 == 1 ? -s[q] : s[q]);
    }
    out.report.check("closed form c_" + std::to_string(k), c[k], (c[1] * sum).over(vars));
  }
  return out;
}

Report verify_arithmetic(const Triangulation& T, long i, long j, int K) {
  if (T.surface().kind != SurfaceKind::punctured_disk) throw input_error("arithmetic law needs a punctured disk");
  Report r;
  r.name = "arithmetic";
  const auto vars = T.arc_labels();
  LaurentPoly step = (arc_value(T, i, j, 1, Engine::matching) + complement_value(T, i, j, 1)).over(vars);
  LaurentPoly prev = arc_value(T, i, j, 1, Engine::matching);
  for (int k = 2; k <= K; ++k) {
    LaurentPoly cur = arc_value(T, i, j, k, Engine::matching);
    r.check(arc_name(i, j, k) + " - " + arc_name(i, j, k - 1), cur, (prev + step).over(vars));
    prev = cur;
  }
  int rows = static_cast<int>((K + 1) * T.n() + 1);
  auto q = T.quiddity();
  r.merge(verify_n_arithmetic(integer_frieze(std::vector<long>(q.begin(), q.end()), rows)));
  return r;
}

Report verify_n_arithmetic(const IntegerFrieze& F) {
  Report r;
  r.name = "n-arithmetic";
  const long n = F.n;
  for (long i = F.i0; i < F.i0 + F.cols; ++i)
    for (long j = i + 1; j + 2 * n <= i + F.rows; ++j) {
      mpz_class d = F.at(i, j + n) - F.at(i, j);
      for (long t = 1; j + (t + 1) * n <= i + F.rows; ++t)
        r.check("difference along column " + std::to_string(i) + " from " + pos(i, j) + " step " + std::to_string(t),
                F.at(i, j + (t + 1) * n) - F.at(i, j + t * n), d);
    }
  return r;
}

std::string to_tsv(const IntegerFrieze& F) { return tsv(F); }
std::string to_tsv(const LaurentFrieze& F) { return tsv(F); }
nlohmann::json to_json(const IntegerFrieze& F) { return json_of(F); }
nlohmann::json to_json(const LaurentFrieze& F) { return json_of(F); }
std::string to_latex(const IntegerFrieze& F) { return latex(F); }
std::string to_latex(const LaurentFrieze& F) { return latex(F); }

}  // namespace fk
