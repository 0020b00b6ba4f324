#include "friezekit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fk {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a < b;
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
  LaurentPoly p;
  p.add_term({}, c);
  return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
  LaurentPoly p({name});
  p.add_term({1}, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents exp,
                                  const mpz_class& coeff) {
  LaurentPoly p(std::move(vars));
  p.add_term(exp, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

mpz_class LaurentPoly::constant_term() const {
  Exponents z(vars_.size(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

void LaurentPoly::add_term(const Exponents& exp, const mpz_class& coeff) {
  if (exp.size() != vars_.size()) throw internal_error("exponent length mismatch");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exp, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

LaurentPoly LaurentPoly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> where(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
  }
  LaurentPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw input_error("variable '" + vars_[i] + "' missing from target table");
      f[where[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly LaurentPoly::trimmed() const {
  std::vector<std::string> used;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool any = false;
    for (const auto& [e, c] : terms_) any = any || e[i] != 0;
    if (any) used.push_back(vars_[i]);
  }
  return over(used);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  if (q.vars_ != vars_) {
    auto vars = merge_vars(vars_, q.vars_);
    *this = over(vars);
    LaurentPoly qq = q.over(vars);
    for (const auto& [e, c] : qq.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  auto vars = merge_vars(vars_, q.vars_);
  LaurentPoly a = over(vars), b = q.over(vars);
  LaurentPoly out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& q) const {
  if (vars_ == q.vars_) return terms_ == q.terms_;
  auto vars = merge_vars(vars_, q.vars_);
  return over(vars).terms_ == q.over(vars).terms_;
}

LaurentPoly monomial_quotient(const LaurentPoly& p, const LaurentPoly& m) {
  if (!m.is_monomial()) throw input_error("divisor is not a single monomial");
  auto vars = merge_vars(p.vars(), m.vars());
  LaurentPoly a = p.over(vars), b = m.over(vars);
  const auto& [mexp, mc] = *b.terms().begin();
  LaurentPoly out(vars);
  Exponents e(vars.size());
  for (const auto& [pe, pc] : a.terms()) {
    if (!mpz_divisible_p(pc.get_mpz_t(), mc.get_mpz_t()))
      throw input_error("coefficient " + pc.get_str() + " not divisible by " + mc.get_str());
    for (size_t i = 0; i < e.size(); ++i) e[i] = pe[i] - mexp[i];
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), pc.get_mpz_t(), mc.get_mpz_t());
    out.add_term(e, q);
  }
  return out;
}

LaurentPoly specialize_ones(const LaurentPoly& p, const std::vector<std::string>& names) {
  std::vector<std::string> keep;
  for (const auto& v : p.vars())
    if (std::find(names.begin(), names.end(), v) == names.end()) keep.push_back(v);
  LaurentPoly out(keep);
  std::vector<int> where;
  for (const auto& v : keep) where.push_back(p.var_index(v));
  Exponents e(keep.size());
  for (const auto& [pe, c] : p.terms()) {
    for (size_t i = 0; i < keep.size(); ++i) e[i] = pe[where[i]];
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly absorb_factor(const LaurentPoly& p, const std::string& var, const std::string& factor) {
  int iv = p.var_index(var);
  if (iv < 0) return p;
  LaurentPoly q = p.over(merge_vars(p.vars(), {factor}));
  iv = q.var_index(var);
  const int jf = q.var_index(factor);
  LaurentPoly out(q.vars());
  for (const auto& [pe, c] : q.terms()) {
    Exponents e = pe;
    e[jf] += e[iv];
    out.add_term(e, c);
  }
  return out;
}

mpz_class evaluate_ones(const LaurentPoly& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

LaurentPoly chebyshev_apply(unsigned k, const LaurentPoly& p) {
  LaurentPoly prev = LaurentPoly::constant(2);
  if (k == 0) return prev;
  LaurentPoly cur = p;
  for (unsigned i = 1; i < k; ++i) {
    LaurentPoly next = p * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string term_text(const std::vector<std::string>& vars, const Exponents& e,
                      const mpz_class& c, bool leading) {
  std::string out;
  mpz_class a = abs(c);
  if (c < 0)
    out += leading ? "-" : " - ";
  else if (!leading)
    out += " + ";
  std::vector<std::string> factors;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
  }
  if (factors.empty()) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += term_text(p.vars(), e, c, first);
    first = false;
  }
  return out;
}

std::string first_difference(const LaurentPoly& p, const LaurentPoly& q) {
  auto vars = merge_vars(p.vars(), q.vars());
  LaurentPoly a = p.over(vars), b = q.over(vars);
  LaurentPoly d = a - b;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  auto ia = a.terms().find(e);
  auto ib = b.terms().find(e);
  mpz_class ca = ia == a.terms().end() ? mpz_class(0) : ia->second;
  mpz_class cb = ib == b.terms().end() ? mpz_class(0) : ib->second;
  std::string mono = term_text(vars, e, 1, true);
  return "monomial " + mono + ": " + ca.get_str() + " vs " + cb.get_str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("parse error at position " + std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  std::string digits() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (start == pos) fail("expected variable or integer");
    return s.substr(start, pos - start);
  }
};

}  // namespace

LaurentPoly parse_text(const std::string& s) {
  Parser ps{s};
  struct RawTerm {
    mpz_class coeff;
    std::map<std::string, long> exps;
  };
  std::vector<RawTerm> raw;
  std::vector<std::string> names;
  bool first = true;
  ps.skip();
  if (ps.pos == s.size()) ps.fail("empty input");
  while (true) {
    ps.skip();
    if (ps.pos == s.size()) break;
    int sign = 1;
    if (ps.peek('+') || ps.peek('-')) {
      sign = s[ps.pos] == '-' ? -1 : 1;
      ++ps.pos;
    } else if (!first) {
      ps.fail("expected '+' or '-'");
    }
    first = false;
    RawTerm t{mpz_class(sign), {}};
    while (true) {
      ps.skip();
      if (ps.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[ps.pos]))) {
        t.coeff *= mpz_class(ps.digits());
      } else {
        std::string v = ps.ident();
        long e = 1;
        if (ps.peek('^')) {
          ++ps.pos;
          int es = 1;
          if (ps.peek('-')) {
            es = -1;
            ++ps.pos;
          }
          std::string d = ps.digits();
          if (d.size() > 9) ps.fail("exponent too large");
          e = es * std::stol(d);
        }
        t.exps[v] += e;
        if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
      }
      if (ps.peek('*')) {
        ++ps.pos;
        continue;
      }
      break;
    }
    raw.push_back(std::move(t));
  }
  std::sort(names.begin(), names.end(), natural_less);
  LaurentPoly out(names);
  for (const auto& t : raw) {
    Exponents e(names.size(), 0);
    for (const auto& [v, x] : t.exps) {
      auto idx = std::find(names.begin(), names.end(), v) - names.begin();
      e[idx] = static_cast<int>(x);
    }
    out.add_term(e, t.coeff);
  }
  return out;
}

}  // namespace fk
