#include "friezekit/report.hpp"

#include <random>
#include <set>

namespace fk {

const std::vector<std::string> kSuites = {"diamond",         "progression", "growth",
                                          "complement-diff", "arithmetic",  "bijection"};

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json j;
  j["vars"] = p.vars();
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) j["terms"].push_back({{"coeff", c.get_str()}, {"exp", e}});
  j["text"] = to_text(p);
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw input_error("polynomial needs 'vars' and 'terms'");
  LaurentPoly p(j["vars"].get<std::vector<std::string>>());
  for (const auto& t : j["terms"]) {
    auto e = t.at("exp").get<Exponents>();
    if (e.size() != p.vars().size()) throw input_error("exponent vector has the wrong length");
    mpz_class c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw input_error("malformed coefficient");
    p.add_term(e, c);
  }
  return p;
}

std::vector<ArcSpec> arc_sweep(const Triangulation& T, int level) {
  std::vector<ArcSpec> out;
  const long n = T.n();
  const bool polygon = T.surface().kind == SurfaceKind::polygon;
  for (int k = 1; k <= (polygon ? 1 : level); ++k)
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) {
        if (polygon && i == j) continue;
        out.push_back(make_arc(i, j, k, n));
      }
  return out;
}

namespace {

std::string arc_name(const ArcSpec& g) {
  return "gamma_" + std::to_string(g.k) + "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

int degree(const LaurentPoly& h) {
  if (!h.is_monomial()) return -1;
  int d = 0;
  for (int x : h.terms().begin()->first) d += x;
  return d;
}

// Runs a check body and records errors raised by the library as failures.
template <class F>
void guarded(Report& r, const std::string& where, F body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::input) throw;
    r.failures.push_back({where, e.what(), "", ""});
    ++r.checked;
  }
}

std::vector<std::pair<long, long>> pairs(const Triangulation& T, const VerifyParams& p) {
  std::vector<std::pair<long, long>> out;
  const long n = T.n();
  if (p.from || p.to) {
    if (!p.from || !p.to) throw input_error("--from and --to go together");
    out.push_back({*p.from, *p.to});
    return out;
  }
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

void need_periodic(const Triangulation& T, const std::string& suite) {
  if (T.surface().kind == SurfaceKind::polygon)
    throw input_error(suite + " needs a punctured disk or an annulus");
}

Report diamond_suite(const Triangulation& T, const VerifyParams& p) {
  Report r;
  r.name = "diamond";
  const long n = T.n();
  const bool polygon = T.surface().kind == SurfaceKind::polygon;
  int rows = p.rows.value_or(polygon ? static_cast<int>(n) : static_cast<int>(3 * n));
  int cols = p.cols.value_or(static_cast<int>(n) + 1);
  std::vector<Boundary> sides{Boundary::outer};
  if (T.surface().kind == SurfaceKind::annulus) sides.push_back(Boundary::inner);
  for (Boundary bd : sides) {
    LaurentFrieze F = laurent_frieze(T, bd, rows, cols);
    r.merge(verify_diamond(F));
    if (polygon) continue;
    Triangulation V = bd == Boundary::outer ? T : T.inner_view();
    auto q = V.quiddity();
    IntegerFrieze I = integer_frieze(std::vector<long>(q.begin(), q.end()), std::max(rows, 2), F.i0, cols);
    IntegerFrieze S = specialize_ones(F);
    for (const auto& [ij, v] : S.entry)
      r.check(std::string(bd == Boundary::outer ? "outer" : "inner") + " integer entry (" +
                  std::to_string(ij.first) + "," + std::to_string(ij.second) + ")",
              v, I.at(ij.first, ij.second));
  }
  return r;
}

Report progression_suite(const Triangulation& T, const VerifyParams& p) {
  need_periodic(T, "progression");
  Report r;
  r.name = "progression";
  int kmax = p.level.value_or(4);
  if (p.m && p.level && (*p.m < 1 || *p.m > *p.level - 1)) throw input_error("need 1 <= m <= level-1");
  for (auto [i, j] : pairs(T, p))
    for (int k = (p.level ? kmax : 2); k <= kmax; ++k)
      for (int m = 1; m <= k - 1; ++m) {
        if (p.m && *p.m != m) continue;
        guarded(r, "progression", [&] { r.merge(verify_progression(T, i, j, k, m, Engine::matching)); });
      }
  return r;
}

Report growth_suite(const Triangulation& T, const VerifyParams& p) {
  need_periodic(T, "growth");
  Report r;
  r.name = "growth";
  int K = p.level.value_or(3);
  guarded(r, "growth", [&] {
    auto s = growth_coefficients(T, K);
    r.checked += K;
    for (int k = 0; k <= K; ++k) {
      r.notes.push_back("s_" + std::to_string(k) + " = " + to_text(s[k]));
      r.check("chebyshev T_" + std::to_string(k) + "(s_1)", chebyshev_apply(k, s[1]).over(T.arc_labels()), s[k]);
    }
    for (int k = 0; k + 2 <= K; ++k)
      r.check("recurrence s_" + std::to_string(k + 2), s[k + 2], (s[1] * s[k + 1] - s[k]).over(T.arc_labels()));
    if (T.surface().kind == SurfaceKind::annulus) {
      auto si = growth_coefficients(T, K, Boundary::inner);
      for (int k = 1; k <= K; ++k) r.check("inner boundary s_" + std::to_string(k), si[k], s[k]);
    }
  });
  return r;
}

Report complement_suite(const Triangulation& T, const VerifyParams& p) {
  need_periodic(T, "complement-diff");
  Report r;
  r.name = "complement-diff";
  int K = p.level.value_or(3);
  for (auto [i, j] : pairs(T, p))
    guarded(r, "complement-diff", [&] {
      auto cd = complement_differences(T, i, j, K);
      r.merge(cd.report);
      if (T.surface().kind == SurfaceKind::punctured_disk)
        for (int k = 2; k <= K; ++k) r.check("c_" + std::to_string(k) + " = c_1", cd.c[k], cd.c[1]);
    });
  return r;
}

Report arithmetic_suite(const Triangulation& T, const VerifyParams& p) {
  if (T.surface().kind != SurfaceKind::punctured_disk) throw input_error("arithmetic needs a punctured disk");
  Report r;
  r.name = "arithmetic";
  int K = p.level.value_or(4);
  for (auto [i, j] : pairs(T, p)) guarded(r, "arithmetic", [&] { r.merge(verify_arithmetic(T, i, j, K)); });
  return r;
}

Report bijection_suite(const Triangulation& T, const VerifyParams& p) {
  Report r;
  r.name = "bijection";
  auto sweep = [&](const Triangulation& U, const std::string& tag) {
    std::vector<ArcSpec> arcs;
    if (p.from || p.to) {
      if (!p.from || !p.to) throw input_error("--from and --to go together");
      arcs.push_back(make_arc(*p.from, *p.to, p.level.value_or(1), U.n()));
    } else {
      arcs = arc_sweep(U, p.level.value_or(2));
    }
    for (const auto& g : arcs) {
      Report one = bijection_report(U, g);
      for (auto& f : one.failures) f.where = tag + f.where;
      r.merge(one);
    }
  };
  sweep(T, "");
  if (p.from || p.to) return r;
  // Triangulations reached by random flips.
  std::mt19937_64 rng(p.seed);
  const auto labels = T.arc_labels();
  for (int trial = 0; trial < 3; ++trial) {
    Triangulation U = T;
    std::string path;
    for (int step = 0; step < 3; ++step) {
      const std::string& l = labels[rng() % labels.size()];
      try {
        U = U.flipped(l);
        path += " " + l;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::unsupported) throw;
      }
    }
    r.notes.push_back("flipped at" + (path.empty() ? std::string(" nothing") : path));
    sweep(U, "after flips" + path + ": ");
  }
  return r;
}

}  // namespace

Report bijection_report(const Triangulation& T, const ArcSpec& g, int max_crossings) {
  Report r;
  r.name = "bijection";
  const std::string at = arc_name(g) + ": ";
  CrossingData cd = crossing_data(T, g);
  if (static_cast<int>(cd.d()) > max_crossings) return r;
  Cover c = polygon_cover(T, cd);
  auto tuples = enumerate_bci(c);
  auto paths = enumerate_tpaths(c);
  for (const auto& b : tuples) {
    TPath a = trail(c, b);
    r.expect(at + "trail of " + tuple_name(c, b, false) + " is reduced", validate_tpath(c, a).ok(),
             validate_tpath(c, a).str());
    BCITuple back;
    try {
      back = triangles_of(c, a);
    } catch (const Error& e) {
      r.expect(at + "triangles of trail " + a.str(), false, e.what());
      continue;
    }
    r.expect(at + "triangles(trail(" + tuple_name(c, b, false) + "))", back == b);
  }
  for (const auto& a : paths) {
    try {
      r.expect(at + "trail(triangles(" + a.str() + "))", trail(c, triangles_of(c, a)) == a);
    } catch (const Error& e) {
      r.expect(at + "triangles of " + a.str(), false, e.what());
    }
  }
  r.check(at + "#tuples vs #T-paths", mpz_class(static_cast<long>(tuples.size())),
          mpz_class(static_cast<long>(paths.size())));
  if (cd.d() == 0) return r;
  TileGraph G = snake_graph(cd);
  r.check(at + "#tuples vs #matchings", mpz_class(static_cast<long>(tuples.size())),
          mpz_class(static_cast<long>(matchings_transfer(G).size())));
  if (c.r() <= 4) {
    auto brute = enumerate_bci_bruteforce(c);
    auto sorted = tuples;
    std::sort(sorted.begin(), sorted.end());
    r.expect(at + "BCI enumeration vs brute force", sorted == brute);
  }
  Lattice L = bci_lattice(c);
  PosetQ q = poset_Q(c);
  r.check(at + "#tuples vs #J(Q)", mpz_class(static_cast<long>(tuples.size())),
          mpz_class(static_cast<long>(order_ideals(q).size())));
  std::string why;
  r.expect(at + "lattice isomorphic to J(Q)", check_lattice_isomorphism(c, L, q, &why), why);
  for (size_t n = 0; n < L.nodes.size(); ++n)
    r.expect(at + "rank of " + tuple_name(c, L.nodes[n], false), degree(L.height[n]) == L.rank[n]);
  for (const auto& t : L.twists)
    r.expect(at + "twist raises degree by one", degree(L.height[t.to]) == degree(L.height[t.from]) + 1);
  return r;
}

Report run_verify(const Triangulation& T, const std::string& suite, const VerifyParams& p) {
  if (suite == "diamond") return diamond_suite(T, p);
  if (suite == "progression") return progression_suite(T, p);
  if (suite == "growth") return growth_suite(T, p);
  if (suite == "complement-diff") return complement_suite(T, p);
  if (suite == "arithmetic") return arithmetic_suite(T, p);
  if (suite == "bijection") return bijection_suite(T, p);
  throw input_error("unknown verification suite '" + suite + "'");
}

}  // namespace fk
