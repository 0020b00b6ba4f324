#include "friezekit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "friezekit/report.hpp"

struct fk_poly {
  fk::LaurentPoly p;
};

struct fk_triangulation {
  fk::Triangulation t;
};

namespace {

thread_local std::string last_error;

fk_status fail(fk_status s, const std::string& m) {
  last_error = m;
  return s;
}

template <class F>
fk_status guard(F body) {
  try {
    last_error.clear();
    body();
    return FK_OK;
  } catch (const fk::Error& e) {
    return fail(static_cast<fk_status>(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FK_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FK_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define FK_NEED(x)                                                         \
  do {                                                                     \
    if (!(x)) return fail(FK_ERR_NULL, "null argument: " #x);              \
  } while (0)

fk::LaurentPoly tidy(const fk::Triangulation& T, const fk::LaurentPoly& p, bool keep_boundary) {
  return p.over(keep_boundary ? T.variables() : T.arc_labels());
}

fk::ArcSpec arc(const fk_triangulation* t, long i, long j, int level) {
  return fk::make_arc(i, j, level, t->t.n());
}

std::string format_of(const char* f) { return f ? std::string(f) : std::string("tsv"); }

template <class G>
std::string render(const G& F, const std::string& format) {
  if (format == "tsv") return fk::to_tsv(F);
  if (format == "json") return fk::to_json(F).dump(2) + "\n";
  if (format == "latex") return fk::to_latex(F);
  throw fk::input_error("format must be tsv, json or latex");
}

}  // namespace

extern "C" {

const char* fk_last_error(void) { return last_error.c_str(); }
const char* fk_version(void) { return "1.0.0"; }
void fk_string_free(char* s) { std::free(s); }

fk_status fk_poly_parse(const char* text, fk_poly** out) {
  FK_NEED(text);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{fk::parse_text(text)}; });
}

fk_status fk_poly_from_json(const char* json, fk_poly** out) {
  FK_NEED(json);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{fk::poly_from_json(nlohmann::json::parse(json))}; });
}

void fk_poly_free(fk_poly* p) { delete p; }

fk_status fk_poly_clone(const fk_poly* p, fk_poly** out) {
  FK_NEED(p);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{p->p}; });
}

fk_status fk_poly_to_text(const fk_poly* p, char** out) {
  FK_NEED(p);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::to_text(p->p)); });
}

fk_status fk_poly_to_json(const fk_poly* p, char** out) {
  FK_NEED(p);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::poly_to_json(p->p).dump()); });
}

fk_status fk_poly_add(const fk_poly* a, const fk_poly* b, fk_poly** out) {
  FK_NEED(a);
  FK_NEED(b);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{a->p + b->p}; });
}

fk_status fk_poly_sub(const fk_poly* a, const fk_poly* b, fk_poly** out) {
  FK_NEED(a);
  FK_NEED(b);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{a->p - b->p}; });
}

fk_status fk_poly_mul(const fk_poly* a, const fk_poly* b, fk_poly** out) {
  FK_NEED(a);
  FK_NEED(b);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{a->p * b->p}; });
}

fk_status fk_poly_equal(const fk_poly* a, const fk_poly* b, int* out) {
  FK_NEED(a);
  FK_NEED(b);
  FK_NEED(out);
  return guard([&] { *out = a->p == b->p ? 1 : 0; });
}

fk_status fk_poly_first_difference(const fk_poly* a, const fk_poly* b, char** out) {
  FK_NEED(a);
  FK_NEED(b);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::first_difference(a->p, b->p)); });
}

fk_status fk_poly_evaluate_ones(const fk_poly* p, char** out) {
  FK_NEED(p);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::evaluate_ones(p->p).get_str()); });
}

fk_status fk_poly_chebyshev(unsigned k, const fk_poly* p, fk_poly** out) {
  FK_NEED(p);
  FK_NEED(out);
  return guard([&] { *out = new fk_poly{fk::chebyshev_apply(k, p->p)}; });
}

fk_status fk_poly_term_count(const fk_poly* p, size_t* out) {
  FK_NEED(p);
  FK_NEED(out);
  *out = p->p.terms().size();
  last_error.clear();
  return FK_OK;
}

fk_status fk_triangulation_load_file(const char* path, fk_triangulation** out) {
  FK_NEED(path);
  FK_NEED(out);
  return guard([&] { *out = new fk_triangulation{fk::Triangulation::from_file(path)}; });
}

fk_status fk_triangulation_load_json(const char* json, fk_triangulation** out) {
  FK_NEED(json);
  FK_NEED(out);
  return guard([&] { *out = new fk_triangulation{fk::Triangulation::from_json(nlohmann::json::parse(json))}; });
}

void fk_triangulation_free(fk_triangulation* t) { delete t; }

fk_status fk_triangulation_to_json(const fk_triangulation* t, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(t->t.to_json().dump(2)); });
}

fk_status fk_triangulation_n(const fk_triangulation* t, long* out) {
  FK_NEED(t);
  FK_NEED(out);
  *out = t->t.n();
  last_error.clear();
  return FK_OK;
}

fk_status fk_triangulation_quiddity(const fk_triangulation* t, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(nlohmann::json(t->t.quiddity()).dump()); });
}

fk_status fk_triangulation_signed_adjacency(const fk_triangulation* t, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(nlohmann::json(t->t.signed_adjacency()).dump()); });
}

fk_status fk_triangulation_flip(const fk_triangulation* t, const char* label, fk_triangulation** out) {
  FK_NEED(t);
  FK_NEED(label);
  FK_NEED(out);
  return guard([&] { *out = new fk_triangulation{t->t.flipped(label)}; });
}

fk_status fk_expand_arc(const fk_triangulation* t, long i, long j, int level, const char* engine, int keep_boundary,
                        fk_poly** out) {
  FK_NEED(t);
  FK_NEED(engine);
  FK_NEED(out);
  return guard([&] {
    auto e = fk::parse_engine(engine);
    *out = new fk_poly{tidy(t->t, fk::laurent_of_arc(t->t, arc(t, i, j, level), e, keep_boundary), keep_boundary)};
  });
}

fk_status fk_expand_lift(const fk_triangulation* t, long s, long u, const char* engine, int keep_boundary,
                         fk_poly** out) {
  FK_NEED(t);
  FK_NEED(engine);
  FK_NEED(out);
  return guard([&] {
    auto e = fk::parse_engine(engine);
    *out = new fk_poly{tidy(t->t, fk::laurent_of_lift(t->t, s, u, e, keep_boundary), keep_boundary)};
  });
}

fk_status fk_expand_bracelet(const fk_triangulation* t, int k, const char* engine, int keep_boundary, fk_poly** out) {
  FK_NEED(t);
  FK_NEED(engine);
  FK_NEED(out);
  return guard([&] {
    auto e = fk::parse_bracelet_engine(engine);
    *out = new fk_poly{tidy(t->t, fk::laurent_of_bracelet(t->t, k, e, keep_boundary), keep_boundary)};
  });
}

fk_status fk_snake_graph_json(const fk_triangulation* t, long i, long j, int level, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::graph_to_json(fk::snake_graph(t->t, arc(t, i, j, level))).dump(2)); });
}

fk_status fk_band_graph_json(const fk_triangulation* t, int k, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::graph_to_json(fk::band_graph(t->t, k)).dump(2)); });
}

fk_status fk_matching_count(const fk_triangulation* t, long i, long j, int level, size_t* out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] {
    auto cd = fk::crossing_data(t->t, arc(t, i, j, level));
    *out = cd.d() == 0 ? 1 : fk::matchings_transfer(fk::snake_graph(cd)).size();
  });
}

fk_status fk_frieze_integer(const long* q, size_t n, int rows, const char* format, char** out) {
  FK_NEED(q);
  FK_NEED(out);
  return guard([&] {
    auto F = fk::integer_frieze(std::vector<long>(q, q + n), rows);
    *out = dup(render(F, format_of(format)));
  });
}

fk_status fk_frieze_laurent(const fk_triangulation* t, const char* boundary, int rows, int cols, int keep_boundary,
                            const char* format, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] {
    auto bd = fk::parse_boundary(boundary ? boundary : "outer");
    auto F = fk::laurent_frieze(t->t, bd, rows, cols, keep_boundary != 0);
    *out = dup(render(F, format_of(format)));
  });
}

fk_status fk_growth_integer(const long* q, size_t n, int K, char** out) {
  FK_NEED(q);
  FK_NEED(out);
  return guard([&] {
    auto F = fk::integer_frieze(std::vector<long>(q, q + n), static_cast<int>(K * n + 1), 0,
                                static_cast<int>(n) + 1);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : fk::growth_coefficients(F, K)) j.push_back(s.get_str());
    *out = dup(j.dump());
  });
}

fk_status fk_verify(const fk_triangulation* t, const char* suite, const char* params, char** report, int* passed) {
  FK_NEED(t);
  FK_NEED(suite);
  FK_NEED(report);
  return guard([&] {
    fk::VerifyParams p;
    if (params && *params) {
      auto j = nlohmann::json::parse(params);
      if (!j.is_object()) throw fk::input_error("verify parameters must be a JSON object");
      for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k == "from")
          p.from = it->get<long>();
        else if (k == "to")
          p.to = it->get<long>();
        else if (k == "level")
          p.level = it->get<int>();
        else if (k == "m")
          p.m = it->get<int>();
        else if (k == "rows")
          p.rows = it->get<int>();
        else if (k == "cols")
          p.cols = it->get<int>();
        else if (k == "seed")
          p.seed = it->get<std::uint64_t>();
        else
          throw fk::input_error("unknown verify parameter '" + k + "'");
      }
    }
    fk::Report r = fk::run_verify(t->t, suite, p);
    *report = dup(r.to_json().dump(2));
    if (passed) *passed = r.ok() ? 1 : 0;
  });
}

fk_status fk_lattice(const fk_triangulation* t, long i, long j, int level, const char* format, char** out) {
  FK_NEED(t);
  FK_NEED(format);
  FK_NEED(out);
  return guard([&] {
    fk::Cover c = fk::polygon_cover(t->t, arc(t, i, j, level));
    fk::Lattice L = fk::bci_lattice(c);
    std::string f = format;
    if (f == "dot") {
      *out = dup(fk::lattice_dot(c, L));
    } else if (f == "json") {
      nlohmann::json jl = fk::lattice_json(c, L);
      nlohmann::json paths = nlohmann::json::array();
      for (const auto& b : L.nodes) {
        fk::TPath a = fk::trail(c, b);
        paths.push_back({{"tuple", fk::tuple_name(c, b, true)},
                         {"trail", a.str()},
                         {"weight", fk::to_text(fk::tpath_weight(a, false))}});
      }
      jl["trails"] = paths;
      if (c.d() > 0) {
        fk::PosetQ q = fk::poset_Q(c);
        jl["poset"] = q.arrows;
        jl["ideals"] = fk::order_ideals(q).size();
      }
      *out = dup(jl.dump(2));
    } else {
      throw fk::input_error("lattice output must be dot or json");
    }
  });
}

fk_status fk_poset_dot(const fk_triangulation* t, long i, long j, int level, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::poset_dot(fk::poset_Q(fk::polygon_cover(t->t, arc(t, i, j, level))))); });
}

fk_status fk_cover_json(const fk_triangulation* t, long i, long j, int level, char** out) {
  FK_NEED(t);
  FK_NEED(out);
  return guard([&] { *out = dup(fk::cover_json(fk::polygon_cover(t->t, arc(t, i, j, level))).dump(2)); });
}

}  // extern "C"
