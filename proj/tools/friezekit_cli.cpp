#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "friezekit.h"
#include "json.hpp"

namespace {

struct CliError {
  int code;
  std::string message;
};

int exit_code(fk_status s) {
  switch (s) {
    case FK_OK:
      return 0;
    case FK_ERR_VERIFICATION:
      return 1;
    case FK_ERR_INTERNAL:
      return 3;
    default:
      return 2;
  }
}

void check(fk_status s) {
  if (s != FK_OK) {
    std::string kind = s == FK_ERR_VERIFICATION ? "verification failure" : s == FK_ERR_INTERNAL ? "internal error" : "error";
    throw CliError{exit_code(s), kind + ": " + fk_last_error()};
  }
}

std::string take(char* s) {
  std::string out(s ? s : "");
  fk_string_free(s);
  return out;
}

struct Tri {
  fk_triangulation* t = nullptr;
  explicit Tri(const std::string& path) { check(fk_triangulation_load_file(path.c_str(), &t)); }
  ~Tri() { fk_triangulation_free(t); }
  Tri(const Tri&) = delete;
  Tri& operator=(const Tri&) = delete;
};

struct Poly {
  fk_poly* p = nullptr;
  ~Poly() { fk_poly_free(p); }
  std::string text() const {
    char* s = nullptr;
    check(fk_poly_to_text(p, &s));
    return take(s);
  }
  std::string json() const {
    char* s = nullptr;
    check(fk_poly_to_json(p, &s));
    return take(s);
  }
  std::string ones() const {
    char* s = nullptr;
    check(fk_poly_evaluate_ones(p, &s));
    return take(s);
  }
  size_t terms() const {
    size_t n = 0;
    check(fk_poly_term_count(p, &n));
    return n;
  }
};

std::vector<long> parse_quiddity(const std::string& s) {
  std::vector<long> q;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      q.push_back(v);
    } catch (const std::exception&) {
      throw CliError{2, "error: malformed quiddity entry '" + item + "'"};
    }
  }
  if (q.empty()) throw CliError{2, "error: empty quiddity sequence"};
  return q;
}

void print_poly(const Poly& P, const std::string& format, const std::string& engine_note) {
  if (format == "json") {
    auto j = nlohmann::json::parse(P.json());
    j["at_ones"] = P.ones();
    if (!engine_note.empty()) j["engines"] = engine_note;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "X = " << P.text() << "\n";
  std::cout << "terms: " << P.terms() << "\n";
  std::cout << "at ones: " << P.ones() << "\n";
  if (!engine_note.empty()) std::cout << "engines: " << engine_note << "\n";
}

int print_report(const std::string& report, const std::string& format) {
  auto j = nlohmann::json::parse(report);
  bool ok = j.at("ok").get<bool>();
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << j.at("name").get<std::string>() << ": " << (ok ? "pass" : "FAIL") << " ("
            << j.at("checked").get<int>() << " checks, " << j.at("failures").size() << " failures)\n";
  for (const auto& f : j.at("failures")) {
    std::cout << "  " << f.at("where").get<std::string>() << "\n";
    std::cout << "    lhs: " << f.at("lhs").get<std::string>() << "\n";
    if (!f.at("rhs").get<std::string>().empty()) std::cout << "    rhs: " << f.at("rhs").get<std::string>() << "\n";
    if (!f.at("first_difference").get<std::string>().empty())
      std::cout << "    first difference: " << f.at("first_difference").get<std::string>() << "\n";
  }
  for (const auto& n : j.at("notes")) std::cout << "  " << n.get<std::string>() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friezes, snake graphs and BCI lattices of triangulated surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fk_version()));

  std::string tri, format = "tsv", boundary = "outer", engine, out_kind, quiddity;
  long from = 0, to = 0;
  int level = 1, rows = 0, cols = 0, k = 1;
  bool keep_boundary = false, graph = false;
  std::optional<int> vlevel, vm, vrows, vcols;
  std::optional<long> vfrom, vto;
  std::optional<std::uint64_t> seed;

  auto* frieze = app.add_subcommand("frieze", "Integer or Laurent frieze windows");
  frieze->require_subcommand(1);
  auto* fint = frieze->add_subcommand("integer", "Frieze from a quiddity sequence");
  fint->add_option("--quiddity", quiddity, "Comma-separated quiddity sequence")->required();
  fint->add_option("--rows", rows, "Number of rows")->required()->check(CLI::Range(2, 100000));
  fint->add_option("--format", format)->check(CLI::IsMember({"tsv", "json", "latex"}));
  auto* flau = frieze->add_subcommand("laurent", "Frieze of cluster variables");
  flau->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  flau->add_option("--boundary", boundary)->check(CLI::IsMember({"outer", "inner"}));
  flau->add_option("--rows", rows)->required()->check(CLI::Range(0, 10000));
  flau->add_option("--cols", cols)->required()->check(CLI::Range(1, 10000));
  flau->add_flag("--keep-boundary", keep_boundary);
  flau->add_option("--format", format)->check(CLI::IsMember({"tsv", "json", "latex"}));

  std::string pformat = "text";
  auto* expand = app.add_subcommand("expand", "Laurent expansions");
  expand->require_subcommand(1);
  auto* earc = expand->add_subcommand("arc", "Expansion of a generalized peripheral arc");
  earc->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  earc->add_option("--from", from)->required();
  earc->add_option("--to", to)->required();
  earc->add_option("--level", level)->check(CLI::PositiveNumber);
  earc->add_option("--engine", engine)->required()->check(CLI::IsMember({"matching", "tpath", "both"}));
  earc->add_flag("--keep-boundary", keep_boundary);
  earc->add_flag("--graph", graph, "Print the snake graph as JSON");
  earc->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));
  auto* ebra = expand->add_subcommand("bracelet", "Expansion of a bracelet");
  ebra->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  ebra->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  ebra->add_option("--engine", engine)->required()->check(CLI::IsMember({"band", "chebyshev", "both"}));
  ebra->add_flag("--keep-boundary", keep_boundary);
  ebra->add_flag("--graph", graph, "Print the band graph as JSON");
  ebra->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Check an identity exactly");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"diamond", "progression", "growth", "complement-diff", "arithmetic", "bijection"}));
  verify->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  verify->add_option("--from", vfrom);
  verify->add_option("--to", vto);
  verify->add_option("--level", vlevel);
  verify->add_option("--m", vm);
  verify->add_option("--rows", vrows);
  verify->add_option("--cols", vcols);
  verify->add_option("--seed", seed);
  verify->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));

  auto* lattice = app.add_subcommand("lattice", "Lattice of BCI tuples");
  lattice->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  lattice->add_option("--from", from)->required();
  lattice->add_option("--to", to)->required();
  lattice->add_option("--level", level)->check(CLI::PositiveNumber);
  lattice->add_option("--out", out_kind)->required()->check(CLI::IsMember({"dot", "json", "poset"}));

  auto* cover = app.add_subcommand("cover", "Polygon cover of an arc");
  cover->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  cover->add_option("--from", from)->required();
  cover->add_option("--to", to)->required();
  cover->add_option("--level", level)->check(CLI::PositiveNumber);
  cover->add_option("--out", out_kind)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*fint) {
      auto q = parse_quiddity(quiddity);
      char* s = nullptr;
      check(fk_frieze_integer(q.data(), q.size(), rows, format.c_str(), &s));
      std::cout << take(s);
    } else if (*flau) {
      Tri T(tri);
      char* s = nullptr;
      check(fk_frieze_laurent(T.t, boundary.c_str(), rows, cols, keep_boundary, format.c_str(), &s));
      std::cout << take(s);
    } else if (*earc) {
      Tri T(tri);
      if (graph) {
        char* s = nullptr;
        check(fk_snake_graph_json(T.t, from, to, level, &s));
        std::cout << take(s) << "\n";
        return 0;
      }
      Poly P;
      check(fk_expand_arc(T.t, from, to, level, engine.c_str(), keep_boundary, &P.p));
      print_poly(P, pformat, engine == "both" ? "matching and tpath agree" : "");
    } else if (*ebra) {
      Tri T(tri);
      if (graph) {
        char* s = nullptr;
        check(fk_band_graph_json(T.t, k, &s));
        std::cout << take(s) << "\n";
        return 0;
      }
      Poly P;
      check(fk_expand_bracelet(T.t, k, engine.c_str(), keep_boundary, &P.p));
      print_poly(P, pformat, engine == "both" ? "band and chebyshev agree" : "");
    } else if (*verify) {
      Tri T(tri);
      nlohmann::json params = nlohmann::json::object();
      if (vfrom) params["from"] = *vfrom;
      if (vto) params["to"] = *vto;
      if (vlevel) params["level"] = *vlevel;
      if (vm) params["m"] = *vm;
      if (vrows) params["rows"] = *vrows;
      if (vcols) params["cols"] = *vcols;
      if (seed) params["seed"] = *seed;
      char* s = nullptr;
      int passed = 0;
      check(fk_verify(T.t, suite.c_str(), params.dump().c_str(), &s, &passed));
      return print_report(take(s), pformat);
    } else if (*lattice) {
      Tri T(tri);
      char* s = nullptr;
      if (out_kind == "poset")
        check(fk_poset_dot(T.t, from, to, level, &s));
      else
        check(fk_lattice(T.t, from, to, level, out_kind.c_str(), &s));
      std::cout << take(s);
      if (out_kind == "json") std::cout << "\n";
    } else if (*cover) {
      Tri T(tri);
      char* s = nullptr;
      check(fk_cover_json(T.t, from, to, level, &s));
      std::cout << take(s) << "\n";
    }
  } catch (const CliError& e) {
    std::cout.flush();
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
