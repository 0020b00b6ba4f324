#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friezekit/bci.hpp"
#include "friezekit/frieze.hpp"

namespace fk {

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

struct VerifyParams {
  std::optional<long> from, to;
  std::optional<int> level, m;
  std::optional<int> rows, cols;
  std::uint64_t seed = 20160401;
};

extern const std::vector<std::string> kSuites;

// Round trips, counts and lattice structure for one arc.
Report bijection_report(const Triangulation& T, const ArcSpec& g, int max_crossings = 8);

// Peripheral arcs gamma_k(i, j) with k <= level, in a fixed order.
std::vector<ArcSpec> arc_sweep(const Triangulation& T, int level);

Report run_verify(const Triangulation& T, const std::string& suite, const VerifyParams& p);

}  // namespace fk
