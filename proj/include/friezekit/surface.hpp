#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "friezekit/error.hpp"
#include "json.hpp"

namespace fk {

enum class SurfaceKind { polygon, punctured_disk, annulus };

struct MarkedSurface {
  SurfaceKind kind = SurfaceKind::polygon;
  int n = 0;
  int m = 0;
};

std::string kind_name(SurfaceKind k);

// A vertex of the strip model. Lower vertices sit on the designated boundary,
// upper vertices on the inner boundary of an annulus, and the puncture of a
// punctured disk is a single point above the strip.
struct CV {
  enum Kind : int { lower = 0, upper = 1, puncture = 2 };
  Kind kind = lower;
  long pos = 0;

  static CV lo(long p) { return {lower, p}; }
  static CV up(long u) { return {upper, u}; }
  static CV punct() { return {puncture, 0}; }

  bool is_lower() const { return kind == lower; }
  // Position along the boundary of the strip disk, counterclockwise.
  std::pair<int, long> key() const {
    if (kind == lower) return {0, pos};
    if (kind == upper) return {1, -pos};
    return {1, 0};
  }
  bool operator==(const CV& o) const { return kind == o.kind && pos == o.pos; }
  bool operator<(const CV& o) const { return key() < o.key(); }
};

std::string cv_name(const CV& v);

enum class ArcKind { peripheral, radius, bridge, ell_loop };

struct Arc {
  std::string label;
  ArcKind kind = ArcKind::peripheral;
  long a = 0;             // from / at / outer
  long b = 0;             // to / inner
  bool inner = false;     // peripheral on the inner boundary
  std::string radius;     // enclosed radius of an ell_loop

  bool operator==(const Arc& o) const = default;
};

struct LiftEdge {
  CV u, v;  // u < v
  std::string label;
  bool boundary = false;
};

// Triangle of the strip with vertices in counterclockwise order.
// side[k] joins v[k] and v[(k+1)%3].
struct LiftTri {
  std::array<CV, 3> v;
  std::array<std::string, 3> side;
  std::array<bool, 3> boundary{};
  bool self_folded = false;

  bool has(const CV& x) const { return v[0] == x || v[1] == x || v[2] == x; }
  int side_index(const CV& a, const CV& b) const;
  CV opposite(int side_k) const { return v[(side_k + 2) % 3]; }
  bool operator==(const LiftTri& o) const { return v == o.v; }
};

class Triangulation {
 public:
  static Triangulation from_json(const nlohmann::json& doc);
  static Triangulation from_file(const std::string& path);
  nlohmann::json to_json() const;

  const MarkedSurface& surface() const { return surf_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<LiftTri>& triangles() const { return tris_; }
  int n() const { return surf_.n; }

  // Arc labels in file order, then boundary labels.
  std::vector<std::string> variables() const;
  std::vector<std::string> arc_labels() const;
  std::vector<std::string> boundary_labels() const;
  bool is_boundary_label(const std::string& s) const;
  const Arc* find_arc(const std::string& label) const;

  // Label of a lifted edge, if the edge belongs to the lifted triangulation.
  std::optional<std::pair<std::string, bool>> edge_label(const CV& a, const CV& b) const;

  // Triangles of the strip whose lower vertices all lie in [lo, hi].
  std::vector<LiftTri> triangles_between(long lo, long hi) const;

  Triangulation flipped(const std::string& label) const;
  // Annulus seen from its inner boundary: the strip rotated by a half turn.
  Triangulation inner_view() const;

  std::vector<int> quiddity() const;
  std::vector<std::vector<int>> signed_adjacency() const;

 private:
  void normalize_arcs();
  void validate();
  void derive_triangles();
  CV shift(const CV& x, long k) const;
  long shift_index(const CV& x) const;
  std::pair<CV, CV> canonical(const CV& a, const CV& b) const;
  std::vector<LiftEdge> arc_lifts(long k0, long k1) const;
  std::vector<LiftTri> cliques(const std::vector<LiftEdge>& edges) const;
  LiftTri make_tri(CV a, CV b, CV c) const;
  long coord_slack() const;

  MarkedSurface surf_;
  std::vector<Arc> arcs_;
  std::vector<std::string> outer_labels_;  // edge (i, i+1), i = 1..n
  std::vector<std::string> inner_labels_;  // edge (u, u+1), u = 1..m
  std::map<std::pair<std::pair<int, long>, std::pair<int, long>>, std::pair<std::string, bool>>
      edges_;
  std::vector<LiftTri> tris_;
};

// Generalized peripheral arc gamma_k(i, j) or its lift (s, t) on the strip.
struct ArcSpec {
  long i = 1, j = 1;
  int k = 1;
  long n = 1;

  long lift_from() const { return i; }
  long lift_to() const { return i < j ? j + (k - 1) * n : j + k * n; }
};

ArcSpec make_arc(long i, long j, int k, long n);

// Complement of an arc. Levels at or below zero are formal tokens; the
// value of the token with level -r is the negative of the arc with level r+1.
struct ComplementSpec {
  long i = 1, j = 1;
  int k = 0;
  long n = 1;
  bool empty() const { return k == 0 && i == j; }
};
ComplementSpec complement(const ArcSpec& g);

struct CrossedEdge {
  CV rho;     // endpoint to the right of the arc
  CV lambda;  // endpoint to the left
  std::string label;
};

struct CrossingData {
  CV s, t;
  std::vector<LiftTri> tris;        // Delta_0 .. Delta_d
  std::vector<CrossedEdge> edges;   // e_1 .. e_d
  std::string direct_label;         // set when nothing is crossed
  bool direct_boundary = false;

  size_t d() const { return edges.size(); }
};

// Crossing data of the lifted peripheral arc from lower position s to t.
CrossingData crossing_data(const Triangulation& T, long s, long t);
CrossingData crossing_data(const Triangulation& T, const ArcSpec& g);

// Lifts of bridges crossed by the core loop of an annulus, in one period.
struct BandData {
  std::vector<LiftTri> tris;       // Delta_0 .. Delta_{kp}
  std::vector<CrossedEdge> edges;  // V_1 .. V_{kp}
  long shift_lower = 0, shift_upper = 0;
  int k = 1;
};
BandData band_data(const Triangulation& T, int k);

}  // namespace fk
