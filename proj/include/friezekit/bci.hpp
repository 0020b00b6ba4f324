#pragma once

#include <string>
#include <utility>
#include <vector>

#include "friezekit/laurent.hpp"
#include "friezekit/surface.hpp"

namespace fk {

struct CoverEdge {
  CV u, v;
  std::string label;
  bool boundary = false;  // boundary edge of the surface
  int k = 0;              // crossing index 1..d, or 0 when not crossed
  int tri = -1;           // owning triangle for uncrossed edges
  bool right = false;     // uncrossed edge on the right side of the arc
};

struct ForcedTriangle {
  LiftTri tri;
  CV vertex;  // the far vertex matched to it
  std::string name;
};

struct Cover {
  CV s, t;
  std::vector<LiftTri> tris;           // Delta_0 .. Delta_d
  std::vector<CrossedEdge> crossed;    // e_1 .. e_d
  std::vector<CoverEdge> edges;        // crossed edges then polygon sides
  std::vector<CV> R;                   // right vertices after reduction
  std::vector<std::pair<int, int>> fan;  // FAN(R_i) as [first, last] triangle indices
  std::vector<CV> L;                   // left vertices in order from s
  std::vector<CV> R_full;              // every lower position strictly between s and t
  std::vector<ForcedTriangle> forced;  // triangles matched before reduction
  std::string direct_label;            // arc of T or boundary edge when d = 0
  bool direct_boundary = false;

  size_t d() const { return crossed.size(); }
  size_t r() const { return R.size(); }
  // 1-based position of R_i among all right vertices.
  int full_index(size_t i) const;
};

Cover polygon_cover(const Triangulation& T, const CrossingData& cd);
Cover polygon_cover(const Triangulation& T, const ArcSpec& g);

using BCITuple = std::vector<int>;

std::vector<BCITuple> enumerate_bci(const Cover& c);
std::vector<BCITuple> enumerate_bci_bruteforce(const Cover& c);
bool is_bci(const Cover& c, const BCITuple& b);
std::string tuple_name(const Cover& c, const BCITuple& b, bool full);

struct TPath {
  std::vector<CV> verts;          // a_0 .. a_L
  std::vector<CoverEdge> steps;   // L steps

  bool operator==(const TPath& o) const;
  std::string str() const;
};

struct TPathReport {
  bool t[6] = {false, false, false, false, false, false};
  bool ok() const {
    for (bool x : t)
      if (!x) return false;
    return true;
  }
  std::string str() const;
};

TPath trail(const Cover& c, const BCITuple& b);
BCITuple triangles_of(const Cover& c, const TPath& a);
TPathReport validate_tpath(const Cover& c, const TPath& a);
std::vector<TPath> enumerate_tpaths(const Cover& c);
LaurentPoly tpath_weight(const TPath& a, bool keep_boundary);

LaurentPoly expand_via_bci(const Triangulation& T, const CrossingData& cd, bool keep_boundary);

struct Lattice {
  std::vector<BCITuple> nodes;
  struct Twist {
    int from, to;  // up twist
    int r;         // index into Cover::R
  };
  std::vector<Twist> twists;
  int minimal = -1, maximal = -1;
  std::vector<LaurentPoly> height;
  std::vector<int> rank;
};

Lattice bci_lattice(const Cover& c);

struct PosetQ {
  int d = 0;
  std::vector<std::pair<int, int>> arrows;  // (a, b): a < b, 1-based
};

PosetQ poset_Q(const Cover& c);
std::vector<std::vector<int>> order_ideals(const PosetQ& q);
// Down-set of crossings associated with a tuple.
std::vector<int> ideal_of(const Cover& c, const BCITuple& b);
// Checks that b -> ideal_of(b) is a graded isomorphism onto J(Q).
bool check_lattice_isomorphism(const Cover& c, const Lattice& L, const PosetQ& q, std::string* why);

std::string lattice_dot(const Cover& c, const Lattice& L);
std::string poset_dot(const PosetQ& q);
nlohmann::json lattice_json(const Cover& c, const Lattice& L);
nlohmann::json cover_json(const Cover& c);

}  // namespace fk
