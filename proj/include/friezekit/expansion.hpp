#pragma once

#include <array>
#include <string>
#include <vector>

#include "friezekit/laurent.hpp"
#include "friezekit/surface.hpp"

namespace fk {

enum Side { N = 0, E = 1, S = 2, W = 3 };

struct GraphEdge {
  int u = 0, v = 0;
  std::string label;
  bool boundary = false;
};

struct Tile {
  std::string diagonal;
  std::array<int, 4> edge{};  // indexed by Side
  std::array<CV, 4> corner;   // SW, SE, NE, NW cover vertices
  int x = 0, y = 0;
  char glue = 0;              // 'N' or 'E' towards the next tile, 0 on the last
};

struct TileGraph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<Tile> tiles;
  bool band = false;
};

TileGraph snake_graph(const CrossingData& cd);
TileGraph snake_graph(const Triangulation& T, const ArcSpec& g);
TileGraph band_graph(const Triangulation& T, int k);

using EdgeSet = std::vector<int>;

// Perfect matchings by transfer along the tile order; good matchings on bands.
std::vector<EdgeSet> matchings_transfer(const TileGraph& G);
// Reference enumeration over all edge subsets.
std::vector<EdgeSet> matchings_bruteforce(const TileGraph& G);
bool is_good(const TileGraph& G, const EdgeSet& m);

struct Matching {
  EdgeSet edges;
  LaurentPoly weight;
};

LaurentPoly edge_weight(const TileGraph& G, const EdgeSet& m, bool keep_boundary);
std::vector<Matching> enumerate_matchings(const TileGraph& G, bool keep_boundary = true);
// Sum of matching weights of a snake graph, by transfer with polynomial states.
LaurentPoly matching_polynomial(const TileGraph& G, bool keep_boundary);
LaurentPoly crossing_monomial(const TileGraph& G);

enum class Engine { matching, tpath, both };
enum class BraceletEngine { band, chebyshev, both };

Engine parse_engine(const std::string& s);
BraceletEngine parse_bracelet_engine(const std::string& s);

LaurentPoly laurent_of_lift(const Triangulation& T, long s, long t, Engine e, bool keep_boundary);
LaurentPoly laurent_of_arc(const Triangulation& T, const ArcSpec& g, Engine e, bool keep_boundary);
LaurentPoly laurent_of_bracelet(const Triangulation& T, int k, BraceletEngine e,
                                bool keep_boundary = false);

nlohmann::json graph_to_json(const TileGraph& G);

}  // namespace fk
