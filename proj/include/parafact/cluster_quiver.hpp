#ifndef PARAFACT_CLUSTER_QUIVER_HPP
#define PARAFACT_CLUSTER_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "parafact/cayley_graph.hpp"
#include "parafact/permutation.hpp"
#include "parafact/presentation.hpp"

namespace parafact {

// A quiver without loops or 2-cycles; vertices 0-based internally.
struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;
};

// File format: `vertices: n`, then `arrow: i j` lines with 1-based ids.
Quiver parse_quiver(const std::string& text);

// Cluster-style presentation for the supported quiver fragment: disjoint
// unions of isolated vertices, (arbitrarily oriented) paths, and oriented
// 3-cycles. Generators t1..tn; per vertex an involution relator, per
// arrow a braid relator, per non-adjacent pair a commutation relator, per
// oriented 3-cycle the two chained cycle relators. Throws
// UnsupportedQuiver otherwise.
Presentation quiver_to_presentation(const Quiver& q);

// The triangle fixture: generators t1, t2, t3 with involution, braid and
// cycle relators; equals quiver_to_presentation of the oriented 3-cycle
// 1 -> 2 -> 3 -> 1.
Presentation a3_cluster_presentation();

// t1 -> (1, 2), t2 -> (2, 3), t3 -> (2, 4) on four points.
PermutationMap pi_map();

// Verifies t_i t_j t_i t_k = t_k t_i t_j t_i for all six ordered triples
// of pairwise distinct generators of the triangle fixture's group.
bool derived_relation_check(const CayleyGraph& g);

}  // namespace parafact

#endif
