#pragma once

#include <array>
#include <utility>
#include <vector>

#include "secants/parameter_matrix.hpp"
#include "secants/types.hpp"

// Compiled-in reference data: the base instance with its ten solution
// representatives, the monodromy loop vertices with expected edge roots and
// permutations, the census gallery of eleven worked instances, and the
// realizability/frequency tables used by the report and example suites.
namespace secants::data {

const ParameterMatrix& base_matrix();

// One representative per orbit of the base instance, 4-decimal literals.
const std::array<SolutionPoint, 10>& base_representatives();

// Triangle loop vertices; loop in {1,2}, vertex in {1,2} (vertex 0 is the base).
const ParameterMatrix& loop_vertex(int loop, int vertex);

// Expected determinant roots per edge (v0->v1, v1->v2, v2->v0), 4 decimals,
// sorted by real part.
using EdgeRoots = std::array<cplx, 3>;
const std::array<EdgeRoots, 3>& loop_edge_roots(int loop);

// Loop permutations as published alongside the loop matrices (image arrays,
// images[i] = sigma(i+1)).  Their group order is 10!.
const std::array<std::array<int, 10>, 2>& reference_loop_permutations();

// Eleven worked instances spanning n_t = 10..0, in that order, each with its
// expected (n_t, n_p, n_m) and the totally-real representatives listed with it.
struct GalleryEntry {
  std::array<int, 3> triple;
  const ParameterMatrix& matrix;
  std::vector<SolutionPoint> listed_reps;
};
const std::vector<GalleryEntry>& census_gallery();

// The 128 tuples with a known witness, of the 161 admissible ones.
const std::vector<std::array<int, 3>>& realized_tuples_reference();

// Top-10 most frequent triples in a 100,000-sample census, with counts.
const std::vector<std::pair<std::array<int, 3>, long>>& top_triples_reference();

// n_R -> count per 100,000 samples.
const std::array<std::pair<int, long>, 6>& frequency_reference();

}  // namespace secants::data
