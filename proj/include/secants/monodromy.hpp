#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secants/parameter_matrix.hpp"
#include "secants/tracker.hpp"
#include "secants/types.hpp"

namespace secants {

// Permutation of {1,...,10}; images[i] is the image of i+1.
struct PermutationTen {
  std::array<int, 10> images{};

  static PermutationTen identity();
  int operator()(int i) const { return images[i - 1]; }  // 1-based
  bool operator==(const PermutationTen&) const = default;
  void validate() const;  // throws Error unless a bijection of 1..10
};

// (p o q)(i) = p(q(i)).
PermutationTen compose(const PermutationTen& p, const PermutationTen& q);
PermutationTen inverse(const PermutationTen& p);

// Cycle notation with fixed points listed, e.g. "(1)(2 6)(3 10 5)(4 8 9)(7)".
std::string cycle_notation(const PermutationTen& p);
// Parses cycles; omitted points are fixed. Accepts space- or comma-separated
// entries, e.g. "(1 8 9 3 10 5 7 2)(4 6)".
PermutationTen permutation_from_cycles(const std::string& text);

// Exact order of the subgroup of S10 generated, via a deterministic
// Schreier-Sims stabilizer chain.
std::uint64_t group_order(const std::vector<PermutationTen>& generators);

struct TriangleLoop {
  std::array<ParameterMatrix, 3> vertices;  // v0 is the base instance
  std::string label;
};

struct EdgeValidity {
  int from = 0;  // vertex indices within the loop
  int to = 0;
  EdgeRootsResult roots;  // of det(a*v_from + (1-a)*v_to)
};

// Root check of all three edges v0-v1, v1-v2, v2-v0, in that order and
// orientation. Propagates DegenerateCubicError.
std::array<EdgeValidity, 3> validate_loop(const TriangleLoop& loop);

struct MonodromyRun {
  TriangleLoop loop;
  std::optional<PermutationTen> permutation;  // absent only on failure paths
  std::array<EdgeValidity, 3> edge_validity{};
  std::vector<PathResult> path_statuses;  // 30: orbit-major, edges innermost
  std::array<SolutionPoint, 10> final_points{};
};

// Carry each of the ten representatives around the loop edge by edge
// (gamma disabled: the permutation is defined by the literal segments) and
// match the final endpoints back to the base orbits in the quotient metric.
// The best match must beat the second best by a factor of 10, else
// AmbiguousMatchingError; any non-converged path raises LoopFailureError.
MonodromyRun track_loop(const TriangleLoop& loop, const StartSet& start,
                        const TrackerConfig& cfg);

}  // namespace secants
