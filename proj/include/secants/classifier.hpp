#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "secants/geometry.hpp"
#include "secants/types.hpp"

namespace secants {

// Reality type of the secant line attached to one orbit, by how conjugation
// acts on its coordinates:
//   TotallyReal    t-pair and s-pair both real
//   PartiallyReal  one pair real, the other a conjugate pair
//   MinimallyReal  both pairs conjugate pairs (the line is still real)
//   Nonreal        neither real nor conjugate; orbits of this kind occur in
//                  conjugate pairs
enum class SecantClass { TotallyReal, PartiallyReal, MinimallyReal, Nonreal };

const char* to_string(SecantClass c);

// Census of the ten orbits: counts of totally / partially / minimally real
// lines. n_R is the number of real lines; 10 - n_R is even for real targets.
struct TripleCount {
  int n_t = 0;
  int n_p = 0;
  int n_m = 0;

  int n_real() const { return n_t + n_p + n_m; }
  auto operator<=>(const TripleCount&) const = default;
};

// One orbit of the S2 x S2 action: swap (t1,t2), swap (s1,s2). The
// representative is the lexicographic minimum of the four images under the
// key (Re t1, Im t1, Re t2, Im t2, Re s1, Im s1, Re s2, Im s2).
struct OrbitRecord {
  SolutionPoint representative;
  std::array<SolutionPoint, 4> orbit;  // rep, swap_t, swap_s, swap both
  SecantClass secant_class = SecantClass::Nonreal;
  std::optional<int> conjugate_partner;  // index of the paired Nonreal orbit
  double residual = 0.0;                 // scale-invariant residual at the rep
};

// Classify a single representative. reality_tol decides "zero imaginary
// part"; any coordinate whose |Im| lands in (reality_tol, 10*reality_tol)
// raises AmbiguousRealityError instead of guessing. When the t-pair is
// neither real nor conjugate the s-pair must agree (ConjugationMismatchError
// otherwise): genuine solutions of a real instance come in conjugate orbits.
SecantClass classify_orbit(const SolutionPoint& rep, double reality_tol = 1e-8);

// Partition 4n points into n orbits of size 4 (greedy matching within
// matching_tol, using the quotient metric) and classify each. Points that do
// not close up into full orbits raise OrbitMismatchError.
std::vector<OrbitRecord> group_into_orbits(const std::vector<SolutionPoint>& points,
                                           double matching_tol = 1e-6,
                                           double reality_tol = 1e-8);

// Fill conjugate_partner for Nonreal orbits by locating, for each, the unique
// other orbit containing its conjugate. Throws ParityViolationError when the
// pairing is not a fixed-point-free involution on the Nonreal orbits.
void pair_conjugate_orbits(std::vector<OrbitRecord>& orbits, double matching_tol = 1e-6);

// Count classes across the ten orbits. Verifies the parity invariant
// (10 - n_real even) and that Nonreal orbits pair up under conjugation.
TripleCount census(const std::vector<OrbitRecord>& orbits, double matching_tol = 1e-6);

// All (n_t, n_p, n_m) with n_t + n_p + n_m <= 10 and 10 - (n_t+n_p+n_m) even,
// in lexicographic order. There are 161.
std::vector<TripleCount> admissible_tuples();

struct RealizabilityDiff {
  std::vector<TripleCount> realized;  // observed, lexicographic
  std::vector<TripleCount> missing;   // admissible but not observed
};

// Split the admissible list against an observed set. Observed tuples that are
// not admissible raise InadmissibleTupleError.
RealizabilityDiff realizability_diff(const std::vector<TripleCount>& observed);

}  // namespace secants
