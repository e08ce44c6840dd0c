#include "secants/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace secants {

namespace {

enum class PairKind { Real, Conjugate, Neither, Ambiguous };

// How conjugation acts on an unordered pair (a, b): fixes both (real pair),
// swaps them (conjugate pair), or moves them off the pair entirely.
PairKind pair_kind(cplx a, cplx b, double tol) {
  const double ia = std::abs(a.imag()), ib = std::abs(b.imag());
  if (ia <= tol && ib <= tol) return PairKind::Real;
  if ((ia > tol && ia <= 10 * tol) || (ib > tol && ib <= 10 * tol))
    return PairKind::Ambiguous;
  if (std::abs(b - std::conj(a)) <= tol) return PairKind::Conjugate;
  return PairKind::Neither;
}

double quotient_distance(const SolutionPoint& a, const SolutionPoint& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const SolutionPoint& img : orbit_expand(a)) best = std::min(best, distance(img, b));
  return best;
}

std::string tuple_str(const TripleCount& t) {
  std::ostringstream os;
  os << "(" << t.n_t << "," << t.n_p << "," << t.n_m << ")";
  return os.str();
}

}  // namespace

const char* to_string(SecantClass c) {
  switch (c) {
    case SecantClass::TotallyReal: return "TotallyReal";
    case SecantClass::PartiallyReal: return "PartiallyReal";
    case SecantClass::MinimallyReal: return "MinimallyReal";
    case SecantClass::Nonreal: return "Nonreal";
  }
  return "?";
}

SecantClass classify_orbit(const SolutionPoint& rep, double reality_tol) {
  PairKind t = pair_kind(rep.t1, rep.t2, reality_tol);
  PairKind s = pair_kind(rep.s1, rep.s2, reality_tol);
  if (t == PairKind::Ambiguous || s == PairKind::Ambiguous) {
    std::ostringstream os;
    os << "classify: an imaginary part falls in the ambiguity band ("
       << reality_tol << ", " << 10 * reality_tol << ")";
    throw AmbiguousRealityError(os.str());
  }
  if (t == PairKind::Real && s == PairKind::Real) return SecantClass::TotallyReal;
  if ((t == PairKind::Real && s == PairKind::Conjugate) ||
      (t == PairKind::Conjugate && s == PairKind::Real))
    return SecantClass::PartiallyReal;
  if (t == PairKind::Conjugate && s == PairKind::Conjugate)
    return SecantClass::MinimallyReal;
  if (t == PairKind::Neither && s == PairKind::Neither) return SecantClass::Nonreal;
  // One pair is fixed by conjugation, the other is moved off itself: no
  // solution of a real instance behaves this way.
  throw ConjugationMismatchError(
      "classify: conjugation fixes one coordinate pair but moves the other");
}

std::vector<OrbitRecord> group_into_orbits(const std::vector<SolutionPoint>& points,
                                           double matching_tol, double reality_tol) {
  if (points.size() % 4 != 0)
    throw OrbitMismatchError("grouping: point count is not a multiple of 4");
  const int n = int(points.size());
  std::vector<bool> used(points.size(), false);
  std::vector<OrbitRecord> out;
  out.reserve(points.size() / 4);

  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    OrbitRecord rec;
    rec.representative = canonical_representative(points[i]);
    rec.orbit = orbit_expand(rec.representative);
    // Claim the three remaining images among the unused points. Expand from
    // points[i] itself: the canonical member may sit elsewhere in the input,
    // and its own expansion would ask for points[i] a second time.
    const std::array<SolutionPoint, 4> images = orbit_expand(points[i]);
    for (int k = 1; k < 4; ++k) {
      int found = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        double d = distance(images[k], points[j]);
        if (d < best) {
          best = d;
          found = j;
        }
      }
      if (found < 0 || best > matching_tol) {
        std::ostringstream os;
        os << "grouping: orbit image " << k << " of point " << i
           << " has no partner within " << matching_tol << " (closest " << best << ")";
        throw OrbitMismatchError(os.str());
      }
      used[found] = true;
    }
    rec.secant_class = classify_orbit(rec.representative, reality_tol);
    out.push_back(std::move(rec));
  }
  return out;
}

void pair_conjugate_orbits(std::vector<OrbitRecord>& orbits, double matching_tol) {
  const int n = int(orbits.size());
  for (OrbitRecord& o : orbits) o.conjugate_partner.reset();
  for (int i = 0; i < n; ++i) {
    if (orbits[i].secant_class != SecantClass::Nonreal) continue;
    if (orbits[i].conjugate_partner) continue;
    const SolutionPoint conj_rep = orbits[i].representative.conj();
    int found = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double d = quotient_distance(conj_rep, orbits[j].representative);
      if (d < best) {
        best = d;
        found = j;
      }
    }
    if (found < 0 || best > matching_tol)
      throw ParityViolationError(
          "conjugate pairing: a nonreal orbit has no conjugate partner");
    if (found == i)
      throw ParityViolationError(
          "conjugate pairing: a nonreal orbit is self-conjugate");
    if (orbits[found].secant_class != SecantClass::Nonreal ||
        orbits[found].conjugate_partner)
      throw ParityViolationError(
          "conjugate pairing: pairing is not an involution on nonreal orbits");
    orbits[i].conjugate_partner = found;
    orbits[found].conjugate_partner = i;
  }
}

TripleCount census(const std::vector<OrbitRecord>& orbits, double matching_tol) {
  TripleCount t;
  int nonreal = 0;
  for (const OrbitRecord& o : orbits) {
    switch (o.secant_class) {
      case SecantClass::TotallyReal: ++t.n_t; break;
      case SecantClass::PartiallyReal: ++t.n_p; break;
      case SecantClass::MinimallyReal: ++t.n_m; break;
      case SecantClass::Nonreal: ++nonreal; break;
    }
  }
  if (nonreal % 2 != 0) {
    std::ostringstream os;
    os << "census: odd number of nonreal orbits (" << nonreal << ")";
    throw ParityViolationError(os.str());
  }
  if (nonreal > 0) {
    std::vector<OrbitRecord> copy = orbits;
    pair_conjugate_orbits(copy, matching_tol);  // throws when pairing fails
  }
  return t;
}

std::vector<TripleCount> admissible_tuples() {
  std::vector<TripleCount> out;
  for (int n_t = 0; n_t <= 10; ++n_t)
    for (int n_p = 0; n_p + n_t <= 10; ++n_p)
      for (int n_m = 0; n_m + n_p + n_t <= 10; ++n_m)
        if ((10 - (n_t + n_p + n_m)) % 2 == 0) out.push_back({n_t, n_p, n_m});
  std::sort(out.begin(), out.end());
  return out;
}

RealizabilityDiff realizability_diff(const std::vector<TripleCount>& observed) {
  const std::vector<TripleCount> all = admissible_tuples();
  const std::set<TripleCount> admissible(all.begin(), all.end());
  std::set<TripleCount> seen;
  for (const TripleCount& t : observed) {
    if (!admissible.count(t))
      throw InadmissibleTupleError("observed tuple " + tuple_str(t) + " is not admissible");
    seen.insert(t);
  }
  RealizabilityDiff diff;
  for (const TripleCount& t : all) {
    if (seen.count(t))
      diff.realized.push_back(t);
    else
      diff.missing.push_back(t);
  }
  return diff;
}

}  // namespace secants
