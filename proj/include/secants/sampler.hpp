#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secants/classifier.hpp"
#include "secants/parameter_matrix.hpp"
#include "secants/tracker.hpp"

namespace secants {

struct SampleConfig {
  enum class Mode { Uniform, Ball };

  long count = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::Uniform;
  std::optional<ParameterMatrix> center;  // Ball mode
  std::optional<double> radius;           // Ball mode, in (0, 1)
  bool certify = false;
  int solve_attempts = 4;  // per-sample whole-solve retries

  void validate() const;  // throws Error on inconsistent settings
};

struct SampleRecord {
  long index = 0;
  std::optional<ParameterMatrix> matrix;  // absent only if sampling failed
  std::optional<TripleCount> triple;      // present only on generic solves
  std::string status = "ok";              // diagnostic; "ok" iff triple present
  bool certified = false;
  int attempts = 0;  // solve attempts consumed
};

struct FrequencyTable {
  std::map<int, long> by_nR;
  std::map<TripleCount, long> by_triple;
  long total = 0;
  long failures = 0;  // records without a triple; excluded from the maps
};

// Draw one real parameter matrix uniformly at random (unit Frobenius norm,
// last entry nonnegative: a unique representative of a uniform point of real
// projective 15-space). Entries come from 16 standard normals addressed by
// (seed, index), so any worker can produce sample `index` identically.
// Redraws on the invertibility threshold, at most 100 times
// (SamplingExhaustedError after that).
ParameterMatrix sample_uniform(std::uint64_t seed, std::uint64_t index);

// Perturb a center matrix within a Frobenius ball of the given radius
// (direction uniform on the sphere, length radius * u^(1/16)), then project
// back to the unit sphere with the same sign convention.
ParameterMatrix sample_ball(const ParameterMatrix& center, double radius,
                            std::uint64_t seed, std::uint64_t index);

struct BatchResult {
  std::vector<SampleRecord> records;
  FrequencyTable table;
};

// Sample, solve, and classify `config.count` instances. Failures are counted
// in the table and carried in the records, never dropped. Deterministic for
// fixed (config, start) regardless of thread count.
BatchResult run_batch(const SampleConfig& config, const StartSet& start, int threads = 1);

struct LedgerEntry {
  std::string witness;  // reference to the first record realizing the tuple
  long count = 0;
};

using RealizabilityLedger = std::map<TripleCount, LedgerEntry>;

// Fold certified records into the ledger; returns the newly realized tuples
// in lexicographic order. Non-admissible triples raise InadmissibleTupleError.
std::vector<TripleCount> ledger_update(RealizabilityLedger& ledger,
                                       const std::vector<SampleRecord>& records);

}  // namespace secants
