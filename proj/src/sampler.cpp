#include "secants/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "secants/certifier.hpp"
#include "secants/philox.hpp"

namespace secants {

namespace {

constexpr int kMaxRedraws = 100;

std::array<double, 16> draw_unit_direction(PhiloxStream& stream) {
  std::array<double, 16> v;
  double norm2 = 0.0;
  for (double& x : v) {
    x = stream.next_gaussian();
    norm2 += x * x;
  }
  double norm = std::sqrt(norm2);
  if (!(norm > 0.0)) return draw_unit_direction(stream);  // measure-zero redraw
  for (double& x : v) x /= norm;
  return v;
}

ParameterMatrix matrix_from_entries(const std::array<double, 16>& v) {
  Mat4c m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[4 * i + j];
  return ParameterMatrix::from_entries(m);
}

std::array<double, 16> flatten(const Mat4c& m) {
  std::array<double, 16> v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[4 * i + j] = m(i, j).real();
  return v;
}

void normalize_with_sign(std::array<double, 16>& v) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  double norm = std::sqrt(norm2);
  if (!(norm > 0.0)) throw SamplingExhaustedError("sampling: zero direction vector");
  for (double& x : v) x /= norm;
  if (v[15] < 0.0)
    for (double& x : v) x = -x;
}

// Mix the sample index into the tracker seed so per-sample retry streams are
// independent; the constant is the 64-bit golden-ratio increment.
std::uint64_t per_sample_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
}

}  // namespace

void SampleConfig::validate() const {
  if (count < 0) throw Error("sampler: count must be nonnegative");
  if (mode == Mode::Ball) {
    if (!center || !radius) throw Error("sampler: ball mode needs a center and radius");
    if (!(*radius > 0.0 && *radius < 1.0))
      throw Error("sampler: ball radius must lie in (0, 1)");
  }
  if (solve_attempts < 1) throw Error("sampler: solve_attempts must be positive");
}

ParameterMatrix sample_uniform(std::uint64_t seed, std::uint64_t index) {
  PhiloxStream stream(seed, index, purpose::kUniformEntries);
  for (int tries = 0; tries < kMaxRedraws; ++tries) {
    std::array<double, 16> v = draw_unit_direction(stream);
    if (v[15] < 0.0)
      for (double& x : v) x = -x;
    try {
      return matrix_from_entries(v);
    } catch (const SingularMatrixError&) {
      continue;  // redraw
    }
  }
  std::ostringstream os;
  os << "sample_uniform: " << kMaxRedraws << " redraws failed at index " << index;
  throw SamplingExhaustedError(os.str());
}

ParameterMatrix sample_ball(const ParameterMatrix& center, double radius,
                            std::uint64_t seed, std::uint64_t index) {
  if (!(radius > 0.0 && radius < 1.0))
    throw Error("sample_ball: radius must lie in (0, 1)");
  if (!center.is_real()) throw Error("sample_ball: center must be real");
  std::array<double, 16> base = flatten(center.entries());
  normalize_with_sign(base);

  PhiloxStream directions(seed, index, purpose::kBallDirection);
  PhiloxStream radii(seed, index, purpose::kBallRadius);
  for (int tries = 0; tries < kMaxRedraws; ++tries) {
    std::array<double, 16> dir = draw_unit_direction(directions);
    // u^(1/16) makes the radial density uniform over the 16-ball volume.
    const double length = radius * std::pow(radii.next_unit(), 1.0 / 16.0);
    std::array<double, 16> v = base;
    for (int i = 0; i < 16; ++i) v[i] += length * dir[i];
    normalize_with_sign(v);
    try {
      return matrix_from_entries(v);
    } catch (const SingularMatrixError&) {
      continue;
    }
  }
  std::ostringstream os;
  os << "sample_ball: " << kMaxRedraws << " redraws failed at index " << index;
  throw SamplingExhaustedError(os.str());
}

namespace {

SampleRecord run_one(const SampleConfig& config, const StartSet& start, long index) {
  SampleRecord rec;
  rec.index = index;
  try {
    ParameterMatrix M = config.mode == SampleConfig::Mode::Uniform
                            ? sample_uniform(config.seed, std::uint64_t(index))
                            : sample_ball(*config.center, *config.radius, config.seed,
                                          std::uint64_t(index));
    rec.matrix = M;

    TrackerConfig tcfg;
    tcfg.seed = per_sample_seed(config.seed, std::uint64_t(index));
    tcfg.gamma =
        PhiloxStream(config.seed, std::uint64_t(index), purpose::kGamma).next_unit_complex();

    SolveResult solved = solve_at_parameter(M, start, tcfg, 1, config.solve_attempts);
    rec.attempts = solved.attempts;
    if (!solved.generic) {
      rec.status = "nongeneric: " + solved.diagnostic;
      return rec;
    }
    rec.triple = census(solved.orbits);

    if (config.certify) {
      try {
        CertificationReport report = certify_census(M, solved.orbits, false);
        rec.certified =
            report.census_certified.has_value() && *report.census_certified == *rec.triple;
      } catch (const Error&) {
        rec.certified = false;  // census stays as heuristic data, flagged uncertified
      }
    }
  } catch (const Error& e) {
    rec.status = e.what();
  }
  return rec;
}

}  // namespace

BatchResult run_batch(const SampleConfig& config, const StartSet& start, int threads) {
  config.validate();
  BatchResult out;
  out.records.resize(std::size_t(config.count));
  threads = std::clamp<long>(threads, 1, std::max<long>(1, config.count));

  if (threads == 1) {
    for (long i = 0; i < config.count; ++i) out.records[std::size_t(i)] = run_one(config, start, i);
  } else {
    std::atomic<long> next{0};
    auto worker = [&]() {
      for (long i = next.fetch_add(1); i < config.count; i = next.fetch_add(1))
        out.records[std::size_t(i)] = run_one(config, start, i);
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const SampleRecord& rec : out.records) {
    ++out.table.total;
    if (rec.triple) {
      ++out.table.by_nR[rec.triple->n_real()];
      ++out.table.by_triple[*rec.triple];
    } else {
      ++out.table.failures;
    }
  }
  return out;
}

std::vector<TripleCount> ledger_update(RealizabilityLedger& ledger,
                                       const std::vector<SampleRecord>& records) {
  static const std::vector<TripleCount> admissible = admissible_tuples();
  std::vector<TripleCount> fresh;
  for (const SampleRecord& rec : records) {
    if (!rec.certified || !rec.triple) continue;
    const TripleCount& t = *rec.triple;
    if (!std::binary_search(admissible.begin(), admissible.end(), t)) {
      std::ostringstream os;
      os << "ledger: certified census (" << t.n_t << "," << t.n_p << "," << t.n_m
         << ") is not admissible — census bug";
      throw InadmissibleTupleError(os.str());
    }
    auto it = ledger.find(t);
    if (it == ledger.end()) {
      std::ostringstream witness;
      witness << "record:" << rec.index;
      ledger.emplace(t, LedgerEntry{witness.str(), 1});
      fresh.push_back(t);
    } else {
      ++it->second.count;
    }
  }
  std::sort(fresh.begin(), fresh.end());
  return fresh;
}

}  // namespace secants
