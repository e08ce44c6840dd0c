#pragma once

#include <array>
#include <cstdint>

#include "secants/types.hpp"

namespace secants {

// Philox4x32-10 counter-based generator. Pure integer arithmetic, so every
// platform produces the same stream for the same (counter, key); that is what
// makes sampling reproducible under any thread count: each draw is addressed,
// never sequenced.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Stream facade over the block function. A stream is addressed by
// (seed, index, purpose): seed is the run seed, index the sample number,
// purpose a fixed tag separating independent uses (offsets, radii, gamma...).
// Blocks are consumed in increasing block-counter order.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t purpose);

  std::uint32_t next_u32();
  // Uniform on (0, 1]: (x + 1) * 2^-32. Never returns 0, so logs are safe.
  double next_unit();
  // Standard normal via Box-Muller; generated in pairs, second value cached.
  double next_gaussian();
  // Uniformly distributed point of the unit circle.
  cplx next_unit_complex();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> prefix_;  // sample index, occupies counter words 2..3
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int position_ = 4;
  double spare_gaussian_ = 0.0;
  bool have_spare_ = false;
};

// Purpose tags. Values are arbitrary but frozen: changing any of them changes
// every downstream stream.
namespace purpose {
inline constexpr std::uint32_t kUniformEntries = 0x7E01;
inline constexpr std::uint32_t kBallDirection = 0x7E02;
inline constexpr std::uint32_t kBallRadius = 0x7E03;
inline constexpr std::uint32_t kGamma = 0x7E04;
inline constexpr std::uint32_t kRetryGamma = 0x7E05;
}  // namespace purpose

}  // namespace secants
