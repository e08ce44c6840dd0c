#include "secants/philox.hpp"

#include <cmath>
#include <numbers>

namespace secants {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& ctr,
                       const std::array<std::uint32_t, 2>& key) {
  std::uint64_t prod0 = std::uint64_t(kMul0) * ctr[0];
  std::uint64_t prod1 = std::uint64_t(kMul1) * ctr[2];
  std::uint32_t hi0 = std::uint32_t(prod0 >> 32), lo0 = std::uint32_t(prod0);
  std::uint32_t hi1 = std::uint32_t(prod1 >> 32), lo1 = std::uint32_t(prod1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    round_once(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t purpose)
    : key_{std::uint32_t(seed) ^ purpose, std::uint32_t(seed >> 32)},
      prefix_{std::uint32_t(index), std::uint32_t(index >> 32)} {}

void PhiloxStream::refill() {
  std::array<std::uint32_t, 4> ctr = {std::uint32_t(block_), std::uint32_t(block_ >> 32),
                                      prefix_[0], prefix_[1]};
  buffer_ = philox4x32(ctr, key_);
  ++block_;
  position_ = 0;
}

std::uint32_t PhiloxStream::next_u32() {
  if (position_ == 4) refill();
  return buffer_[position_++];
}

double PhiloxStream::next_unit() {
  return (double(next_u32()) + 1.0) * 0x1p-32;
}

double PhiloxStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_gaussian_;
  }
  double u1 = next_unit();
  double u2 = next_unit();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_gaussian_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

cplx PhiloxStream::next_unit_complex() {
  double theta = 2.0 * std::numbers::pi * next_unit();
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace secants
