#pragma once

// Counter-based random streams (Philox4x32-10, Salmon et al., SC'11).
//
// Every Monte Carlo trial and group owns an independent stream addressed by
// (seed, trial, group); no generator state is shared between threads, so the
// sample path does not depend on how trials are scheduled.

#include <array>
#include <cstdint>
#include <limits>

namespace risnoma {

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// A 32-bit UniformRandomBitGenerator over one Philox substream.
///
/// Word 0 of the counter walks the stream (2^34 outputs); words 1..3 carry the
/// (group, trial) address, the key carries the seed.
class Substream {
 public:
  using result_type = std::uint32_t;

  Substream(std::uint64_t seed, std::uint64_t trial, std::uint32_t group)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0u, group, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (used_ == 4) {
      buffer_ = Philox4x32::block(ctr_, key_);
      ++ctr_[0];
      used_ = 0;
    }
    return buffer_[used_++];
  }

  /// Uniform double on the open interval (0, 1) with 53 random bits.
  double uniform() {
    const std::uint64_t hi = (*this)() >> 5;
    const std::uint64_t lo = (*this)() >> 6;
    const std::uint64_t bits = (hi << 26) | lo;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace risnoma
