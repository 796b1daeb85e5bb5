#pragma once

// Counter-based random streams.
//
// Every stream is addressed by (seed, index, substream); replicate r of an
// experiment uses index r, so results never depend on how replicates are
// scheduled across workers. The generator is Philox4x32-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/random/normal_distribution.hpp>

namespace recwalk {

namespace detail {

inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

} // namespace detail

/// An independent random stream. Satisfies UniformRandomBitGenerator with a
/// 64-bit result type.
class Stream {
public:
  using result_type = std::uint64_t;

  Stream(std::uint64_t seed, std::uint64_t index, std::uint16_t substream = 0)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      index_(index), substream_(substream) {
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 2) {
      refill();
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_(*this); }

  std::uint64_t index() const { return index_; }
  std::uint16_t substream() const { return substream_; }

private:
  void refill() {
    // 48-bit block counter; the substream tag lives in the upper half of word 1.
    const std::array<std::uint32_t, 4> ctr{
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>((block_ >> 32) & 0xFFFFu) |
            (static_cast<std::uint32_t>(substream_) << 16),
        static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32)};
    const auto out = detail::philox4x32_10(ctr, key_);
    buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
    buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
    ++block_;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t index_;
  std::uint16_t substream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int pos_ = 2;
  boost::random::normal_distribution<double> normal_{};
};

/// Substream tags used across the library.
inline constexpr std::uint16_t kStepSubstream = 0;
inline constexpr std::uint16_t kWaitSubstream = 1;

} // namespace recwalk
