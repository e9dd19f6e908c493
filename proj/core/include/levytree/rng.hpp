#pragma once

#include <array>
#include <cstdint>

namespace levytree {

namespace detail {
/// One Philox4x32 block with 10 rounds.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);
}  // namespace detail

/// Counter-based random stream (Philox4x32-10).
///
/// The key is derived from the master seed and the high half of the counter
/// holds the stream index, so streams with different indices never share a
/// counter value. Same (seed, index) always reproduces the same sequence,
/// which is what makes replicate-per-stream parallelism deterministic.
/// Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    if (pos_ == 2) refill();
    const auto lo = static_cast<std::uint64_t>(block_[2 * pos_]);
    const auto hi = static_cast<std::uint64_t>(block_[2 * pos_ + 1]);
    ++pos_;
    return (hi << 32) | lo;
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }
  double exponential();
  double normal();

  /// Independent child stream, e.g. one per purpose inside a replicate.
  RngStream substream(std::uint64_t k) const;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t index() const noexcept { return index_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t index_;
  std::array<std::uint32_t, 2> key_{};
  std::uint64_t block_counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int pos_ = 2;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace levytree
