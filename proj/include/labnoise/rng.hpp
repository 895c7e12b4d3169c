#pragma once

#include <cstdint>
#include <vector>

namespace labnoise {

/// Purpose tag for a derived random stream. Streams with different tags are
/// decorrelated even when they share a master seed.
enum class StreamPurpose : std::uint64_t {
  prior_noise = 1,
  epoch_attack = 2,
  shuffle = 3,
  init = 4,
  data_gen = 5,
};

const char* to_string(StreamPurpose p);

/// Deterministic counter-based generator (splitmix64). The output at step t is
/// a pure function of (seed, t), so a stream can be re-derived and replayed
/// independently of how other streams were consumed.
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamPurpose purpose)
      : seed_(seed), purpose_(purpose), state_(seed) {}

  std::uint64_t seed() const { return seed_; }
  StreamPurpose purpose() const { return purpose_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n). Lemire multiply-shift; n must be > 0.
  std::uint64_t uniform_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (both values consumed, one returned, so
  /// the draw count per call is fixed).
  double normal();

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  StreamPurpose purpose_;
  std::uint64_t state_;
};

/// Derives an independent stream from (master_seed, purpose, index). The three
/// inputs are avalanche-mixed, so changing any one of them changes the whole
/// sequence.
RngStream derive_stream(std::uint64_t master_seed, StreamPurpose purpose,
                        std::uint64_t index);

}  // namespace labnoise
