#include "labnoise/rng.hpp"

#include <cmath>
#include <numbers>

namespace labnoise {

namespace {

std::uint64_t avalanche(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
  return z ^ (z >> 33);
}

}  // namespace

const char* to_string(StreamPurpose p) {
  switch (p) {
    case StreamPurpose::prior_noise: return "prior_noise";
    case StreamPurpose::epoch_attack: return "epoch_attack";
    case StreamPurpose::shuffle: return "shuffle";
    case StreamPurpose::init: return "init";
    case StreamPurpose::data_gen: return "data_gen";
  }
  return "unknown";
}

double RngStream::normal() {
  // u1 in (0, 1]: avoids log(0).
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

RngStream derive_stream(std::uint64_t master_seed, StreamPurpose purpose,
                        std::uint64_t index) {
  std::uint64_t h = avalanche(master_seed + 0x9E3779B97F4A7C15ULL);
  h = avalanche(h ^ (static_cast<std::uint64_t>(purpose) * 0xBF58476D1CE4E5B9ULL));
  h = avalanche(h ^ (index + 0x94D049BB133111EBULL));
  return RngStream(h, purpose);
}

}  // namespace labnoise
