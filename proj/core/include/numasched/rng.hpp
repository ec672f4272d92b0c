#ifndef NUMASCHED_RNG_HPP
#define NUMASCHED_RNG_HPP

#include <cstdint>
#include <vector>

namespace numasched {

// SplitMix64 (Steele, Lea, Flood; constants from the reference
// implementation). Chosen over std::mt19937_64 because the output stream
// is fixed by the published algorithm, so seeds reproduce bit-identically
// on any platform. Never seeded from OS entropy.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via Lemire's multiply-shift; n == 0 is invalid.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform in [0, max] inclusive.
  std::uint64_t uniform_inclusive(std::uint64_t max) {
    if (max == 0xFFFFFFFFFFFFFFFFULL) return next();
    return bounded(max + 1);
  }

  // Fisher-Yates
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace numasched

#endif  // NUMASCHED_RNG_HPP
