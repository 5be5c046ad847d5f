#ifndef BOXLAB_CORE_RANDOM_HPP
#define BOXLAB_CORE_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace boxlab {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counted seed splitting: the i-th child of `seed` is splitmix64(seed + i*phi)
// mixed once more, so every sub-construction can be replayed on its own from
// (parent seed, index).
inline constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed + index * 0x9E3779B97F4A7C15ULL) ^ 0xD1B54A32D192ED03ULL);
}

class seed_sequence {
public:
  explicit seed_sequence(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t next() noexcept { return child_seed(seed_, counter_++); }
  std::uint64_t issued() const noexcept { return counter_; }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Platform-independent sampling on top of mt19937_64 (the standard
// distributions are implementation-defined, which would break byte-identical
// certificates across toolchains).
class rng {
public:
  explicit rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0, bound), bound > 0 (Lemire's rejection method).
  std::uint64_t below(std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

private:
  std::mt19937_64 engine_;
};

} // namespace boxlab

#endif // BOXLAB_CORE_RANDOM_HPP
