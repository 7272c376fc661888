#ifndef QOT_RNG_HPP
#define QOT_RNG_HPP

#include <cstdint>
#include <random>
#include <span>

namespace qot {

// SplitMix64 finalizer; used to turn (master seed, index) pairs into
// well-separated child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Child seed for run `index` of a batch driven by `master`. Independent runs
// (Monte Carlo trials, sweep points) each get their own stream.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x6a09e667f3bcc909ull));
}

/// Deterministic uniform stream. The engine is std::mt19937_64, so the raw
/// sequence is pinned by the standard; next_unit() maps it to doubles with a
/// fixed 53-bit rule instead of std::uniform_real_distribution (whose output
/// is implementation-defined).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream derived(std::uint64_t master, std::uint64_t index) {
    return RandomStream(derive_seed(master, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform index in [0, bound). bound must be >= 1.
  std::size_t next_below(std::size_t bound) {
    auto idx = static_cast<std::size_t>(next_unit() * static_cast<double>(bound));
    return idx < bound ? idx : bound - 1;
  }

 private:
  std::mt19937_64 engine_;
};

/// Cumulative-inversion draw over `probabilities`, in index order. Entries
/// below 1e-14 are treated as impossible and never selected.
std::size_t sample_index(std::span<const double> probabilities, RandomStream& stream);

}  // namespace qot

#endif
