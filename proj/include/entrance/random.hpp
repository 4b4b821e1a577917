#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace entrance {

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-trace stream seed: splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
/// Part of the reproducibility contract; do not change.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// Portable generator: the std:: distributions are implementation-defined,
// so uniform, normal and shuffle are defined here on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound); rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal via Box-Muller (cosine branch only; two draws each).
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace entrance
