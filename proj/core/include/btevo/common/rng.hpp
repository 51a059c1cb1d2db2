#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace btevo {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive a stream seed from a base seed and a list of coordinates
/// (generation, slot, purpose tag, ...). Order matters.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t h = mix64(base);
  for (auto c : coords) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_rng(std::uint64_t base, std::initializer_list<std::uint64_t> coords) {
  return Rng(derive_seed(base, coords));
}

// Stream purpose tags.
namespace stream {
inline constexpr std::uint64_t kInitialPopulation = 1;
inline constexpr std::uint64_t kOffspring = 2;
inline constexpr std::uint64_t kInitSet = 3;
inline constexpr std::uint64_t kValidation = 4;
}  // namespace stream

}  // namespace btevo
