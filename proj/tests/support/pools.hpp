#pragma once

// Seeded sample pools shared by the unit and acceptance suites.

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "polyharm/polyharm.hpp"

namespace polyharm::pools {

inline constexpr std::size_t kPoolTruncation = 10;

/// n members of the class, p cycling through 1, 2, 3, all on the class boundary (fill = 1).
inline std::vector<PolyharmonicMap> class_members(ClassKind kind, std::size_t n, std::uint64_t seed,
                                                  std::size_t fixed_p = 0) {
  std::vector<PolyharmonicMap> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = fixed_p ? fixed_p : 1 + i % 3;
    out.push_back(sample_member(kind, p, kPoolTruncation, 1.0, derive_seed(seed, i)));
  }
  return out;
}

inline std::vector<HerglotzMeasure> measures(std::size_t n, std::uint64_t seed) {
  std::vector<HerglotzMeasure> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    out.push_back(sample_measure(rng, 8));
  }
  return out;
}

/// Class-F maps from `measures(n, seed)` with theta drawn from a second stream.
inline std::vector<ClassFMap> class_f_maps(std::size_t n, std::uint64_t seed, std::size_t order) {
  const auto mus = measures(n, seed);
  std::vector<ClassFMap> out;
  out.reserve(n);
  std::mt19937_64 rng(derive_seed(seed, 1u << 30));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const auto& mu : mus) out.push_back(build_class_f(mu, angle(rng), order));
  return out;
}

}  // namespace polyharm::pools
