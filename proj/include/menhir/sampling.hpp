#pragma once

#include <cstdint>
#include <random>

#include "menhir/loop.hpp"

namespace menhir {

inline constexpr double default_sample_radius = 0.9;

/// Per-sample engine seed derived from a run seed and a sample counter, so
/// results do not depend on the order in which samples are drawn.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) noexcept;

/// Uniform direction times a radius drawn uniformly in [0, max_radius).
DiskPoint random_disk_point(Algebra alg, std::mt19937_64& rng, double max_radius = default_sample_radius);

}  // namespace menhir
