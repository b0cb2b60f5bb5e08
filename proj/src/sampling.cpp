#include "menhir/sampling.hpp"

#include <cmath>

namespace menhir {

// splitmix64 finalizer over seed and counter.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DiskPoint random_disk_point(Algebra alg, std::mt19937_64& rng, double max_radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  AlgebraElement dir(alg);
  double n = 0.0;
  while (n < 1e-12) {
    for (auto& c : dir.coeffs()) c = gauss(rng);
    n = norm(dir);
  }
  const double radius = max_radius * uniform(rng);
  return DiskPoint(scale(dir, radius / n));
}

}  // namespace menhir
