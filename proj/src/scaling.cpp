#include "menhir/scaling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "menhir/errors.hpp"

namespace menhir {

namespace {

double checked_artanh(double r) {
  if (r > lightlike_radius_limit) {
    throw NearLightlike("norm " + std::to_string(r) + " is too close to 1 for a rapidity");
  }
  return std::atanh(r);
}

// tanh(s) a/|a|, refusing results that round onto the unit sphere.
DiskPoint along_ray(const AlgebraElement& a, double r, double s) {
  const double t = std::tanh(s);
  if (!(t < disk_radius_limit)) throw NearLightlike("scaled point reaches the unit sphere in double precision");
  return DiskPoint::from_trusted(scale(a, t / r));
}

// tanh(t artanh|a|) a/|a| for real t > 0.
DiskPoint scale_rapidity(double t, const DiskPoint& a) {
  const double r = norm(a.value());
  if (r == 0.0) return a;
  return along_ray(a.value(), r, t * checked_artanh(r));
}

void require_positive(int k) {
  if (k < 1) throw std::invalid_argument("scaling factor k must be a positive integer, got " + std::to_string(k));
}

}  // namespace

DiskPoint box_double(const DiskPoint& a) noexcept {
  return DiskPoint::from_trusted(scale(a.value(), 2.0 / (1.0 + norm_sq(a.value()))));
}

DiskPoint box_half(const DiskPoint& a) noexcept {
  const double n2 = norm_sq(a.value());
  return DiskPoint::from_trusted(scale(a.value(), 1.0 / (1.0 + std::sqrt(1.0 - n2))));
}

DiskPoint box_scale(int k, const DiskPoint& a) {
  require_positive(k);
  if (k == 1) return a;
  if (k == 2) return box_double(a);
  return scale_rapidity(static_cast<double>(k), a);
}

DiskPoint box_unscale(int k, const DiskPoint& a) {
  require_positive(k);
  if (k == 1) return a;
  if (k == 2) return box_half(a);
  return scale_rapidity(1.0 / static_cast<double>(k), a);
}

Rapidity to_rapidity(const DiskPoint& a) {
  const double r = norm(a.value());
  if (r == 0.0) return {AlgebraElement(a.algebra())};
  return {scale(a.value(), checked_artanh(r) / r)};
}

DiskPoint from_rapidity(const Rapidity& rho) {
  const double s = norm(rho.vec);
  if (s == 0.0) return DiskPoint::zero(rho.vec.algebra());
  return along_ray(rho.vec, s, s);
}

}  // namespace menhir
