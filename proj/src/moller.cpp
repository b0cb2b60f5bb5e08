#include "menhir/moller.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "menhir/errors.hpp"

namespace menhir {

namespace {

constexpr double zero_velocity_threshold = 1e-14;
constexpr double imaginary_projection_tolerance = 1e-10;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void require_supported(std::size_t n) {
  if (!is_supported_velocity_dimension(n)) {
    throw DimensionMismatch("unsupported velocity dimension " + std::to_string(n) +
                            " (expected 1, 2, 3, 4, 7 or 8)");
  }
}

// Index of the first velocity component inside the host algebra's coefficients.
std::size_t embedding_offset(std::size_t n) { return (n == 3 || n == 7) ? 1 : 0; }

}  // namespace

bool is_supported_velocity_dimension(std::size_t n) noexcept {
  return n == 1 || n == 2 || n == 3 || n == 4 || n == 7 || n == 8;
}

Algebra algebra_for_velocity_dimension(std::size_t n) {
  require_supported(n);
  if (n <= 2) return n == 1 ? Algebra::real : Algebra::complex;
  return n <= 4 ? Algebra::quaternion : Algebra::octonion;
}

VelocityVector::VelocityVector(std::vector<double> components) : c_(std::move(components)) {
  require_supported(c_.size());
  if (!std::all_of(c_.begin(), c_.end(), [](double x) { return std::isfinite(x); })) {
    throw OutsideDisk("velocity components must be finite");
  }
  if (!(speed() < 1.0)) {
    throw OutsideDisk("superluminal velocity: |v| = " + std::to_string(speed()) + " is not below 1");
  }
}

VelocityVector VelocityVector::zero(std::size_t n) { return VelocityVector(std::vector<double>(n, 0.0)); }

double VelocityVector::speed() const noexcept { return std::sqrt(dot(c_, c_)); }

VelocityVector moller_add(const VelocityVector& v, const VelocityVector& u) {
  if (v.size() != u.size()) {
    throw DimensionMismatch("cannot compose velocities of dimension " + std::to_string(v.size()) + " and " +
                            std::to_string(u.size()));
  }
  const auto vc = v.components();
  const auto uc = u.components();
  const double vv = dot(vc, vc);
  if (std::sqrt(vv) < zero_velocity_threshold) return u;

  const double root = std::sqrt(1.0 - vv);
  const double vu = dot(vc, uc);
  const double v_coeff = (1.0 - root) * vu / vv + 1.0;
  const double denom = 1.0 + vu;

  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (root * uc[i] + v_coeff * vc[i]) / denom;
  return VelocityVector(std::move(out));
}

double poincare_add(double x, double y) {
  if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0)) {
    throw OutsideDisk("poincare_add needs |x| < 1 and |y| < 1");
  }
  return (x + y) / (1.0 + x * y);
}

DiskPoint embed(const VelocityVector& v) {
  const auto alg = algebra_for_velocity_dimension(v.size());
  AlgebraElement e(alg);
  const auto off = embedding_offset(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[off + i] = v[i];
  return DiskPoint(e);
}

VelocityVector project(const DiskPoint& a, std::size_t n) {
  const auto alg = algebra_for_velocity_dimension(n);
  if (a.algebra() != alg) {
    throw DimensionMismatch("cannot project a " + std::string(algebra_name(a.algebra())) + " onto " +
                            std::to_string(n) + "-dimensional velocities");
  }
  const auto off = embedding_offset(n);
  if (off == 1 && std::abs(a[0]) > imaginary_projection_tolerance) {
    throw DomainError("scalar part " + std::to_string(a[0]) + " is not negligible on a pure-imaginary projection");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[off + i];
  return VelocityVector(std::move(out));
}

double max_abs_diff(const VelocityVector& a, const VelocityVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("velocity dimensions differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::ostream& operator<<(std::ostream& os, const VelocityVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace menhir
