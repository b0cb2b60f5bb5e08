#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "menhir/algebra.hpp"
#include "menhir/loop.hpp"

namespace menhir {

/// Euclidean velocity in units of c, of dimension 1, 2, 3, 4, 7 or 8,
/// with |v| < 1.
class VelocityVector {
 public:
  /// Throws DimensionMismatch for an unsupported dimension and OutsideDisk
  /// for |v| >= 1 or non-finite components.
  explicit VelocityVector(std::vector<double> components);
  VelocityVector(std::initializer_list<double> components) : VelocityVector(std::vector<double>(components)) {}

  static VelocityVector zero(std::size_t n);

  std::size_t size() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  std::span<const double> components() const noexcept { return c_; }
  double speed() const noexcept;

 private:
  std::vector<double> c_;
};

bool is_supported_velocity_dimension(std::size_t n) noexcept;

/// Algebra hosting n-dimensional velocities: R, C, H (n = 3, 4), O (n = 7, 8).
Algebra algebra_for_velocity_dimension(std::size_t n);

/// Moller's closed form for the relativistic composition v (+) u. For
/// |v| < 1e-14 the |v|^2 denominator is singular and the limit u is returned.
VelocityVector moller_add(const VelocityVector& v, const VelocityVector& u);

/// Collinear composition (x + y) / (1 + x y).
double poincare_add(double x, double y);

/// n = 3 and n = 7 map onto the pure-imaginary part (scalar coefficient 0);
/// every other dimension maps coefficient-for-coefficient.
DiskPoint embed(const VelocityVector& v);

/// Inverse of embed. For n = 3 or 7 throws DomainError if the scalar part
/// exceeds 1e-10 in magnitude.
VelocityVector project(const DiskPoint& a, std::size_t n);

double max_abs_diff(const VelocityVector& a, const VelocityVector& b);

std::ostream& operator<<(std::ostream& os, const VelocityVector& v);

}  // namespace menhir
