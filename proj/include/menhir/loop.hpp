#pragma once

#include "menhir/algebra.hpp"

namespace menhir {

/// Points with |x| at or beyond this radius are rejected by DiskPoint.
inline constexpr double disk_radius_limit = 1.0 - 1e-15;

/**
 * An element of the open unit ball of R, C, H or O: the carrier set of the
 * menhir loop and of all its deformations.
 *
 * Construction checks |x| < 1 - 1e-15. Loop operations build their results
 * with from_trusted(): the closure identity
 *
 *     1 - |a [+] b|^2 = (1 - |a|^2)(1 - |b|^2) / |1 + conj(a) b|^2
 *
 * guarantees the bound mathematically and a re-check would only reject
 * rounding noise at the boundary.
 */
class DiskPoint {
 public:
  explicit DiskPoint(Algebra alg = Algebra::real) noexcept : value_(alg) {}
  /// Throws OutsideDisk unless |value| < disk_radius_limit.
  explicit DiskPoint(const AlgebraElement& value);
  DiskPoint(Algebra alg, std::initializer_list<double> coeffs) : DiskPoint(AlgebraElement(alg, coeffs)) {}

  static DiskPoint zero(Algebra alg) noexcept { return DiskPoint(alg); }
  static DiskPoint from_trusted(const AlgebraElement& value) noexcept;

  const AlgebraElement& value() const noexcept { return value_; }
  Algebra algebra() const noexcept { return value_.algebra(); }
  std::size_t dim() const noexcept { return value_.dim(); }
  double operator[](std::size_t i) const noexcept { return value_[i]; }

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) noexcept { return a.value_ == b.value_; }

 private:
  struct trusted_tag {};
  DiskPoint(trusted_tag, const AlgebraElement& value) noexcept : value_(value) {}

  AlgebraElement value_;
};

/// Menhir product (a + b)(1 + conj(a) b)^-1, the inverse applied on the right.
DiskPoint boxplus(const DiskPoint& a, const DiskPoint& b);

DiskPoint neg(const DiskPoint& a) noexcept;

/// The unique x with boxplus(a, x) == b.
DiskPoint left_divide(const DiskPoint& a, const DiskPoint& b);

/// The unique x with boxplus(x, a) == b.
DiskPoint right_divide(const DiskPoint& a, const DiskPoint& b);

double max_abs_diff(const DiskPoint& a, const DiskPoint& b);
bool approx_equal(const DiskPoint& a, const DiskPoint& b, double eps = default_epsilon);

std::ostream& operator<<(std::ostream& os, const DiskPoint& a);

}  // namespace menhir
