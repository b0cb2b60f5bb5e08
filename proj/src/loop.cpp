#include "menhir/loop.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <ostream>

#include "menhir/errors.hpp"

namespace menhir {

namespace {

using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;
using SmallVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1>;

void require_same(const DiskPoint& a, const DiskPoint& b) {
  if (a.algebra() != b.algebra()) {
    throw DimensionMismatch("disk points of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " cannot be combined");
  }
}

// Solves x - op(x) = rhs where op is real-linear, by assembling the dim x dim
// matrix column by column from the basis images.
AlgebraElement solve_linear(Algebra alg, const std::function<AlgebraElement(const AlgebraElement&)>& op,
                            const AlgebraElement& rhs) {
  const auto n = static_cast<Eigen::Index>(dimension(alg));
  SmallMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto e = AlgebraElement::unit(alg, static_cast<std::size_t>(j));
    const auto image = e - op(e);
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = image[static_cast<std::size_t>(i)];
  }
  SmallVector b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = rhs[static_cast<std::size_t>(i)];

  const Eigen::FullPivLU<SmallMatrix> lu(m);
  if (!lu.isInvertible()) throw DivisionUndefined("loop division: linear system is rank deficient");
  const SmallVector x = lu.solve(b);

  AlgebraElement out(alg);
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = x(i);
  for (double c : out.coeffs()) {
    if (!std::isfinite(c)) throw DivisionUndefined("loop division: non-finite solution");
  }
  return out;
}

}  // namespace

DiskPoint::DiskPoint(const AlgebraElement& value) : value_(value) {
  if (!(norm(value) < disk_radius_limit)) {
    throw OutsideDisk("point with norm " + std::to_string(norm(value)) + " is not inside the open unit ball");
  }
}

DiskPoint DiskPoint::from_trusted(const AlgebraElement& value) noexcept { return DiskPoint(trusted_tag{}, value); }

DiskPoint boxplus(const DiskPoint& a, const DiskPoint& b) {
  require_same(a, b);
  const auto& x = a.value();
  const auto& y = b.value();
  const auto one = AlgebraElement::scalar(x.algebra(), 1.0);
  const auto denom = one + conjugate(x) * y;
  return DiskPoint::from_trusted((x + y) * inverse(denom));
}

DiskPoint neg(const DiskPoint& a) noexcept { return DiskPoint::from_trusted(-a.value()); }

// a [+] x = b  <=>  a + x = b (1 + conj(a) x)  <=>  x - b (conj(a) x) = b - a.
// The middle step uses (y z^-1) z = y, which holds in every alternative algebra.
DiskPoint left_divide(const DiskPoint& a, const DiskPoint& b) {
  require_same(a, b);
  const auto a_bar = conjugate(a.value());
  const auto& bv = b.value();
  const auto x = solve_linear(
      a.algebra(), [&](const AlgebraElement& e) { return bv * (a_bar * e); }, bv - a.value());
  return DiskPoint::from_trusted(x);
}

// x [+] a = b  <=>  x - b (conj(x) a) = b - a.
DiskPoint right_divide(const DiskPoint& a, const DiskPoint& b) {
  require_same(a, b);
  const auto& av = a.value();
  const auto& bv = b.value();
  const auto x = solve_linear(
      a.algebra(), [&](const AlgebraElement& e) { return bv * (conjugate(e) * av); }, bv - av);
  return DiskPoint::from_trusted(x);
}

double max_abs_diff(const DiskPoint& a, const DiskPoint& b) { return max_abs_diff(a.value(), b.value()); }

bool approx_equal(const DiskPoint& a, const DiskPoint& b, double eps) {
  return approx_equal(a.value(), b.value(), eps);
}

std::ostream& operator<<(std::ostream& os, const DiskPoint& a) { return os << a.value(); }

}  // namespace menhir
