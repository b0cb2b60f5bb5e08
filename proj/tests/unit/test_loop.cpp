#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace menhir;
using namespace menhir::testing;

namespace {

double norm_identity_rel_error(const DiskPoint& a, const DiskPoint& b) {
  const auto c = boxplus(a, b);
  const auto one = AlgebraElement::scalar(a.algebra(), 1.0);
  const double lhs = 1.0 - norm_sq(c.value());
  const double rhs = (1.0 - norm_sq(a.value())) * (1.0 - norm_sq(b.value())) /
                     norm_sq(one + conjugate(a.value()) * b.value());
  return std::abs(lhs - rhs) / rhs;
}

}  // namespace

TEST_CASE("disk points reject the boundary") {
  CHECK_NOTHROW(pt(Algebra::complex, {0.6, 0.7}));
  CHECK_THROWS_AS(pt(Algebra::complex, {0.6, 0.8}), OutsideDisk);
  CHECK_THROWS_AS(pt(Algebra::real, {-1.0}), OutsideDisk);
  CHECK_THROWS_AS(pt(Algebra::real, {1.0 - 1e-16}), OutsideDisk);
  CHECK_NOTHROW(pt(Algebra::real, {1.0 - 1e-14}));
}

TEST_CASE("boxplus worked values") {
  const auto a = pt(Algebra::complex, {1.0 / 3.0, 0.0});
  const auto b = pt(Algebra::complex, {0.2, 0.4});
  const auto c = boxplus(a, b);
  CHECK(std::abs(c[0] - 7.0 / 13.0) < 1e-15);
  CHECK(std::abs(c[1] - 4.0 / 13.0) < 1e-15);

  // (0.5 + 0.5) / (1 + 0.25)
  CHECK(boxplus(pt(Algebra::real, {0.5}), pt(Algebra::real, {0.5}))[0] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("zero is a two-sided identity, exactly") {
  Gen g(31);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 100; ++n) {
      const auto a = g.point(alg);
      CHECK(boxplus(DiskPoint::zero(alg), a) == a);
      CHECK(boxplus(a, DiskPoint::zero(alg)) == a);
    }
  }
}

TEST_CASE("negatives") {
  CHECK(neg(DiskPoint::zero(Algebra::quaternion)) == DiskPoint::zero(Algebra::quaternion));
  Gen g(32);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 200; ++n) {
      const auto a = g.point(alg);
      CHECK(neg(neg(a)) == a);
      CHECK(max_abs_diff(boxplus(a, neg(a)), DiskPoint::zero(alg)) < 1e-15);
      CHECK(max_abs_diff(boxplus(neg(a), a), DiskPoint::zero(alg)) < 1e-15);
    }
  }
}

TEST_CASE("closure: 1 - |a [+] b|^2 = (1 - |a|^2)(1 - |b|^2) / |1 + conj(a) b|^2") {
  Gen g(33);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 2000; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      CHECK(norm_identity_rel_error(a, b) < 1e-12);
      CHECK(norm(boxplus(a, b).value()) < 1.0);
    }
  }
}

TEST_CASE("left and right division") {
  Gen g(34);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 300; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      CHECK(max_abs_diff(boxplus(a, left_divide(a, b)), b) < 1e-10);
      CHECK(max_abs_diff(boxplus(right_divide(a, b), a), b) < 1e-10);
    }
    const auto a = g.point(alg);
    const auto b = g.point(alg);
    CHECK(max_abs_diff(left_divide(a, a), DiskPoint::zero(alg)) < 1e-15);
    CHECK(max_abs_diff(right_divide(a, a), DiskPoint::zero(alg)) < 1e-15);
    CHECK(max_abs_diff(left_divide(DiskPoint::zero(alg), b), b) < 1e-15);
    CHECK(max_abs_diff(right_divide(DiskPoint::zero(alg), b), b) < 1e-15);
  }
}

TEST_CASE("left division agrees with the commutative closed form on R and C") {
  // For commuting arguments a [+] x = b solves to x = (b - a)(1 - b conj(a))^-1.
  Gen g(35);
  for (auto alg : {Algebra::real, Algebra::complex}) {
    for (int n = 0; n < 200; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      const auto one = AlgebraElement::scalar(alg, 1.0);
      const auto closed = (b.value() - a.value()) * inverse(one - b.value() * conjugate(a.value()));
      CHECK(max_abs_diff(left_divide(a, b).value(), closed) < 1e-12);
    }
  }
}

TEST_CASE("soft associativity laws hold in every algebra") {
  Gen g(36);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 1000; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      const auto c = g.point(alg);
      const auto aa = boxplus(a, a);
      // (i) power associativity
      CHECK(max_abs_diff(boxplus(aa, a), boxplus(a, aa)) < 1e-10);
      // (ii) left alternative
      CHECK(max_abs_diff(boxplus(aa, b), boxplus(a, boxplus(a, b))) < 1e-10);
      // (iii)
      CHECK(max_abs_diff(boxplus(a, boxplus(b, boxplus(a, c))), boxplus(boxplus(a, boxplus(b, a)), c)) < 1e-10);
    }
  }
}

TEST_CASE("right alternative law holds on R and fails elsewhere") {
  Gen g(37);
  for (auto alg : all_algebras) {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      worst = std::max(worst, max_abs_diff(boxplus(boxplus(a, b), b), boxplus(a, boxplus(b, b))));
    }
    if (alg == Algebra::real) {
      CHECK(worst < 1e-12);
    } else {
      CHECK(worst > 1e-3);
    }
  }
}

TEST_CASE("commutativity and associativity only on R") {
  Gen g(38);
  for (auto alg : all_algebras) {
    double comm = 0.0;
    double assoc = 0.0;
    for (int n = 0; n < 100; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      const auto c = g.point(alg);
      comm = std::max(comm, max_abs_diff(boxplus(a, b), boxplus(b, a)));
      assoc = std::max(assoc, max_abs_diff(boxplus(boxplus(a, b), c), boxplus(a, boxplus(b, c))));
    }
    if (alg == Algebra::real) {
      CHECK(comm < 1e-12);
      CHECK(assoc < 1e-12);
    } else {
      CHECK(comm > 1e-3);
      CHECK(assoc > 1e-3);
    }
  }
}

TEST_CASE("mixed algebras are rejected") {
  const auto a = pt(Algebra::complex, {0.1, 0.2});
  const auto b = pt(Algebra::quaternion, {0.1, 0.2, 0.0, 0.0});
  CHECK_THROWS_AS(boxplus(a, b), DimensionMismatch);
  CHECK_THROWS_AS(left_divide(a, b), DimensionMismatch);
  CHECK_THROWS_AS(right_divide(a, b), DimensionMismatch);
}
