#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace menhir;
using namespace menhir::testing;

TEST_CASE("mu: worked values, zero and negatives") {
  CHECK(std::abs(mu(pt(Algebra::real, {0.6}))[0] - 1.0 / 3.0) < 1e-15);
  CHECK(mu(DiskPoint::zero(Algebra::quaternion)) == DiskPoint::zero(Algebra::quaternion));
  Gen g(51);
  for (auto alg : all_algebras) {
    const auto a = g.point(alg);
    CHECK(max_abs_diff(mu(neg(a)), neg(mu(a))) < 1e-16);
    CHECK(max_abs_diff(mu_inv(mu(a)), a) < 1e-14);
  }
}

TEST_CASE("relativistic composition: worked values") {
  const auto c = relativistic_add(pt(Algebra::complex, {0.6, 0.0}), pt(Algebra::complex, {1.0 / 3.0, 2.0 / 3.0}));
  CHECK(std::abs(c[0] - 7.0 / 9.0) < 1e-15);
  CHECK(std::abs(c[1] - 4.0 / 9.0) < 1e-15);

  const auto r = relativistic_add(pt(Algebra::real, {0.5}), pt(Algebra::real, {0.5}));
  CHECK(std::abs(r[0] - tanh_add(0.5, 0.5)) < 1e-15);
  CHECK(std::abs(r[0] - 0.8) < 1e-15);

  Gen g(52);
  for (auto alg : all_algebras) {
    const auto a = g.point(alg);
    CHECK(max_abs_diff(relativistic_add(a, DiskPoint::zero(alg)), a) < 1e-15);
    CHECK(max_abs_diff(relativistic_add(DiskPoint::zero(alg), a), a) < 1e-15);
  }
}

TEST_CASE("mu is an isomorphism onto the menhir loop") {
  Gen g(53);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 1000; ++n) {
      const auto a = g.point(alg, 0.95);
      const auto b = g.point(alg, 0.95);
      CHECK(max_abs_diff(mu(relativistic_add(a, b)), boxplus(mu(a), mu(b))) < 1e-12);
    }
  }
}

TEST_CASE("k_add reproduces the menhir and relativistic products") {
  Gen g(54);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 300; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      CHECK(k_add(1, a, b) == boxplus(a, b));
      CHECK(max_abs_diff(k_add(2, a, b), relativistic_add(a, b)) < 1e-13);
    }
  }
}

TEST_CASE("k_add on the real line is the Poincare formula for every k") {
  // (0.3 + 0.4) / (1 + 0.12) = 0.625
  const auto a = pt(Algebra::real, {0.3});
  const auto b = pt(Algebra::real, {0.4});
  for (int k : {1, 2, 3, 5, 17, 100}) CHECK(std::abs(k_add(k, a, b)[0] - 0.625) < 1e-14);
}

TEST_CASE("collinear inputs: k-independent Poincare composition") {
  Gen g(55);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 200; ++n) {
      const auto u = g.point(alg, 0.99);
      const auto dir = scale(u.value(), 1.0 / norm(u.value()));
      const double x = g.uniform(-0.9, 0.9);
      const double y = g.uniform(-0.9, 0.9);
      const DiskPoint a(scale(dir, x));
      const DiskPoint b(scale(dir, y));
      const auto expect = scale(dir, tanh_add(x, y));
      for (int k : {1, 2, 3, 7, 32}) CHECK(max_abs_diff(k_add(k, a, b).value(), expect) < 1e-12);
    }
  }
}

TEST_CASE("every deformation has identity 0 and negatives") {
  Gen g(56);
  for (auto alg : all_algebras) {
    for (int k : {1, 2, 3, 6, 10}) {
      const auto a = g.point(alg, std::tanh(4.0 / k));
      CHECK(max_abs_diff(k_add(k, a, neg(a)), DiskPoint::zero(alg)) < 1e-12);
      CHECK(max_abs_diff(k_add(k, a, DiskPoint::zero(alg)), a) < 1e-12);
    }
  }
}

TEST_CASE("relativistic composition is neither commutative nor associative beyond R") {
  Gen g(57);
  for (auto alg : {Algebra::complex, Algebra::quaternion, Algebra::octonion}) {
    double comm = 0.0;
    double assoc = 0.0;
    for (int n = 0; n < 100; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      const auto c = g.point(alg);
      comm = std::max(comm, max_abs_diff(relativistic_add(a, b), relativistic_add(b, a)));
      assoc = std::max(assoc, max_abs_diff(relativistic_add(relativistic_add(a, b), c),
                                           relativistic_add(a, relativistic_add(b, c))));
    }
    CHECK(comm > 1e-3);
    CHECK(assoc > 1e-3);
  }
}

TEST_CASE("limit product") {
  Gen g(58);
  for (auto alg : all_algebras) {
    for (int n = 0; n < 100; ++n) {
      const auto a = g.point(alg);
      const auto b = g.point(alg);
      CHECK(max_abs_diff(limit_add(a, DiskPoint::zero(alg)), a) < 1e-14);
      CHECK(max_abs_diff(limit_add(a, b), limit_add(b, a)) < 1e-15);
    }
  }
  for (int n = 0; n < 200; ++n) {
    const auto a = g.point(Algebra::complex);
    const auto b = g.point(Algebra::complex);
    CHECK(max_abs_diff(k_add(1024, a, b), limit_add(a, b)) < 1e-5);
  }
}

TEST_CASE("k_add converges to the limit product at rate 1/k^2") {
  const auto a = pt(Algebra::complex, {0.9, 0.0});
  const auto b = pt(Algebra::complex, {0.0, 0.9});
  const auto lim = limit_add(a, b);
  double previous = max_abs_diff(k_add(64, a, b), lim);
  for (int k : {128, 256, 512, 1024}) {
    const double err = max_abs_diff(k_add(k, a, b), lim);
    // Doubling k should divide the error by about 4.
    CHECK(err < previous / 3.5);
    CHECK(err > previous / 4.5);
    previous = err;
  }
}
