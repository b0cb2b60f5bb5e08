#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace menhir {

/// The four normed division algebras; the enumerator value is the real dimension.
enum class Algebra : std::uint8_t {
  real = 1,
  complex = 2,
  quaternion = 4,
  octonion = 8,
};

constexpr std::size_t dimension(Algebra alg) noexcept { return static_cast<std::size_t>(alg); }

/// Algebra with the given real dimension, if it is one of 1, 2, 4, 8.
std::optional<Algebra> algebra_from_dimension(std::size_t dim) noexcept;

/// Single-letter code used on the command line: r, c, h, o.
char algebra_code(Algebra alg) noexcept;
std::optional<Algebra> algebra_from_code(std::string_view code) noexcept;
std::string_view algebra_name(Algebra alg) noexcept;

/**
 * An element of R, C, H or O stored as real coefficients, scalar part first.
 *
 * Products follow the Cayley-Dickson doubling: with a = (p, q), b = (r, s)
 * split into half-dimension halves,
 *
 *     (p, q)(r, s) = (p r - conj(s) q,  s p + q conj(r)),
 *
 * which gives i j = k for the quaternion basis (1, i, j, k) and
 * (p, q)* = (p*, -q) for conjugation.
 */
class AlgebraElement {
 public:
  static constexpr std::size_t max_dimension = 8;

  explicit AlgebraElement(Algebra alg = Algebra::real) noexcept : alg_(alg) {}

  /// Throws DimensionMismatch when coeffs.size() != dimension(alg) and
  /// DomainError when a coefficient is not finite.
  AlgebraElement(Algebra alg, std::span<const double> coeffs);
  AlgebraElement(Algebra alg, std::initializer_list<double> coeffs);

  static AlgebraElement scalar(Algebra alg, double value) noexcept;
  /// Basis element e_index (e_0 = 1).
  static AlgebraElement unit(Algebra alg, std::size_t index);

  Algebra algebra() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return dimension(alg_); }

  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }

  std::span<const double> coeffs() const noexcept { return {c_.data(), dim()}; }
  std::span<double> coeffs() noexcept { return {c_.data(), dim()}; }

  double real_part() const noexcept { return c_[0]; }
  bool is_zero() const noexcept;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(double s) noexcept;

  /// Exact coefficientwise equality. Use approx_equal for computed values.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) noexcept;

 private:
  Algebra alg_;
  std::array<double, max_dimension> c_{};
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, double lambda) noexcept;
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement conjugate(const AlgebraElement& a) noexcept;
double norm_sq(const AlgebraElement& a) noexcept;
double norm(const AlgebraElement& a) noexcept;
/// conj(a) / |a|^2; throws DivisionByZero for a == 0.
AlgebraElement inverse(const AlgebraElement& a);

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return sub(a, b); }
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }
inline AlgebraElement operator*(double s, const AlgebraElement& a) noexcept { return scale(a, s); }
inline AlgebraElement operator*(const AlgebraElement& a, double s) noexcept { return scale(a, s); }
inline AlgebraElement operator-(const AlgebraElement& a) noexcept { return scale(a, -1.0); }

/// Largest absolute coefficient difference; throws DimensionMismatch.
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

inline constexpr double default_epsilon = 1e-10;

/// Absolute coefficientwise comparison.
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double eps = default_epsilon);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

}  // namespace menhir
