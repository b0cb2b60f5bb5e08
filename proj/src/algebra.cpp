#include "menhir/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "menhir/errors.hpp"

namespace menhir {

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) {
    throw DimensionMismatch("algebra elements of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " cannot be combined");
  }
}

// Conjugate of a block of length n in place (scalar part kept).
void conj_block(double* x, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) x[i] = -x[i];
}

// out = a * b on blocks of length n, recursively halving.
void cd_multiply(const double* a, const double* b, double* out, std::size_t n) {
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t h = n / 2;
  const double* p = a;
  const double* q = a + h;
  const double* r = b;
  const double* s = b + h;

  std::array<double, 4> s_conj{};
  std::array<double, 4> r_conj{};
  std::copy_n(s, h, s_conj.data());
  std::copy_n(r, h, r_conj.data());
  conj_block(s_conj.data(), h);
  conj_block(r_conj.data(), h);

  std::array<double, 4> t1{};
  std::array<double, 4> t2{};
  // first half: p r - conj(s) q
  cd_multiply(p, r, t1.data(), h);
  cd_multiply(s_conj.data(), q, t2.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  // second half: s p + q conj(r)
  cd_multiply(s, p, t1.data(), h);
  cd_multiply(q, r_conj.data(), t2.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

// Basis products e_i e_j = sign * e_index, tabulated from cd_multiply.
struct ProductTable {
  std::array<std::array<std::uint8_t, 8>, 8> index{};
  std::array<std::array<double, 8>, 8> sign{};
};

ProductTable make_table(std::size_t n) {
  ProductTable t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::array<double, 8> ei{};
      std::array<double, 8> ej{};
      std::array<double, 8> prod{};
      ei[i] = 1.0;
      ej[j] = 1.0;
      cd_multiply(ei.data(), ej.data(), prod.data(), n);
      for (std::size_t k = 0; k < n; ++k) {
        if (prod[k] != 0.0) {
          t.index[i][j] = static_cast<std::uint8_t>(k);
          t.sign[i][j] = prod[k];
        }
      }
    }
  }
  return t;
}

const ProductTable& table_for(std::size_t n) {
  static const std::array<ProductTable, 4> tables{make_table(1), make_table(2), make_table(4), make_table(8)};
  switch (n) {
    case 1: return tables[0];
    case 2: return tables[1];
    case 4: return tables[2];
    default: return tables[3];
  }
}

}  // namespace

std::optional<Algebra> algebra_from_dimension(std::size_t dim) noexcept {
  switch (dim) {
    case 1: return Algebra::real;
    case 2: return Algebra::complex;
    case 4: return Algebra::quaternion;
    case 8: return Algebra::octonion;
    default: return std::nullopt;
  }
}

char algebra_code(Algebra alg) noexcept {
  switch (alg) {
    case Algebra::real: return 'r';
    case Algebra::complex: return 'c';
    case Algebra::quaternion: return 'h';
    case Algebra::octonion: return 'o';
  }
  return '?';
}

std::optional<Algebra> algebra_from_code(std::string_view code) noexcept {
  if (code == "r") return Algebra::real;
  if (code == "c") return Algebra::complex;
  if (code == "h") return Algebra::quaternion;
  if (code == "o") return Algebra::octonion;
  return std::nullopt;
}

std::string_view algebra_name(Algebra alg) noexcept {
  switch (alg) {
    case Algebra::real: return "real";
    case Algebra::complex: return "complex";
    case Algebra::quaternion: return "quaternion";
    case Algebra::octonion: return "octonion";
  }
  return "unknown";
}

AlgebraElement::AlgebraElement(Algebra alg, std::span<const double> coeffs) : alg_(alg) {
  if (coeffs.size() != dim()) {
    throw DimensionMismatch(std::to_string(coeffs.size()) + " coefficients given for an algebra of dimension " +
                            std::to_string(dim()));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i])) throw DomainError("algebra coefficients must be finite");
    c_[i] = coeffs[i];
  }
}

AlgebraElement::AlgebraElement(Algebra alg, std::initializer_list<double> coeffs)
    : AlgebraElement(alg, std::span<const double>(coeffs.begin(), coeffs.size())) {}

AlgebraElement AlgebraElement::scalar(Algebra alg, double value) noexcept {
  AlgebraElement e(alg);
  e.c_[0] = value;
  return e;
}

AlgebraElement AlgebraElement::unit(Algebra alg, std::size_t index) {
  if (index >= dimension(alg)) throw DimensionMismatch("basis index out of range");
  AlgebraElement e(alg);
  e.c_[index] = 1.0;
  return e;
}

bool AlgebraElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(dim()),
                     [](double x) { return x == 0.0; });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same(*this, rhs);
  for (std::size_t i = 0; i < dim(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same(*this, rhs);
  for (std::size_t i = 0; i < dim(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < dim(); ++i) c_[i] *= s;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) noexcept {
  if (a.alg_ != b.alg_) return false;
  return std::equal(a.c_.begin(), a.c_.begin() + static_cast<std::ptrdiff_t>(a.dim()), b.c_.begin());
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out += b;
  return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out -= b;
  return out;
}

AlgebraElement scale(const AlgebraElement& a, double lambda) noexcept {
  AlgebraElement out = a;
  out *= lambda;
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  const std::size_t n = a.dim();
  const auto& t = table_for(n);
  AlgebraElement out(a.algebra());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[t.index[i][j]] += t.sign[i][j] * a[i] * b[j];
  }
  return out;
}

AlgebraElement conjugate(const AlgebraElement& a) noexcept {
  AlgebraElement out = a;
  conj_block(out.coeffs().data(), out.dim());
  return out;
}

double norm_sq(const AlgebraElement& a) noexcept {
  double s = 0.0;
  for (double x : a.coeffs()) s += x * x;
  return s;
}

double norm(const AlgebraElement& a) noexcept { return std::sqrt(norm_sq(a)); }

AlgebraElement inverse(const AlgebraElement& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw DivisionByZero("zero has no multiplicative inverse");
  return scale(conjugate(a), 1.0 / n2);
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double eps) {
  return a.algebra() == b.algebra() && max_abs_diff(a, b) <= eps;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) {
  os << '(';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  return os << ')';
}

}  // namespace menhir
