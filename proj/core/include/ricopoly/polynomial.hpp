#pragma once

// Dense polynomials in the monomial basis, templated over the scalar
// backend.  Degree -1 encodes the zero polynomial.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ricopoly/errors.hpp"
#include "ricopoly/rational.hpp"

namespace ricopoly {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial

  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  static Polynomial one() { return constant(T(1)); }

  // The monomial z.
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  // z - r
  static Polynomial linear(const T& r) { return Polynomial(std::vector<T>{T(0) - r, T(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  // Coefficient of z^i; zero outside the stored range.
  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<size_t>(i)];
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  T value_at(const T& z) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  // Horner evaluation at a point of a possibly wider type (e.g. a real
  // polynomial at a complex point).
  template <class U>
  U value_at_point(const U& z) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<T> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  // Coefficient reversal z^n p(1/z) at the stored degree.
  Polynomial reversed() const {
    std::vector<T> r(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<T> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = T(0) - coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> r(std::max(p.coeffs_.size(), q.coeffs_.size()), T(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) r[i] = r[i] + p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) r[i] = r[i] + q.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return zero();
    std::vector<T> r(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
      for (size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] = r[i + j] + p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> r(p.coeffs_.size());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) r[i] = s * p.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& p, const T& s) { return s * p; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class T>
double max_abs_coeff(const Polynomial<T>& p) {
  double m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::fabs(scalar_traits<T>::to_double(c)));
  return m;
}

// Coefficient-wise comparison: exact for rationals, |diff| <= eps*(1+max|coeff|)
// for floats.
template <class T>
bool poly_close(const Polynomial<T>& p, const Polynomial<T>& q, double eps) {
  if constexpr (scalar_traits<T>::exact) {
    (void)eps;
    return p == q;
  } else {
    const int d = std::max(p.degree(), q.degree());
    const double scale = 1.0 + std::max(max_abs_coeff(p), max_abs_coeff(q));
    for (int i = 0; i <= d; ++i) {
      if (std::fabs(scalar_traits<T>::to_double(p.coeff(i) - q.coeff(i))) > eps * scale) return false;
    }
    return true;
  }
}

template <class T>
Polynomial<double> to_double_poly(const Polynomial<T>& p) {
  std::vector<double> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = scalar_traits<T>::to_double(p.coeffs()[i]);
  return Polynomial<double>(std::move(c));
}

// Serialization used by the family interchange format: coefficients as
// strings, ascending degree.  The zero polynomial is the empty array.
template <class T>
std::vector<std::string> coeff_strings(const Polynomial<T>& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(scalar_traits<T>::str(c));
  return out;
}

// 2x2 matrix with polynomial entries; used both for the one-step transfer
// matrices and for the linear-fractional transformation numerators.
template <class T>
struct Mat2 {
  Polynomial<T> a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() {
    return Mat2{Polynomial<T>::one(), Polynomial<T>::zero(), Polynomial<T>::zero(), Polynomial<T>::one()};
  }

  Polynomial<T> det() const { return a * d - b * c; }

  // Matrix of cofactors: [[d, -c], [-b, a]].
  Mat2 cofactor() const { return Mat2{d, -c, -b, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend Mat2 operator*(const Polynomial<T>& s, const Mat2& m) {
    return Mat2{s * m.a, s * m.b, s * m.c, s * m.d};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Two matrices describe the same linear-fractional map iff their entries are
// proportional by a nonzero polynomial factor, i.e. all 2x2 minors of the
// stacked 2x4 coefficient matrix vanish.
template <class T>
bool proportional(const Mat2<T>& x, const Mat2<T>& y) {
  const Polynomial<T>* u[4] = {&x.a, &x.b, &x.c, &x.d};
  const Polynomial<T>* v[4] = {&y.a, &y.b, &y.c, &y.d};
  bool x_zero = true, y_zero = true;
  for (int i = 0; i < 4; ++i) {
    if (!u[i]->is_zero()) x_zero = false;
    if (!v[i]->is_zero()) y_zero = false;
  }
  if (x_zero || y_zero) return x_zero && y_zero;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
  return true;
}

}  // namespace ricopoly
