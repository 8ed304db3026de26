#pragma once

// Continued-fraction evaluation and the linear-fractional (homography)
// transformations connecting the perturbed fraction to the unperturbed one
// and to its tail.  All identities are checked at matched finite truncation
// depth, where they are exact rational statements.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ricopoly/perturbation.hpp"

namespace ricopoly {

// value = 1 / (beta_0 + alpha_1 / (beta_1 + alpha_2 / (beta_2 + ...))),
// partial numerators alpha_n carrying their sign.
template <class T>
struct ContinuedFraction {
  std::function<Polynomial<T>(int)> beta;   // n >= 0
  std::function<Polynomial<T>(int)> alpha;  // n >= 1
};

// beta_0 = z - c_0, alpha_n = -lambda_n (z - a_n), beta_n = z - c_n.
// The depth-n convergent is Q_n / P_n.
template <class T>
ContinuedFraction<T> ri_fraction(const CoefficientSequences<T>& seqs) {
  return ContinuedFraction<T>{
      [seqs](int n) { return Polynomial<T>::linear(seqs.c(n)); },
      [seqs](int n) { return -(seqs.lambda(n) * Polynomial<T>::linear(seqs.a(n))); }};
}

// Same fraction with all coefficient indices shifted to start at k+1.
template <class T>
ContinuedFraction<T> tail_fraction(const CoefficientSequences<T>& seqs, int k) {
  if (k < 0) throw IndexRangeError("tail_fraction: k < 0");
  return ContinuedFraction<T>{
      [seqs, k](int n) { return Polynomial<T>::linear(seqs.c(n + k + 1)); },
      [seqs, k](int n) { return -(seqs.lambda(n + k + 1) * Polynomial<T>::linear(seqs.a(n + k + 1))); }};
}

// Numerator/denominator pair of the depth-n truncation by the forward
// three-term (Wallis) recursion:
//   A_1 = 1, B_1 = beta_0(z),
//   A_j = beta_{j-1} A_{j-1} + alpha_{j-1} A_{j-2},  same for B.
template <class T>
std::pair<T, T> convergent_pair(const ContinuedFraction<T>& cf, const T& z, int depth) {
  if (depth < 0) throw IndexRangeError("convergent: depth < 0");
  if (depth == 0) return {T(0), T(1)};
  T a_prev(0), b_prev(1);  // depth 0
  T a_cur(1), b_cur = cf.beta(0).value_at(z);
  for (int j = 2; j <= depth; ++j) {
    const T beta = cf.beta(j - 1).value_at(z);
    const T alpha = cf.alpha(j - 1).value_at(z);
    T a_next = beta * a_cur + alpha * a_prev;
    T b_next = beta * b_cur + alpha * b_prev;
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
    a_cur = std::move(a_next);
    b_cur = std::move(b_next);
  }
  return {a_cur, b_cur};
}

template <class T>
T convergent(const ContinuedFraction<T>& cf, const T& z, int depth) {
  if (depth < 1) throw IndexRangeError("convergent: depth must be >= 1");
  auto [num, den] = convergent_pair(cf, z, depth);
  if (den == T(0))
    throw DivisionByZeroError("convergent denominator vanished at depth " + std::to_string(depth));
  return num / den;
}

// u -> (A(z) u + B(z)) / (C(z) u + D(z)) with polynomial entries and
// AD - BC not identically zero.
template <class T>
class Homography {
 public:
  explicit Homography(Mat2<T> m) : m_(std::move(m)) {
    if (m_.det().is_zero()) throw DegenerateHomographyError("AD - BC vanishes identically");
  }

  const Mat2<T>& mat() const { return m_; }
  const Polynomial<T>& A() const { return m_.a; }
  const Polynomial<T>& B() const { return m_.b; }
  const Polynomial<T>& C() const { return m_.c; }
  const Polynomial<T>& D() const { return m_.d; }

  T apply(const T& u, const T& z) const {
    const T den = m_.c.value_at(z) * u + m_.d.value_at(z);
    if (den == T(0)) throw DivisionByZeroError("homography denominator vanished");
    return (m_.a.value_at(z) * u + m_.b.value_at(z)) / den;
  }

  // Composition (this after inner) as matrix product.
  Homography compose(const Homography& inner) const { return Homography(m_ * inner.m_); }

  bool equivalent(const Homography& other) const { return proportional(m_, other.m_); }

 private:
  Mat2<T> m_;
};

// Map from the tail value u = R^{(k+1)}(z) to the perturbed value:
//   A = lambda_{k+1}(z-a_{k+1}) Q_k
//   B = -Q_{k+1} + mu_k Q_k + (nu_k-1) lambda_k (z-a_k) Q_{k-1}
//   C = lambda_{k+1}(z-a_{k+1}) P_k
//   D = -P_{k+1} + mu_k P_k + (nu_k-1) lambda_k (z-a_k) P_{k-1}
template <class T>
Homography<T> homography_from_tail(const CoefficientSequences<T>& seqs, const Perturbation<T>& pert) {
  const int k = pert.k;
  const auto P = generate_family(seqs, k + 1);
  const auto Q = generate_second_kind(seqs, k + 1);
  const Polynomial<T> w = seqs.lambda(k + 1) * Polynomial<T>::linear(seqs.a(k + 1));
  const auto [sk, shat] = s_polynomials(seqs, pert);
  // B = -Q_{k+1} - Shat_k and D = -P_{k+1} + S_k, expanded through the
  // definitions of S_k and Shat_k.
  Polynomial<T> b = -Q[static_cast<size_t>(k) + 1] - shat;
  Polynomial<T> d = -P[static_cast<size_t>(k) + 1] + sk;
  return Homography<T>(Mat2<T>{w * Q[static_cast<size_t>(k)], std::move(b), w * P[static_cast<size_t>(k)],
                               std::move(d)});
}

// Map from the unperturbed value R(z) to the perturbed one.  The oracle-
// confirmed entries are
//   A = prod + Shat_k P_k,  B = -Shat_k Q_k,
//   C = -S_k P_k,           D = prod + S_k Q_k,
// with prod = prod_{j=1}^{k} lambda_j(z-a_j); equivalently cof(M_k).
template <class T>
Homography<T> homography_from_full(const CoefficientSequences<T>& seqs, const Perturbation<T>& pert) {
  const int k = pert.k;
  const auto P = generate_family(seqs, k);
  const auto Q = generate_second_kind(seqs, k);
  const auto [sk, shat] = s_polynomials(seqs, pert);
  const Polynomial<T> prod = lambda_prefix_product(seqs, k);
  const Polynomial<T>& Pk = P[static_cast<size_t>(k)];
  const Polynomial<T>& Qk = Q[static_cast<size_t>(k)];
  return Homography<T>(Mat2<T>{prod + shat * Pk, -(shat * Qk), -(sk * Pk), prod + sk * Qk});
}

// The same map obtained as the cofactor matrix of the transfer matrix M_k.
template <class T>
Homography<T> cofactor_transform(const CoefficientSequences<T>& seqs, const Perturbation<T>& pert) {
  return Homography<T>(transfer_matrix_Mk(seqs, pert).cofactor());
}

}  // namespace ricopoly
