#pragma once

// Family generation for recurrences of the form
//   F_{m+1}(z) = (z - c_{m+shift}) F_m(z) - lambda_{m+shift} (z - a_{m+shift}) F_{m-1}(z),
// covering the base family (shift 0), the second-kind family and the
// associated families of any order.

#include <span>
#include <vector>

#include "ricopoly/polynomial.hpp"
#include "ricopoly/sequences.hpp"

namespace ricopoly {

// [F_0 .. F_N] with F_0 = 1, F_{-1} = 0 and coefficient indices offset by
// `shift`.  shift = 0 gives the base family P_n; shift = k gives the
// associated family of order k (first step uses c_k).
template <class T>
std::vector<Polynomial<T>> generate_family(const CoefficientSequences<T>& seqs, int N, int shift = 0) {
  if (N < 0) throw IndexRangeError("generate_family: N < 0");
  if (shift < 0) throw IndexRangeError("generate_family: shift < 0");
  std::vector<Polynomial<T>> fam;
  fam.reserve(static_cast<size_t>(N) + 1);
  fam.push_back(Polynomial<T>::one());
  Polynomial<T> prev = Polynomial<T>::zero();  // F_{-1}
  for (int m = 0; m < N; ++m) {
    const int j = m + shift;
    if (j > seqs.max_index()) throw IndexRangeError("coefficient index beyond provided sequences");
    Polynomial<T> step = Polynomial<T>::linear(seqs.c(j)) * fam.back();
    if (!prev.is_zero()) step = step - seqs.lambda(j) * (Polynomial<T>::linear(seqs.a(j)) * prev);
    prev = fam.back();
    fam.push_back(std::move(step));
  }
  return fam;
}

// [Q_0 .. Q_N]: same recurrence run from Q_0 = 0, Q_1 = 1 for n >= 1, so
// deg Q_n = n - 1.
template <class T>
std::vector<Polynomial<T>> generate_second_kind(const CoefficientSequences<T>& seqs, int N) {
  if (N < 0) throw IndexRangeError("generate_second_kind: N < 0");
  std::vector<Polynomial<T>> fam;
  fam.reserve(static_cast<size_t>(N) + 1);
  fam.push_back(Polynomial<T>::zero());
  if (N == 0) return fam;
  fam.push_back(Polynomial<T>::one());
  for (int n = 1; n < N; ++n) {
    if (n > seqs.max_index()) throw IndexRangeError("coefficient index beyond provided sequences");
    Polynomial<T> next = Polynomial<T>::linear(seqs.c(n)) * fam[static_cast<size_t>(n)] -
                         seqs.lambda(n) * (Polynomial<T>::linear(seqs.a(n)) * fam[static_cast<size_t>(n) - 1]);
    fam.push_back(std::move(next));
  }
  return fam;
}

// One-step transfer matrix A_n = [[x - c_n, -lambda_n (x - a_n)], [1, 0]];
// (F_{n+1}, F_n)^T = A_n (F_n, F_{n-1})^T.  For n = 0 the (1,2) entry uses
// the index-0 placeholders and is identically 0.
template <class T>
Mat2<T> transfer_step(const CoefficientSequences<T>& seqs, int n) {
  if (n < 0) throw IndexRangeError("transfer_step: n < 0");
  Polynomial<T> top_right =
      n == 0 ? Polynomial<T>::zero() : -(seqs.lambda(n) * Polynomial<T>::linear(seqs.a(n)));
  return Mat2<T>{Polynomial<T>::linear(seqs.c(n)), top_right, Polynomial<T>::one(), Polynomial<T>::zero()};
}

// Cumulative product A_n ... A_0.
template <class T>
Mat2<T> transfer_product(const CoefficientSequences<T>& seqs, int n) {
  Mat2<T> acc = Mat2<T>::identity();
  for (int j = 0; j <= n; ++j) acc = transfer_step(seqs, j) * acc;
  return acc;
}

// u_n v_{n+1} - u_{n+1} v_n for two sequences given as 0-indexed windows.
template <class T>
T casoratti(std::span<const T> u, std::span<const T> v, int n) {
  if (n < 0 || static_cast<size_t>(n) + 1 >= u.size() || static_cast<size_t>(n) + 1 >= v.size())
    throw IndexRangeError("casoratti: sequences not defined at n and n+1");
  return u[static_cast<size_t>(n)] * v[static_cast<size_t>(n) + 1] -
         u[static_cast<size_t>(n) + 1] * v[static_cast<size_t>(n)];
}

// Polynomial form of the same determinant for two polynomial families.
template <class T>
Polynomial<T> casoratti_poly(const std::vector<Polynomial<T>>& u, const std::vector<Polynomial<T>>& v,
                             int n) {
  if (n < 0 || static_cast<size_t>(n + 1) >= u.size() || static_cast<size_t>(n + 1) >= v.size())
    throw IndexRangeError("casoratti_poly: families not defined at n and n+1");
  return u[static_cast<size_t>(n)] * v[static_cast<size_t>(n) + 1] -
         u[static_cast<size_t>(n) + 1] * v[static_cast<size_t>(n)];
}

}  // namespace ricopoly
