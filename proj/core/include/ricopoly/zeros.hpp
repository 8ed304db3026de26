#pragma once

// Real-zero computation for the a_n = 0 subclass, interlacing
// classification between perturbed and unperturbed families, and the
// L-Jacobi family with its terminating hypergeometric representation.

#include <string>
#include <utility>
#include <vector>

#include "ricopoly/perturbation.hpp"

namespace ricopoly {

struct ZeroSet {
  std::vector<double> zeros;      // strictly ascending
  std::vector<double> residuals;  // |P(x_j)| per zero
};

// Companion-matrix eigenvalues (balanced) refined by Newton steps; a zero is
// accepted when |P(x)| <= tol * max(1, l1_norm(P)).
ZeroSet real_zeros(const Polynomial<double>& p, double tol = 1e-10);

inline ZeroSet real_zeros(const Polynomial<Rational>& p, double tol = 1e-10) {
  return real_zeros(to_double_poly(p), tol);
}

enum class InterlacingPattern { a_starts, b_starts, violated, none };

std::string pattern_string(InterlacingPattern p);

struct InterlacingReport {
  struct Entry {
    double x;
    char tag;     // 'A' or 'B'
    bool common;  // matched against the other set within tolerance
  };
  std::vector<std::pair<double, double>> common;  // (x_A, x_B) pairs
  InterlacingPattern pattern = InterlacingPattern::none;
  std::vector<Entry> details;  // merged ordering with provenance
};

// Zeros within tol (relative to max(1, |x|)) are reported common; the
// remaining merged zeros must strictly alternate, else `violated`.
InterlacingReport interlacing_report(const ZeroSet& a, const ZeroSet& b, double tol = 1e-7);

template <class T>
CoefficientSequences<T> ljacobi_seqs(const T& a, const T& c) {
  return CoefficientSequences<T>::ljacobi(a, c);
}

// Terminating series ((c)_n / (1-a)_n) F(-n, 1-a; 1-c-n; x) evaluated by
// accumulating the Pochhammer ratios term by term; equals the L-Jacobi
// polynomial of degree n from the recurrence.
template <class T>
T hypergeometric_ljacobi(const T& a, const T& c, int n, const T& x) {
  if (n < 0) throw IndexRangeError("hypergeometric_ljacobi: n < 0");
  // prefactor (c)_n / (1-a)_n
  T pre(1);
  for (int j = 0; j < n; ++j) {
    const T den = T(1) - a + T(j);
    if (den == T(0)) throw PoleError("(1-a)_n vanishes");
    pre = pre * (c + T(j)) / den;
  }
  T sum(0), term(1);
  for (int j = 0; j <= n; ++j) {
    sum = sum + term;
    if (j == n) break;
    const T den = (T(1) - c - T(n) + T(j)) * (T(j) + T(1));
    if (den == T(0)) throw PoleError("(1-c-n)_j vanishes");
    term = term * (T(-n) + T(j)) * (T(1) - a + T(j)) / den * x;
  }
  return pre * sum;
}

// Exactness witness for the co-recursive Casoratti identity on the a_n = 0
// positivity subclass:
//   P_n P_{n+1}(.;mu_k) - P_{n+1} P_n(.;mu_k)
//     = -mu_k (lambda_{k+1} ... lambda_n) x^{n-k} P_k(x)^2.
// The multiplier runs over lambda_{k+1}..lambda_n; the loose endpoint
// reading that also includes lambda_k fails the brute-force expansion and
// is rejected here.  Returns the maximal coefficient deviation between the
// two sides (0 in exact arithmetic).
template <class T>
T sign_witness_corecursive(const CoefficientSequences<T>& seqs, const Perturbation<T>& pert, int n) {
  if (pert.kind() != PerturbationKind::corecursive && !pert.is_identity())
    throw DomainError("sign witness applies to co-recursive perturbations");
  const int k = pert.k;
  if (n < k) throw IndexRangeError("sign witness requires n >= k");
  const auto P = generate_family(seqs, n + 1);
  const auto Pm = perturbed_family_direct(seqs, pert, n + 1);
  const Polynomial<T> lhs = P[static_cast<size_t>(n)] * Pm[static_cast<size_t>(n) + 1] -
                            P[static_cast<size_t>(n) + 1] * Pm[static_cast<size_t>(n)];
  T mult = -pert.mu;
  for (int j = k + 1; j <= n; ++j) mult = mult * seqs.lambda(j);
  std::vector<T> xpow(static_cast<size_t>(n - k) + 1, T(0));
  xpow.back() = T(1);
  const Polynomial<T> rhs =
      mult * (Polynomial<T>(std::move(xpow)) * (P[static_cast<size_t>(k)] * P[static_cast<size_t>(k)]));
  const Polynomial<T> diff = lhs - rhs;
  T worst(0);
  for (const auto& cf : diff.coeffs()) {
    T m = scalar_traits<T>::abs(cf);
    if (m > worst) worst = m;
  }
  return worst;
}

struct MonotonicityScan {
  std::vector<ZeroSet> columns;  // one ZeroSet per (mu_k, mu_{k+1}) pair
  bool strictly_monotone = true;
};

// Zeros of the doubly perturbed family for each pair of shifts applied at
// consecutive levels k and k+1.  For pairs ordered by increasing |mu| the
// zero columns must move strictly in the direction of the common sign.
template <class T>
MonotonicityScan monotonicity_scan(const CoefficientSequences<T>& seqs, int k,
                                   const std::vector<std::pair<T, T>>& mu_pairs, int n,
                                   double tol = 1e-10) {
  MonotonicityScan out;
  int sign = 0;  // direction of all nonzero shifts; 0 until one is seen
  auto note_sign = [&sign](const T& mu) {
    if (mu == T(0)) return;
    const int s = mu > T(0) ? 1 : -1;
    if (sign == 0)
      sign = s;
    else if (s != sign)
      throw DomainError("monotonicity scan requires same-sign pairs");
  };
  for (const auto& [mu0, mu1] : mu_pairs) {
    note_sign(mu0);
    note_sign(mu1);
    std::vector<Perturbation<T>> perts;
    if (mu0 != T(0)) perts.emplace_back(k, mu0, T(1));
    if (mu1 != T(0)) perts.emplace_back(k + 1, mu1, T(1));
    const auto fam = generate_family(apply_perturbations(seqs, perts), n);
    out.columns.push_back(real_zeros(fam.back(), tol));
  }
  for (size_t j = 1; j < out.columns.size() && sign != 0; ++j) {
    const auto& prev = out.columns[j - 1].zeros;
    const auto& cur = out.columns[j].zeros;
    if (prev.size() != cur.size()) {
      out.strictly_monotone = false;
      break;
    }
    for (size_t i = 0; i < cur.size(); ++i) {
      const bool ok = sign > 0 ? cur[i] > prev[i] : cur[i] < prev[i];
      if (!ok) out.strictly_monotone = false;
    }
  }
  return out;
}

}  // namespace ricopoly
