#pragma once

// Positive chain sequences d_{n+1} = (1 - m_n) m_{n+1} with their minimal
// and maximal parameter sequences, complementary sequences, the associated
// palindromic r_n / Szego polynomial constructions, and the Verblunsky
// parameter recursions driven by d_{n+1} = (1 - 2 delta_n delta_{n+1}) / 4.

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ricopoly/polynomial.hpp"
#include "ricopoly/sequences.hpp"

namespace ricopoly {

template <class T>
class ChainSequence {
 public:
  using Rule = std::function<T(int)>;

  explicit ChainSequence(Rule d, int max_index = kUnboundedIndex, std::string name = "chain")
      : d_(std::move(d)), max_index_(max_index), name_(std::move(name)) {}

  static ChainSequence constant(const T& v) {
    return ChainSequence([v](int) -> T { return v; }, kUnboundedIndex,
                         "const(" + scalar_traits<T>::str(v) + ")");
  }

  // Finite head followed by a constant tail, e.g. {1/2, 1/4, 1/4, ...}.
  static ChainSequence head_then_constant(std::vector<T> head, const T& tail) {
    auto h = std::make_shared<std::vector<T>>(std::move(head));
    return ChainSequence(
        [h, tail](int n) -> T {
          return static_cast<size_t>(n) <= h->size() ? (*h)[static_cast<size_t>(n) - 1] : tail;
        },
        kUnboundedIndex, "head+const");
  }

  static ChainSequence from_list(std::vector<T> values, std::string name = "chain") {
    auto h = std::make_shared<std::vector<T>>(std::move(values));
    const int max = static_cast<int>(h->size());
    return ChainSequence(
        [h](int n) -> T {
          if (n > static_cast<int>(h->size())) throw IndexRangeError("chain element beyond list");
          return (*h)[static_cast<size_t>(n) - 1];
        },
        max, std::move(name));
  }

  T d(int n) const {
    if (n < 1) throw IndexRangeError("chain sequences are indexed from 1");
    if (n > max_index_) throw IndexRangeError("chain element beyond provided range");
    return d_(n);
  }

  int max_index() const { return max_index_; }
  const std::string& name() const { return name_; }

 private:
  Rule d_;
  int max_index_;
  std::string name_;
};

template <class T>
ChainSequence<double> to_double_chain(const ChainSequence<T>& chain) {
  return ChainSequence<double>([chain](int n) { return scalar_traits<T>::to_double(chain.d(n)); },
                               chain.max_index(), chain.name());
}

// d'_level = nu * d_level, all other elements unchanged.
template <class T>
ChainSequence<T> codilate_chain(const ChainSequence<T>& chain, int level, const T& nu) {
  if (level < 1) throw IndexRangeError("chain co-dilation level must be >= 1");
  if (!(nu > T(0))) throw DomainError("chain co-dilation requires nu > 0");
  return ChainSequence<T>([chain, level, nu](int n) -> T { return n == level ? T(nu * chain.d(n)) : chain.d(n); },
                          chain.max_index(), chain.name() + ";nu@" + std::to_string(level));
}

// [m_0 .. m_N] by the forward recursion m_{n+1} = d_{n+1} / (1 - m_n),
// m_0 = 0.  Leaving (0,1) disqualifies the sequence.
template <class T>
std::vector<T> minimal_parameters(const ChainSequence<T>& chain, int N) {
  std::vector<T> m{T(0)};
  for (int n = 0; n < N; ++n) {
    const T next = chain.d(n + 1) / (T(1) - m.back());
    if (!(next > T(0) && next < T(1)))
      throw NotAChainSequenceError("minimal parameter left (0,1) at index " + std::to_string(n + 1));
    m.push_back(next);
  }
  return m;
}

// [M_0 .. M_N] approximated by the backward recursion g_n = 1 - d_{n+1}/g_{n+1}
// seeded with g = 1 at the given tail depth.
inline std::vector<double> maximal_parameters(const ChainSequence<double>& chain, int N,
                                              long tail_depth) {
  if (tail_depth < N + 1) throw IndexRangeError("maximal_parameters: tail depth below N");
  double g = 1.0;
  std::vector<double> out(static_cast<size_t>(N) + 1, 0.0);
  for (long j = tail_depth - 1; j >= 0; --j) {
    g = 1.0 - chain.d(static_cast<int>(j) + 1) / g;
    if (g <= 0) throw NotAChainSequenceError("backward recursion broke down (g <= 0)");
    if (j <= N) out[static_cast<size_t>(j)] = g;
  }
  return out;
}

namespace detail {

// Two passes of Aitken's delta-squared over the doubling subsequence.  The
// backward recursion approaches its limit like depth^{-1} for ordinary
// tails but only like depth^{-1/2} for single-parameter (critical) ones;
// on the doubling grid both are near-geometric, which Aitken removes.
inline std::vector<double> aitken_twice(std::vector<double> s) {
  for (int pass = 0; pass < 2 && s.size() >= 3; ++pass) {
    std::vector<double> t;
    for (size_t i = 0; i + 2 < s.size(); ++i) {
      const double d1 = s[i + 1] - s[i];
      const double d2 = s[i + 2] - s[i + 1];
      const double den = d2 - d1;
      t.push_back(std::fabs(den) < 1e-300 ? s[i + 2] : s[i + 2] - d2 * d2 / den);
    }
    s = std::move(t);
  }
  return s;
}

}  // namespace detail

// Tail depths 1e3 * 2^k with the chain elements cached across rounds;
// terminates once the extrapolated g_0 values stabilize to 1e-9, leaving
// margin under the quoted 1e-8 parameter limits.  Finite chains are capped
// at their provided length.
inline std::vector<double> maximal_parameters_auto(const ChainSequence<double>& chain, int N) {
  std::vector<double> dcache;  // dcache[j-1] = d(j)
  auto run = [&](long depth) {
    while (static_cast<long>(dcache.size()) < depth)
      dcache.push_back(chain.d(static_cast<int>(dcache.size()) + 1));
    double g = 1.0;
    std::vector<double> out(static_cast<size_t>(N) + 1, 0.0);
    for (long j = depth - 1; j >= 0; --j) {
      g = 1.0 - dcache[static_cast<size_t>(j)] / g;
      if (g <= 0) throw NotAChainSequenceError("backward recursion broke down (g <= 0)");
      if (j <= N) out[static_cast<size_t>(j)] = g;
    }
    return out;
  };

  const long cap = chain.max_index() == kUnboundedIndex ? (1000L << 12) : chain.max_index();
  std::vector<std::vector<double>> rounds;
  double prev_head = 0;
  bool have_prev = false;
  for (long depth = std::min<long>(1000, cap);; depth = std::min(depth * 2, cap)) {
    rounds.push_back(run(depth));
    if (rounds.size() >= 3) {
      std::vector<double> heads;
      for (const auto& r : rounds) heads.push_back(r[0]);
      const double head = detail::aitken_twice(heads).back();
      if ((have_prev && std::fabs(head - prev_head) < 1e-9) || depth == cap) {
        std::vector<double> out(static_cast<size_t>(N) + 1);
        for (int i = 0; i <= N; ++i) {
          std::vector<double> comp;
          for (const auto& r : rounds) comp.push_back(r[static_cast<size_t>(i)]);
          out[static_cast<size_t>(i)] = detail::aitken_twice(comp).back();
        }
        return out;
      }
      prev_head = head;
      have_prev = true;
    }
    if (depth == cap && rounds.size() < 3) return rounds.back();
  }
}

struct ChainAnalysis {
  std::vector<double> minimal;
  std::vector<double> maximal;
  bool sppcs = false;  // max_n |M_n - m_n| < 1e-6 over the computed range
};

inline ChainAnalysis analyze_chain(const ChainSequence<double>& chain, int N) {
  ChainAnalysis out;
  auto m = minimal_parameters(chain, N);
  out.minimal.assign(m.begin(), m.end());
  out.maximal = maximal_parameters_auto(chain, N);
  out.sppcs = true;
  for (int n = 0; n <= N; ++n)
    if (std::fabs(out.maximal[static_cast<size_t>(n)] - out.minimal[static_cast<size_t>(n)]) >= 1e-6)
      out.sppcs = false;
  return out;
}

// Complementary sequence: parameters k_0 = 0, k_n = 1 - m_n generate
// a_1 = k_1, a_{n+1} = (1 - k_n) k_{n+1} = m_n (1 - m_{n+1}).
template <class T>
ChainSequence<T> complementary(const ChainSequence<T>& chain, int N) {
  const auto m = minimal_parameters(chain, N);
  std::vector<T> a(static_cast<size_t>(N));
  a[0] = T(1) - m[1];
  for (int n = 2; n <= N; ++n)
    a[static_cast<size_t>(n) - 1] = m[static_cast<size_t>(n) - 1] * (T(1) - m[static_cast<size_t>(n)]);
  return ChainSequence<T>::from_list(std::move(a), chain.name() + ";complement");
}

// r_0 = 1, r_1 = z + 1, r_{n+1} = (z+1) r_n - 4 d_{n+1} z r_{n-1}
// (the beta = 0 instance; nonzero beta rotates the linear factors into the
// complex plane and is handled by the complex overload below).
template <class T>
std::vector<Polynomial<T>> r_polynomials(const ChainSequence<T>& chain, int N) {
  std::vector<Polynomial<T>> r;
  r.reserve(static_cast<size_t>(N) + 1);
  r.push_back(Polynomial<T>::one());
  if (N == 0) return r;
  r.push_back(Polynomial<T>(std::vector<T>{T(1), T(1)}));  // z + 1
  const Polynomial<T> zpoly = Polynomial<T>::x();
  for (int n = 1; n < N; ++n) {
    Polynomial<T> next = Polynomial<T>(std::vector<T>{T(1), T(1)}) * r[static_cast<size_t>(n)] -
                         (T(4) * chain.d(n + 1)) * (zpoly * r[static_cast<size_t>(n) - 1]);
    r.push_back(std::move(next));
  }
  return r;
}

// General beta: r_1 = (1 + i b_1) z + (1 - i b_1) and analogously inside the
// recursion.
std::vector<Polynomial<std::complex<double>>> r_polynomials(const std::function<double(int)>& beta,
                                                            const ChainSequence<double>& chain, int N);

template <class T>
struct SzegoFamily {
  std::vector<Polynomial<T>> phi;  // phi_0 .. phi_N, monic
  std::vector<T> verblunsky;       // alpha_{n-1} = -phi_n(0), n = 1..N
};

// phi_n = r_n - 2 (1 - m_n) r_{n-1} for the beta = 0 construction.
template <class T>
SzegoFamily<T> szego_from_chain(const ChainSequence<T>& chain, int N) {
  const auto m = minimal_parameters(chain, N);
  const auto r = r_polynomials(chain, N);
  SzegoFamily<T> out;
  out.phi.push_back(Polynomial<T>::one());
  for (int n = 1; n <= N; ++n) {
    Polynomial<T> phi = r[static_cast<size_t>(n)] -
                        (T(2) * (T(1) - m[static_cast<size_t>(n)])) * r[static_cast<size_t>(n) - 1];
    out.verblunsky.push_back(T(0) - phi.value_at(T(0)));
    out.phi.push_back(std::move(phi));
  }
  return out;
}

enum class VerblunskyOrigin { explicit_seq, from_chain, from_phi };

// delta_1, delta_2, ... with |delta_n| < 1.
template <class T>
struct VerblunskySeq {
  std::vector<T> values;  // values[i] = delta_{i+1}
  VerblunskyOrigin origin = VerblunskyOrigin::explicit_seq;

  VerblunskySeq(std::vector<T> vals, VerblunskyOrigin org) : values(std::move(vals)), origin(org) {
    for (const auto& v : values)
      if (!(scalar_traits<T>::abs(v) < T(1))) throw DomainError("Verblunsky parameter with |delta| >= 1");
  }

  int size() const { return static_cast<int>(values.size()); }

  const T& at(int n) const {
    if (n < 1 || n > size()) throw IndexRangeError("delta index out of range");
    return values[static_cast<size_t>(n) - 1];
  }
};

// delta_{n+1} = (1 - 4 d_{n+1}) / (2 delta_n) from the seed delta_1.  When
// the product condition delta_{n+1} delta_n = delta_{n+1} - delta_n holds,
// the factored form d_{n+1} = (1 + delta_n)(1 - delta_{n+1})/4 is revalidated.
template <class T>
VerblunskySeq<T> delta_from_chain(const T& delta1, const ChainSequence<T>& chain, int N) {
  std::vector<T> vals{delta1};
  for (int n = 1; n < N; ++n) {
    const T& prev = vals.back();
    if (prev == T(0))
      throw DivisionByZeroError("delta_" + std::to_string(n) + " = 0 stalls the recursion");
    const T next = (T(1) - T(4) * chain.d(n + 1)) / (T(2) * prev);
    if constexpr (scalar_traits<T>::exact) {
      if (next * prev == next - prev) {
        const T refactored = (T(1) + prev) * (T(1) - next) / T(4);
        if (refactored != chain.d(n + 1))
          throw Error("chain element disagrees with its delta factorization");
      }
    }
    vals.push_back(next);
  }
  return VerblunskySeq<T>(std::move(vals), VerblunskyOrigin::from_chain);
}

// Single co-dilation d_{k+1} -> nu d_{k+1} rewritten on the delta side:
//   deltahat_n = delta_n (n <= k),
//   deltahat_{k+1} = delta_{k+1} + 2 (1 - nu) d_{k+1} / delta_k,
//   deltahat_{n+1} = (1 - 4 d_{n+1}) / (2 deltahat_n)  (n > k).
template <class T>
VerblunskySeq<T> perturbed_delta(const VerblunskySeq<T>& delta, const ChainSequence<T>& chain, int k,
                                 const T& nu, int N) {
  if (k < 1) throw IndexRangeError("perturbed_delta requires k >= 1");
  if (k + 1 > delta.size()) throw IndexRangeError("delta sequence too short for level k+1");
  if (!(nu > T(0))) throw DomainError("perturbed_delta requires nu > 0");
  std::vector<T> vals;
  for (int n = 1; n <= k; ++n) vals.push_back(delta.at(n));
  if (delta.at(k) == T(0)) throw DivisionByZeroError("delta_k = 0");
  vals.push_back(delta.at(k + 1) + T(2) * (T(1) - nu) * chain.d(k + 1) / delta.at(k));
  for (int n = k + 1; n < N; ++n) {
    const T& prev = vals.back();
    if (prev == T(0)) throw DivisionByZeroError("deltahat_" + std::to_string(n) + " = 0");
    vals.push_back((T(1) - T(4) * chain.d(n + 1)) / (T(2) * prev));
  }
  return VerblunskySeq<T>(std::move(vals), VerblunskyOrigin::from_chain);
}

// Szego recurrences from real Verblunsky parameters:
//   phi*_n = delta_n z phi_{n-1} + phi*_{n-1},
//   phi_n  = delta_n phi*_n + (1 - delta_n^2) z phi_{n-1},
// from phi_0 = phi*_0 = 1; phi*_n stays the coefficient reversal of phi_n.
template <class T>
std::pair<std::vector<Polynomial<T>>, std::vector<Polynomial<T>>> szego_from_delta(
    const VerblunskySeq<T>& delta, int N) {
  if (N > delta.size()) throw IndexRangeError("szego_from_delta: N beyond the delta sequence");
  std::vector<Polynomial<T>> phi{Polynomial<T>::one()};
  std::vector<Polynomial<T>> star{Polynomial<T>::one()};
  const Polynomial<T> zp = Polynomial<T>::x();
  for (int n = 1; n <= N; ++n) {
    const T dn = delta.at(n);
    Polynomial<T> s = dn * (zp * phi.back()) + star.back();
    Polynomial<T> f = dn * s + (T(1) - dn * dn) * (zp * phi.back());
    phi.push_back(std::move(f));
    star.push_back(std::move(s));
  }
  return {phi, star};
}

// The eta chain family: unaugmented elements
//   d_{n+1} = n (2 eta + n + 1) / (4 (eta + n)(eta + n + 1)),  n >= 1,
// with minimal parameters m_n = n / (2 (eta + n + 1)).  For eta > -1/2 the
// maximal parameters are M_n = (2 eta + n) / (2 (eta + n)) and the sequence
// is not single-parameter; for -1 < eta <= -1/2 minimal = maximal.  The
// returned chain is augmented by the head d_1 = (1 - t) M_1.
template <class T>
struct EtaFamily {
  ChainSequence<T> chain;  // augmented
  std::function<T(int)> minimal_unaugmented;
  std::function<T(int)> maximal_unaugmented;
  bool sppcs_unaugmented = false;
  bool sppcs_augmented_expected = false;  // t = 0 with eta > -1/2
};

template <class T>
EtaFamily<T> eta_family(const T& eta, const T& t) {
  if (!(eta > T(-1))) throw DomainError("eta family requires eta > -1");
  if (!(t >= T(0) && t < T(1))) throw DomainError("eta family requires 0 <= t < 1");
  const bool sppcs = !(eta > T(-1) / T(2));
  auto m_rule = [eta](int n) -> T { return T(n) / (T(2) * (eta + T(n) + T(1))); };
  auto big_m_rule = [eta, sppcs, m_rule](int n) -> T {
    if (sppcs) return m_rule(n);
    return (T(2) * eta + T(n)) / (T(2) * (eta + T(n)));
  };
  const T d1 = (T(1) - t) * big_m_rule(1);
  auto d_rule = [eta, d1](int j) -> T {
    if (j == 1) return d1;
    const T n = T(j - 1);
    return n * (T(2) * eta + n + T(1)) / (T(4) * (eta + n) * (eta + n + T(1)));
  };
  EtaFamily<T> out{
      ChainSequence<T>(d_rule, kUnboundedIndex,
                       "eta(" + scalar_traits<T>::str(eta) + ",t=" + scalar_traits<T>::str(t) + ")"),
      m_rule, big_m_rule, sppcs, (!sppcs && t == T(0))};
  return out;
}

}  // namespace ricopoly
