#pragma once

// Recurrence coefficient triples (c_n, lambda_n, a_n) for families
//   P_{n+1}(z) = (z - c_n) P_n(z) - lambda_n (z - a_n) P_{n-1}(z),
//   P_{-1} = 0, P_0 = 1,
// with c indexed from 0 and lambda, a indexed from 1.  Index 0 of lambda
// and a is a declared placeholder equal to 0: it only ever multiplies
// P_{-1} = 0.

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ricopoly/errors.hpp"
#include "ricopoly/rational.hpp"

namespace ricopoly {

inline constexpr int kUnboundedIndex = std::numeric_limits<int>::max();

template <class T>
class CoefficientSequences {
 public:
  using Rule = std::function<T(int)>;

  CoefficientSequences(Rule c, Rule lambda, Rule a, int max_index = kUnboundedIndex,
                       std::string name = "custom")
      : c_(std::move(c)), lambda_(std::move(lambda)), a_(std::move(a)), max_index_(max_index),
        name_(std::move(name)) {}

  // c_n = 1, lambda_n = 1/4, a_n = -1.
  static CoefficientSequences example1() {
    return CoefficientSequences([](int) { return T(1); }, [](int) -> T { return T(1) / T(4); },
                                [](int) { return T(-1); }, kUnboundedIndex, "example1");
  }

  // c_n = (c+n)/(a-n-1), lambda_n = n(c+n-a)/((a-n-1)(a-n)), a_n = 0.
  // The coefficient rules have poles where a-n or a-n-1 vanishes.
  static CoefficientSequences ljacobi(const T& a, const T& c) {
    auto crule = [a, c](int n) -> T {
      T den = a - T(n) - T(1);
      if (den == T(0)) throw PoleError("ljacobi c_n pole at n = " + std::to_string(n));
      return (c + T(n)) / den;
    };
    auto lrule = [a, c](int n) -> T {
      T den = (a - T(n) - T(1)) * (a - T(n));
      if (den == T(0)) throw PoleError("ljacobi lambda_n pole at n = " + std::to_string(n));
      return T(n) * (c + T(n) - a) / den;
    };
    return CoefficientSequences(crule, lrule, [](int) { return T(0); }, kUnboundedIndex,
                                "ljacobi(" + scalar_traits<T>::str(a) + "," + scalar_traits<T>::str(c) + ")");
  }

  // The family attached to the eta chain sequence:
  //   c_n = -1, a_n = 0, lambda_n = n(2*eta+n+1)/((eta+n)(eta+n+1)).
  // The t parameter deforms only the head element d_1 of the chain
  // sequence, which never enters the polynomial recurrence.
  static CoefficientSequences eta(const T& eta_par, const T& t) {
    if (!(eta_par > T(-1))) throw DomainError("eta family requires eta > -1");
    auto lrule = [eta_par](int n) -> T {
      T den = (eta_par + T(n)) * (eta_par + T(n) + T(1));
      if (den == T(0)) throw PoleError("eta lambda_n pole at n = " + std::to_string(n));
      return T(n) * (T(2) * eta_par + T(n) + T(1)) / den;
    };
    return CoefficientSequences([](int) { return T(-1); }, lrule, [](int) { return T(0); },
                                kUnboundedIndex,
                                "eta(" + scalar_traits<T>::str(eta_par) + "," + scalar_traits<T>::str(t) + ")");
  }

  // Explicit finite lists: c covers indices 0..len(c)-1, lambda and a cover
  // indices 1..len(...).
  static CoefficientSequences from_lists(std::vector<T> c, std::vector<T> lambda, std::vector<T> a,
                                         std::string name = "explicit") {
    const int max_c = static_cast<int>(c.size()) - 1;
    const int max_l = static_cast<int>(lambda.size());
    const int max_a = static_cast<int>(a.size());
    auto cs = std::make_shared<std::vector<T>>(std::move(c));
    auto ls = std::make_shared<std::vector<T>>(std::move(lambda));
    auto as = std::make_shared<std::vector<T>>(std::move(a));
    auto crule = [cs, max_c](int n) -> T {
      if (n > max_c) throw IndexRangeError("c_n requested beyond provided list at n = " + std::to_string(n));
      return (*cs)[static_cast<size_t>(n)];
    };
    auto lrule = [ls, max_l](int n) -> T {
      if (n > max_l)
        throw IndexRangeError("lambda_n requested beyond provided list at n = " + std::to_string(n));
      return (*ls)[static_cast<size_t>(n - 1)];
    };
    auto arule = [as, max_a](int n) -> T {
      if (n > max_a) throw IndexRangeError("a_n requested beyond provided list at n = " + std::to_string(n));
      return (*as)[static_cast<size_t>(n - 1)];
    };
    return CoefficientSequences(crule, lrule, arule, std::min(max_c, std::min(max_l, max_a)),
                                std::move(name));
  }

  T c(int n) const {
    if (n < 0) throw IndexRangeError("c_n with n < 0");
    return c_(n);
  }

  // Standing hypothesis: every consulted lambda_n (n >= 1) is nonzero.
  T lambda(int n) const {
    if (n < 0) throw IndexRangeError("lambda_n with n < 0");
    if (n == 0) return T(0);  // placeholder, multiplies P_{-1} = 0
    T v = lambda_(n);
    if (v == T(0)) throw ZeroLambdaError("lambda_" + std::to_string(n) + " = 0");
    return v;
  }

  T a(int n) const {
    if (n < 0) throw IndexRangeError("a_n with n < 0");
    if (n == 0) return T(0);  // placeholder
    return a_(n);
  }

  int max_index() const { return max_index_; }

  const std::string& name() const { return name_; }

  // The positivity subclass: a_n = 0 with c_n, lambda_n > 0 through the
  // coefficients consulted when generating P_0..P_N (c_0..c_{N-1},
  // lambda_1..lambda_{N-1}).
  bool positive_L(int N) const {
    try {
      for (int n = 0; n <= N - 1; ++n) {
        if (!(c(n) > T(0))) return false;
        if (n >= 1 && (a(n) != T(0) || !(lambda(n) > T(0)))) return false;
      }
    } catch (const Error&) {
      return false;
    }
    return true;
  }

 private:
  Rule c_, lambda_, a_;
  int max_index_;
  std::string name_;
};

}  // namespace ricopoly
