#pragma once

// Time-deformed moment functional L^t[x^m] = L[x^m exp(-t(p x + q/x))] over
// a discrete measure with positive nodes, recovery of the L-orthogonal
// recurrence coefficients from moments, the (perturbed) extended
// relativistic Toda right-hand sides, finite-difference flow verification,
// and a classical RK4 integrator for the closed finite lattice.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ricopoly/polynomial.hpp"
#include "ricopoly/rational.hpp"

namespace ricopoly {

template <class T>
struct DiscreteMeasure {
  std::vector<T> nodes;    // distinct, > 0 (negative powers must exist)
  std::vector<T> weights;  // > 0

  DiscreteMeasure(std::vector<T> xs, std::vector<T> ws) : nodes(std::move(xs)), weights(std::move(ws)) {
    if (nodes.size() != weights.size() || nodes.empty())
      throw DomainError("measure needs matching nonempty node/weight lists");
    for (const auto& x : nodes)
      if (!(x > T(0))) throw DomainError("measure nodes must be positive");
    for (const auto& w : weights)
      if (!(w > T(0))) throw DomainError("measure weights must be positive");
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = i + 1; j < nodes.size(); ++j)
        if (nodes[i] == nodes[j]) throw DomainError("measure nodes must be distinct");
  }

  int count() const { return static_cast<int>(nodes.size()); }
};

template <class T>
struct TodaParams {
  T p{0};
  T q{0};
  T t{0};
};

// exp(-t(p x + q/x)) per node.  Exact scalars admit only a vanishing
// exponent, i.e. t = 0 or p = q = 0.
template <class T>
std::vector<T> deformation_factors(const DiscreteMeasure<T>& measure, const TodaParams<T>& par) {
  std::vector<T> f(measure.nodes.size(), T(1));
  if constexpr (scalar_traits<T>::exact) {
    if (par.t != T(0) && (par.p != T(0) || par.q != T(0)))
      throw DomainError("exact moments require t = 0 or p = q = 0");
  } else {
    for (size_t i = 0; i < f.size(); ++i) {
      const T x = measure.nodes[i];
      f[i] = std::exp(-par.t * (par.p * x + par.q / x));
    }
  }
  return f;
}

// L^t[x^m]; m may be negative.
template <class T>
T moment(const DiscreteMeasure<T>& measure, const TodaParams<T>& par, int m) {
  const auto factors = deformation_factors(measure, par);
  T sum(0);
  for (size_t i = 0; i < measure.nodes.size(); ++i) {
    const T& x = measure.nodes[i];
    T power(1);
    for (int j = 0; j < std::abs(m); ++j) power = power * x;
    if (m < 0) power = T(1) / power;
    sum = sum + measure.weights[i] * power * factors[i];
  }
  return sum;
}

// Partial-pivot elimination.  A pivot below 1e-12 times the largest entry
// (exactly zero for exact scalars) marks the system singular.
template <class T>
std::vector<T> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
  const size_t n = b.size();
  double max_entry = 0;
  for (const auto& row : a)
    for (const auto& v : row)
      max_entry = std::max(max_entry, std::fabs(scalar_traits<T>::to_double(v)));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (scalar_traits<T>::abs(a[r][col]) > scalar_traits<T>::abs(a[piv][col])) piv = r;
    const double piv_mag = std::fabs(scalar_traits<T>::to_double(a[piv][col]));
    const bool singular =
        scalar_traits<T>::exact ? a[piv][col] == T(0) : piv_mag < 1e-12 * std::max(1e-300, max_entry);
    if (singular) throw SingularSystemError("pivot below threshold in moment system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      const T f = a[r][col] / a[col][col];
      for (size_t cc = col; cc < n; ++cc) a[r][cc] = a[r][cc] - f * a[col][cc];
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (size_t r = n; r-- > 0;) {
    T acc = b[r];
    for (size_t cc = r + 1; cc < n; ++cc) acc = acc - a[r][cc] * x[cc];
    x[r] = acc / a[r][r];
  }
  return x;
}

// Recurrence data recovered from a moment functional:
//   R_{n+1}(x;t) = (x - c_{n+1}(t)) R_n(x;t) - lambda_{n+1}(t) x R_{n-1}(x;t)
// with c_0 = 1 and lambda_0 = -1 as bookkeeping conventions (lambda_0 never
// enters any displayed equation) and lambda_1 = 0.
template <class T>
struct CoefficientFrame {
  int N = 0;
  bool closed_top = false;  // lambda_{N+1} = 0 boundary of the finite lattice
  std::vector<T> c;         // index 0..N, c[0] = 1
  std::vector<T> lambda;    // index 0..N, lambda[0] = -1, lambda[1] = 0
  std::vector<std::vector<T>> a_coeffs;  // a_coeffs[n] = coefficients of R_n, ascending
  std::vector<T> sigma_lo;               // sigma_{n,-1} = L^t[x^{-n-1} R_n]
  std::vector<T> sigma_hi;               // sigma_{n,n}  = L^t[R_n]

  T c_at(int j) const {
    if (j < 0 || j > N) throw IndexRangeError("frame c index " + std::to_string(j));
    return c[static_cast<size_t>(j)];
  }

  T lambda_at(int j) const {
    if (j == N + 1 && closed_top) return T(0);
    if (j < 0 || j > N) throw IndexRangeError("frame lambda index " + std::to_string(j));
    return lambda[static_cast<size_t>(j)];
  }
};

// Solves the L-orthogonality systems
//   sum_j a_{n,j} mu_{j-n+s} = 0  (s = 0..n-1, a_{n,n} = 1)
// for n <= N and extracts c_{n+1} = -a_{n+1,0}/a_{n,0} and
// lambda_{n+1} = a_{n,n-1} - a_{n+1,n} - c_{n+1}.  N may reach the node
// count M, where R_M degenerates to the node polynomial; this is exactly
// what closes the finite lattice (sigma_{M,M} = 0 forces lambda_{M+1} = 0).
template <class T>
CoefficientFrame<T> coeffs_from_moments(const DiscreteMeasure<T>& measure, const TodaParams<T>& par,
                                        int N) {
  const int M = measure.count();
  if (N < 1) throw IndexRangeError("coeffs_from_moments: N < 1");
  if (N > M)
    throw IndexRangeError("coeffs_from_moments: N exceeds the node count (moment systems degenerate)");

  std::vector<T> mom;  // mu_{-N-1} .. mu_{N}, offset N+1
  const int lo = -N - 1;
  for (int m = lo; m <= N; ++m) mom.push_back(moment(measure, par, m));
  auto mu_at = [&](int m) { return mom[static_cast<size_t>(m - lo)]; };

  CoefficientFrame<T> f;
  f.N = N;
  f.c.assign(static_cast<size_t>(N) + 1, T(0));
  f.lambda.assign(static_cast<size_t>(N) + 1, T(0));
  f.a_coeffs.resize(static_cast<size_t>(N) + 1);
  f.sigma_lo.resize(static_cast<size_t>(N) + 1);
  f.sigma_hi.resize(static_cast<size_t>(N) + 1);
  f.c[0] = T(1);
  f.lambda[0] = T(-1);
  if (N >= 1) f.lambda[1] = T(0);

  f.a_coeffs[0] = {T(1)};
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<T>> sys(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
    std::vector<T> rhs(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
      for (int j = 0; j < n; ++j) sys[static_cast<size_t>(s)][static_cast<size_t>(j)] = mu_at(j - n + s);
      rhs[static_cast<size_t>(s)] = T(0) - mu_at(s);
    }
    auto sol = solve_linear(std::move(sys), std::move(rhs));
    sol.push_back(T(1));  // monic
    f.a_coeffs[static_cast<size_t>(n)] = std::move(sol);
  }

  for (int n = 1; n <= N; ++n) {
    const auto& an = f.a_coeffs[static_cast<size_t>(n)];
    const auto& prev = f.a_coeffs[static_cast<size_t>(n) - 1];
    if (prev[0] == T(0)) throw SingularSystemError("a_{n,0} vanished; c_n undefined");
    f.c[static_cast<size_t>(n)] = T(0) - an[0] / prev[0];
    if (n >= 2) {
      f.lambda[static_cast<size_t>(n)] =
          prev[static_cast<size_t>(n) - 2] - an[static_cast<size_t>(n) - 1] - f.c[static_cast<size_t>(n)];
    }
  }

  for (int n = 0; n <= N; ++n) {
    const auto& an = f.a_coeffs[static_cast<size_t>(n)];
    T lo_sum(0), hi_sum(0);
    for (int j = 0; j <= n; ++j) {
      lo_sum = lo_sum + an[static_cast<size_t>(j)] * mu_at(j - n - 1);
      hi_sum = hi_sum + an[static_cast<size_t>(j)] * mu_at(j);
    }
    f.sigma_lo[static_cast<size_t>(n)] = lo_sum;
    f.sigma_hi[static_cast<size_t>(n)] = hi_sum;
  }
  f.closed_top = (N == M);
  return f;
}

// Differentiable single-level schedule: the hatted coefficients carry
// c_{k+1} - mu(t) and nu(t) * lambda_{k+1}.
template <class T>
struct PerturbationSchedule {
  int k = 0;
  std::function<T(const T&)> mu, nu, mu_dot, nu_dot;

  static PerturbationSchedule constants(int level, const T& mu_c, const T& nu_c) {
    if (!(nu_c > T(0))) throw DomainError("schedule requires nu > 0");
    return PerturbationSchedule{level, [mu_c](const T&) { return mu_c; }, [nu_c](const T&) { return nu_c; },
                                [](const T&) { return T(0); }, [](const T&) { return T(0); }};
  }
};

namespace detail {

template <class T>
T checked_div(const T& num, const T& den, const char* what) {
  if (den == T(0)) throw DivisionByZeroError(std::string("toda rhs: ") + what + " vanished");
  return num / den;
}

}  // namespace detail

// Right-hand sides of the extended relativistic Toda equations, with the
// single-level schedule folded in.  A schedule at level k modifies the
// c-equations at n = k, k+1, k+2 and the lambda-equations at n = k+1, k+2;
// every other level keeps the unperturbed form.  With mu = 0, nu = 1 and
// zero derivatives each special case reduces algebraically to the generic
// one.
template <class T>
std::pair<T, T> toda_rhs(const CoefficientFrame<T>& f, const TodaParams<T>& par,
                         const PerturbationSchedule<T>* sched, int n) {
  if (n < 1) throw IndexRangeError("toda_rhs: n >= 1 required");
  const T p = par.p;
  const T q = par.q;

  T mu(0), nu(1), mu_dot(0), nu_dot(0);
  int k = -100;  // sentinel far below any valid level
  if (sched) {
    k = sched->k;
    mu = sched->mu(par.t);
    nu = sched->nu(par.t);
    mu_dot = sched->mu_dot(par.t);
    nu_dot = sched->nu_dot(par.t);
    if (!(nu > T(0))) throw DomainError("schedule requires nu(t) > 0");
  }

  auto lam = [&](int j) -> T { return f.lambda_at(j); };
  auto cc = [&](int j) -> T { return f.c_at(j); };
  // q-terms are guarded twice: skipped entirely when q = 0, and a vanishing
  // lambda numerator never consults its denominator (the lambda_{N+1} = 0
  // closure relies on the latter).
  auto q_ratio = [&](const T& num, auto den_fn) -> T {
    if (q == T(0) || num == T(0)) return T(0);
    const T den(den_fn());
    return detail::checked_div(num, den, "c product");
  };
  auto q_inv_diff = [&](auto den1_fn, auto den2_fn) -> T {
    if (q == T(0)) return T(0);
    const T den1(den1_fn()), den2(den2_fn());
    return detail::checked_div(T(1), den1, "c value") -
           detail::checked_div(T(1), den2, "c value");
  };

  T cdot;
  if (n == k) {
    const T hat_c = cc(k + 1) - mu;
    cdot = cc(k) * (p * (lam(k) - nu * lam(k + 1)) +
                    q * (q_ratio(nu * lam(k + 1), [&] { return hat_c * cc(k); }) -
                         q_ratio(lam(k), [&] { return cc(k) * cc(k - 1); })));
  } else if (n == k + 1) {
    const T hat_c = cc(k + 1) - mu;
    cdot = mu_dot + p * hat_c * (nu * lam(k + 1) - lam(k + 2)) +
           q * (q_ratio(lam(k + 2), [&] { return cc(k + 2); }) -
                q_ratio(nu * lam(k + 1), [&] { return cc(k); }));
  } else if (n == k + 2) {
    const T hat_c = cc(k + 1) - mu;
    cdot = cc(k + 2) * (p * (lam(k + 2) - lam(k + 3)) +
                        q * (q_ratio(lam(k + 3), [&] { return cc(k + 2) * cc(k + 3); }) -
                             q_ratio(lam(k + 2), [&] { return hat_c * cc(k + 2); })));
  } else {
    cdot = cc(n) * (p * (lam(n) - lam(n + 1)) +
                    q * (q_ratio(lam(n + 1), [&] { return cc(n + 1) * cc(n); }) -
                         q_ratio(lam(n), [&] { return cc(n) * cc(n - 1); })));
  }

  T ldot;
  if (n == k + 1) {
    // Unlike its displayed form, the bracket carries no (nu-1) lambda_{k+1}
    // term: the finite-difference oracle on reparametrized moment flows
    // rejects it and confirms this version.
    const T hat_c = cc(k + 1) - mu;
    const T bracket = p * (lam(k + 2) + hat_c - cc(k) - lam(k)) +
                      q * q_inv_diff([&] { return hat_c; }, [&] { return cc(k); });
    ldot = lam(k + 1) * (T(0) - detail::checked_div(nu_dot, nu, "nu") - bracket);
  } else if (n == k + 2) {
    const T hat_c = cc(k + 1) - mu;
    const T bracket = p * (lam(k + 3) + cc(k + 2) - hat_c - nu * lam(k + 1)) +
                      q * q_inv_diff([&] { return cc(k + 2); }, [&] { return hat_c; });
    ldot = lam(k + 2) * (T(0) - bracket);
  } else if (lam(n) == T(0)) {
    ldot = T(0);
  } else {
    ldot = lam(n) * (p * (lam(n - 1) + cc(n - 1) - lam(n + 1) - cc(n)) +
                     q * q_inv_diff([&] { return cc(n - 1); }, [&] { return cc(n); }));
  }
  return {cdot, ldot};
}

struct FlowCheck {
  char var;  // 'c' or 'l'
  int n;
  double fd;
  double rhs;
  double residual;
};

struct FlowReport {
  std::vector<FlowCheck> checks;
  double max_residual = 0;
};

// Central-difference verification of the flow equations along trajectories
// recovered from the moment functional.  With a schedule, the hatted
// trajectory comes from the moments and the unhatted variables are defined
// by c_{k+1} = chat_{k+1} + mu(t), lambda_{k+1} = lambdahat_{k+1} / nu(t);
// the perturbed equations must then hold for the unhatted variables.
inline FlowReport verify_flow(const DiscreteMeasure<double>& measure, const TodaParams<double>& par,
                              const PerturbationSchedule<double>* sched, double t0, double h, int N) {
  if (sched && sched->k + 2 > N) throw IndexRangeError("verify_flow: schedule level too close to N");
  auto frame_at = [&](double t) {
    TodaParams<double> pt{par.p, par.q, t};
    auto f = coeffs_from_moments(measure, pt, N + 1);
    if (sched) {
      const int k1 = sched->k + 1;
      f.c[static_cast<size_t>(k1)] += sched->mu(t);
      f.lambda[static_cast<size_t>(k1)] /= sched->nu(t);
    }
    return f;
  };
  const auto fm = frame_at(t0 - h);
  const auto f0 = frame_at(t0);
  const auto fp = frame_at(t0 + h);
  TodaParams<double> pt0{par.p, par.q, t0};

  FlowReport rep;
  for (int n = 1; n <= N; ++n) {
    const auto [cdot, ldot] = toda_rhs(f0, pt0, sched, n);
    const double fd_c = (fp.c[static_cast<size_t>(n)] - fm.c[static_cast<size_t>(n)]) / (2 * h);
    rep.checks.push_back({'c', n, fd_c, cdot, std::fabs(fd_c - cdot)});
    if (n >= 2) {
      const double fd_l = (fp.lambda[static_cast<size_t>(n)] - fm.lambda[static_cast<size_t>(n)]) / (2 * h);
      rep.checks.push_back({'l', n, fd_l, ldot, std::fabs(fd_l - ldot)});
    }
  }
  for (const auto& c : rep.checks) rep.max_residual = std::max(rep.max_residual, c.residual);
  return rep;
}

// Classical one-step 4th-order integration of the (c, lambda) system from
// the initial frame; the state is (c_1..c_N, lambda_2..lambda_N) and the
// frame's closed_top flag supplies the lambda_{N+1} = 0 boundary.
inline std::vector<CoefficientFrame<double>> integrate_flow(const CoefficientFrame<double>& start,
                                                            const TodaParams<double>& par,
                                                            const PerturbationSchedule<double>* sched,
                                                            double T_end, int steps) {
  if (steps < 1) throw IndexRangeError("integrate_flow: steps >= 1 required");
  const int N = start.N;
  const size_t dim = static_cast<size_t>(2 * N - 1);

  auto pack = [N](const CoefficientFrame<double>& f) {
    std::vector<double> y(static_cast<size_t>(2 * N - 1));
    for (int n = 1; n <= N; ++n) y[static_cast<size_t>(n - 1)] = f.c[static_cast<size_t>(n)];
    for (int n = 2; n <= N; ++n) y[static_cast<size_t>(N + n - 2)] = f.lambda[static_cast<size_t>(n)];
    return y;
  };
  auto unpack = [N, &start](const std::vector<double>& y) {
    CoefficientFrame<double> f;
    f.N = N;
    f.closed_top = start.closed_top;
    f.c.assign(static_cast<size_t>(N) + 1, 0.0);
    f.lambda.assign(static_cast<size_t>(N) + 1, 0.0);
    f.c[0] = 1.0;
    f.lambda[0] = -1.0;
    for (int n = 1; n <= N; ++n) f.c[static_cast<size_t>(n)] = y[static_cast<size_t>(n - 1)];
    for (int n = 2; n <= N; ++n) f.lambda[static_cast<size_t>(n)] = y[static_cast<size_t>(N + n - 2)];
    return f;
  };

  auto deriv = [&](const std::vector<double>& y, double t) {
    const auto f = unpack(y);
    for (int n = 1; n <= N; ++n) {
      if (std::fabs(f.c[static_cast<size_t>(n)]) < 1e-12)
        throw BlowUpError("consulted denominator below 1e-12 at c_" + std::to_string(n));
    }
    TodaParams<double> pt{par.p, par.q, t};
    if (sched) {
      const double hat_c = f.c[static_cast<size_t>(sched->k + 1)] - sched->mu(t);
      if (std::fabs(hat_c) < 1e-12) throw BlowUpError("consulted denominator below 1e-12 at c-mu");
    }
    std::vector<double> dy(dim);
    for (int n = 1; n <= N; ++n) {
      const auto [cdot, ldot] = toda_rhs(f, pt, sched, n);
      dy[static_cast<size_t>(n - 1)] = cdot;
      if (n >= 2) dy[static_cast<size_t>(N + n - 2)] = ldot;
    }
    return dy;
  };

  std::vector<CoefficientFrame<double>> traj;
  traj.reserve(static_cast<size_t>(steps) + 1);
  traj.push_back(start);

  std::vector<double> y = pack(start);
  const double h = T_end / steps;
  double t = par.t;
  auto axpy = [dim](const std::vector<double>& base, double s, const std::vector<double>& d) {
    std::vector<double> out(dim);
    for (size_t i = 0; i < dim; ++i) out[i] = base[i] + s * d[i];
    return out;
  };
  for (int step = 0; step < steps; ++step) {
    const auto k1 = deriv(y, t);
    const auto k2 = deriv(axpy(y, h / 2, k1), t + h / 2);
    const auto k3 = deriv(axpy(y, h / 2, k2), t + h / 2);
    const auto k4 = deriv(axpy(y, h, k3), t + h);
    for (size_t i = 0; i < dim; ++i) y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    t += h;
    for (double v : y)
      if (std::fabs(v) > 1e12) throw BlowUpError("state exceeded 1e12 during integration");
    traj.push_back(unpack(y));
  }
  return traj;
}

}  // namespace ricopoly
