#include "ricopoly/zeros.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace ricopoly {

namespace {

double l1_norm(const Polynomial<double>& p) {
  double s = 0;
  for (double c : p.coeffs()) s += std::fabs(c);
  return s;
}

// Compensated Horner evaluation (error-free transformations); keeps the
// value accurate to ~eps * |p(x)| even when the naive accumulation noise
// eps * sum |c_j||x|^j would swamp a residual near a large zero.
double comp_horner(const Polynomial<double>& p, double x) {
  const int d = p.degree();
  double s = p.coeff(d);
  double comp = 0;
  for (int j = d - 1; j >= 0; --j) {
    const double prod = s * x;
    const double e1 = std::fma(s, x, -prod);
    const double sum = prod + p.coeff(j);
    const double z = sum - prod;
    const double e2 = (prod - (sum - z)) + (p.coeff(j) - z);
    s = sum;
    comp = comp * x + (e1 + e2);
  }
  return s + comp;
}

// Parlett/Reinsch-style balancing restricted to powers of two, so the
// eigenvalues are unchanged by the scaling itself.
void balance(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  bool again = true;
  int sweeps = 0;
  while (again && sweeps++ < 50) {
    again = false;
    for (int i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        r += std::fabs(m(i, j));
        c += std::fabs(m(j, i));
      }
      if (r == 0 || c == 0) continue;
      double f = 1;
      while (c < r / 2) {
        c *= 2;
        r /= 2;
        f *= 2;
      }
      while (c > r * 2) {
        c /= 2;
        r *= 2;
        f /= 2;
      }
      if (f != 1) {
        again = true;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

ZeroSet real_zeros(const Polynomial<double>& p, double tol) {
  const int d = p.degree();
  if (d < 1) throw DomainError("real_zeros: polynomial must be nonconstant");
  const double lead = p.coeff(d);
  if (lead == 0) throw DomainError("real_zeros: zero leading coefficient");

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i) / lead;
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NonconvergenceError("eigenvalue iteration failed");

  const double scale = std::max(1.0, l1_norm(p));
  const double bound = tol * scale;
  const Polynomial<double> dp = p.derivative();

  std::vector<double> accepted;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> ev = solver.eigenvalues()[i];
    const double mag = std::max(1.0, std::abs(ev));
    if (std::fabs(ev.imag()) > 1e-6 * mag) continue;  // decisively complex
    double x = ev.real();
    for (int it = 0; it < 20; ++it) {
      const double f = comp_horner(p, x);
      if (std::fabs(f) <= bound) break;
      const double g = dp.value_at(x);
      if (g == 0) break;
      const double step = f / g;
      x -= step;
      if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
    }
    if (std::fabs(comp_horner(p, x)) <= bound) {
      accepted.push_back(x);
    } else if (std::fabs(ev.imag()) <= 1e-12 * mag) {
      // the eigenvalue was decisively real yet polishing cannot reach the
      // residual bound
      throw NonconvergenceError("zero at ~" + double_string(x) + " failed the residual bound");
    }
  }

  std::sort(accepted.begin(), accepted.end());
  // Conjugate pairs with tiny imaginary parts polish to the same point;
  // keep one representative.
  std::vector<double> unique;
  for (double x : accepted) {
    if (unique.empty() || std::fabs(x - unique.back()) > 1e-12 * std::max(1.0, std::fabs(x)))
      unique.push_back(x);
  }
  // Simplicity check: a repeated zero makes P' vanish as well.
  const double dscale = std::max(1.0, l1_norm(dp));
  for (double x : unique) {
    if (std::fabs(dp.value_at(x)) <= 1e-8 * dscale)
      throw NonconvergenceError("multiple zero detected at ~" + double_string(x));
  }

  ZeroSet out;
  out.zeros = std::move(unique);
  out.residuals.reserve(out.zeros.size());
  for (double x : out.zeros) out.residuals.push_back(std::fabs(comp_horner(p, x)));
  return out;
}

std::string pattern_string(InterlacingPattern p) {
  switch (p) {
    case InterlacingPattern::a_starts: return "A-starts";
    case InterlacingPattern::b_starts: return "B-starts";
    case InterlacingPattern::violated: return "violated";
    case InterlacingPattern::none: return "none";
  }
  return "none";
}

InterlacingReport interlacing_report(const ZeroSet& a, const ZeroSet& b, double tol) {
  InterlacingReport rep;
  const size_t na = a.zeros.size(), nb = b.zeros.size();
  std::vector<bool> a_common(na, false), b_common(nb, false);

  // Greedy two-pointer matching over the sorted lists.
  size_t i = 0, j = 0;
  while (i < na && j < nb) {
    const double xa = a.zeros[i], xb = b.zeros[j];
    if (std::fabs(xa - xb) <= tol * std::max(1.0, std::fabs(xa))) {
      rep.common.emplace_back(xa, xb);
      a_common[i] = b_common[j] = true;
      ++i;
      ++j;
    } else if (xa < xb) {
      ++i;
    } else {
      ++j;
    }
  }

  std::vector<InterlacingReport::Entry> merged;
  for (size_t t = 0; t < na; ++t) merged.push_back({a.zeros[t], 'A', a_common[t]});
  for (size_t t = 0; t < nb; ++t) merged.push_back({b.zeros[t], 'B', b_common[t]});
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.x < y.x; });
  rep.details = merged;

  std::vector<char> tags;
  for (const auto& e : merged)
    if (!e.common) tags.push_back(e.tag);

  if (tags.empty()) {
    rep.pattern = InterlacingPattern::none;
    return rep;
  }
  bool alternates = true;
  for (size_t t = 1; t < tags.size(); ++t)
    if (tags[t] == tags[t - 1]) alternates = false;
  if (!alternates)
    rep.pattern = InterlacingPattern::violated;
  else
    rep.pattern = tags.front() == 'A' ? InterlacingPattern::a_starts : InterlacingPattern::b_starts;
  return rep;
}

}  // namespace ricopoly
