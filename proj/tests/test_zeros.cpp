#include <doctest.h>

#include <cmath>

#include "ricopoly/zeros.hpp"

using namespace ricopoly;
using R = Rational;
using PolyR = Polynomial<R>;

TEST_CASE("quadratic and linear zeros") {
  const Polynomial<double> quad(std::vector<double>{0.75, -2.25, 1.0});
  const auto zs = real_zeros(quad);
  REQUIRE(zs.zeros.size() == 2);
  const double root = std::sqrt(33.0);
  CHECK(zs.zeros[0] == doctest::Approx((9 - root) / 8).epsilon(1e-12));
  CHECK(zs.zeros[1] == doctest::Approx((9 + root) / 8).epsilon(1e-12));
  CHECK(zs.residuals[0] <= 1e-10);

  const auto lin = real_zeros(Polynomial<double>(std::vector<double>{-1.0, 1.0}));
  REQUIRE(lin.zeros.size() == 1);
  CHECK(lin.zeros[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(real_zeros(Polynomial<double>(std::vector<double>{3.0})), DomainError);
}

TEST_CASE("complex pairs are not reported as real zeros") {
  // (z^2 + 1)(z - 2)
  const Polynomial<double> p(std::vector<double>{-2.0, 1.0, -2.0, 1.0});
  const auto zs = real_zeros(p);
  REQUIRE(zs.zeros.size() == 1);
  CHECK(zs.zeros[0] == doctest::Approx(2.0));
}

TEST_CASE("repeated zeros are detected and rejected") {
  // (z - 1)^2
  const Polynomial<double> p(std::vector<double>{1.0, -2.0, 1.0});
  CHECK_THROWS_AS(real_zeros(p), NonconvergenceError);
}

TEST_CASE("published degree-6 zeros") {
  const auto seqs = CoefficientSequences<R>::ljacobi(R(11), R(12));
  const auto fam = generate_family(seqs, 6);
  const auto zs = real_zeros(fam[6]);
  const double golden[] = {1.049267646, 1.179086731, 1.432298501,
                           1.918525281, 2.955569922, 5.865251919};
  REQUIRE(zs.zeros.size() == 6);
  for (int j = 0; j < 6; ++j) CHECK(std::fabs(zs.zeros[j] - golden[j]) <= 1e-8);
}

TEST_CASE("hypergeometric representation") {
  const R a(11), c(12);
  CHECK(hypergeometric_ljacobi(a, c, 0, R(7)) == R(1));
  // degree 1 collapses to x - c/(a-1) = x - c_0
  const auto seqs = ljacobi_seqs(a, c);
  for (const R x : {R(0), R(2), R(-5, 3)}) {
    CHECK(hypergeometric_ljacobi(a, c, 1, x) == x - seqs.c(0));
  }
  // recurrence and terminating series agree exactly through degree 8
  const auto fam = generate_family(seqs, 8);
  const R points[] = {R(2), R(-1, 2), R(7, 3), R(0), R(22, 7)};
  for (int n = 0; n <= 8; ++n) {
    for (const R& x : points) {
      CHECK(fam[static_cast<size_t>(n)].value_at(x) == hypergeometric_ljacobi(a, c, n, x));
    }
  }
  CHECK_THROWS_AS(hypergeometric_ljacobi(R(3), R(12), 5, R(1)), PoleError);
}

TEST_CASE("interlacing classification") {
  SUBCASE("identical sets are all common") {
    ZeroSet a{{1.0, 2.0, 3.0}, {0, 0, 0}};
    const auto rep = interlacing_report(a, a);
    CHECK(rep.common.size() == 3);
    CHECK(rep.pattern == InterlacingPattern::none);
  }
  SUBCASE("strict alternation starting from either side") {
    ZeroSet a{{1.0, 3.0, 5.0}, {0, 0, 0}};
    ZeroSet b{{2.0, 4.0, 6.0}, {0, 0, 0}};
    CHECK(interlacing_report(a, b).pattern == InterlacingPattern::a_starts);
    CHECK(interlacing_report(b, a).pattern == InterlacingPattern::b_starts);
  }
  SUBCASE("adjacent same-source zeros violate") {
    ZeroSet a{{1.0, 2.0, 5.0}, {0, 0, 0}};
    ZeroSet b{{3.0, 4.0, 6.0}, {0, 0, 0}};
    CHECK(interlacing_report(a, b).pattern == InterlacingPattern::violated);
  }
  SUBCASE("common zeros are excluded from the alternation check") {
    ZeroSet a{{1.0, 2.0, 5.0}, {0, 0, 0}};
    ZeroSet b{{2.0 + 1e-9, 3.0, 6.0}, {0, 0, 0}};
    const auto rep = interlacing_report(a, b);
    REQUIRE(rep.common.size() == 1);
    CHECK(rep.pattern == InterlacingPattern::a_starts);
    CHECK(rep.details.size() == 6);
  }
}

TEST_CASE("positivity-subclass zero structure through degree 10") {
  std::vector<CoefficientSequences<R>> fams = {
      CoefficientSequences<R>::ljacobi(R(11), R(12)),
      CoefficientSequences<R>::ljacobi(R(-12), R(-10)),
      CoefficientSequences<R>(
          [](int) { return R(1); }, [](int) -> R { return R(1, 4); }, [](int) { return R(0); },
          kUnboundedIndex, "const-positive"),
  };
  for (const auto& seqs : fams) {
    REQUIRE(seqs.positive_L(10));
    const auto fam = generate_family(seqs, 10);
    std::vector<ZeroSet> all;
    for (int n = 1; n <= 10; ++n) {
      const auto zs = real_zeros(fam[static_cast<size_t>(n)]);
      REQUIRE(zs.zeros.size() == static_cast<size_t>(n));  // real and simple
      for (double x : zs.zeros) CHECK(x > 0);
      const double scale = 1.0;  // residual bound is relative to the coefficient norm
      for (size_t j = 0; j < zs.residuals.size(); ++j)
        CHECK(zs.residuals[j] <= 1e-10 * std::max(scale, max_abs_coeff(to_double_poly(fam[static_cast<size_t>(n)])) * (n + 1)));
      all.push_back(zs);
    }
    // consecutive families strictly interlace, higher degree starting
    for (int n = 1; n <= 9; ++n) {
      const auto& lo = all[static_cast<size_t>(n) - 1].zeros;
      const auto& hi = all[static_cast<size_t>(n)].zeros;
      for (int j = 0; j < n; ++j) {
        CHECK(hi[static_cast<size_t>(j)] < lo[static_cast<size_t>(j)]);
        CHECK(lo[static_cast<size_t>(j)] < hi[static_cast<size_t>(j) + 1]);
      }
    }
  }
}

TEST_CASE("co-recursive casoratti witness vanishes exactly") {
  const auto lj = CoefficientSequences<R>::ljacobi(R(11), R(12));
  CHECK(sign_witness_corecursive(lj, Perturbation<R>(4, R(-2), R(1)), 5) == R(0));
  CHECK(sign_witness_corecursive(lj, Perturbation<R>(4, R(0), R(1)), 5) == R(0));

  const CoefficientSequences<R> pos([](int) { return R(1); }, [](int) -> R { return R(1, 4); },
                                    [](int) { return R(0); }, kUnboundedIndex, "const-positive");
  CHECK(sign_witness_corecursive(pos, Perturbation<R>(2, R(1), R(1)), 3) == R(0));
  for (int n = 2; n <= 8; ++n)
    CHECK(sign_witness_corecursive(pos, Perturbation<R>(2, R(-3, 7), R(1)), n) == R(0));

  CHECK_THROWS_AS(sign_witness_corecursive(pos, Perturbation<R>(2, R(0), R(2)), 4), DomainError);
  CHECK_THROWS_AS(sign_witness_corecursive(pos, Perturbation<R>(3, R(1), R(1)), 2), IndexRangeError);
}

TEST_CASE("double-shift monotonicity published columns") {
  SUBCASE("positive shifts move zeros up") {
    const auto seqs = CoefficientSequences<R>::ljacobi(R(-12), R(-10));
    const std::vector<std::pair<R, R>> pairs = {{R(3, 10), R(2, 5)}, {R(1, 2), R(3, 5)}};
    const auto scan = monotonicity_scan(seqs, 3, pairs, 5);
    CHECK(scan.strictly_monotone);
    REQUIRE(scan.columns.size() == 2);
    const double golden[] = {0.2999926673, 0.5211303622, 0.7066042795, 0.8409538337, 1.217550273};
    REQUIRE(scan.columns[0].zeros.size() == 5);
    for (int j = 0; j < 5; ++j) CHECK(std::fabs(scan.columns[0].zeros[j] - golden[j]) <= 1e-8);
  }
  SUBCASE("negative shifts move zeros down") {
    const auto seqs = CoefficientSequences<R>::ljacobi(R(11), R(12));
    const std::vector<std::pair<R, R>> pairs = {{R(-1, 5), R(-1, 4)}, {R(-7, 10), R(-4, 5)}};
    const auto scan = monotonicity_scan(seqs, 3, pairs, 6);
    CHECK(scan.strictly_monotone);
    REQUIRE(scan.columns[0].zeros.size() == 6);
    CHECK(std::fabs(scan.columns[0].zeros[0] - 1.007621277) <= 1e-8);
  }
  SUBCASE("zero pair reproduces the unperturbed zeros") {
    const auto seqs = CoefficientSequences<R>::ljacobi(R(11), R(12));
    const std::vector<std::pair<R, R>> pairs = {{R(0), R(0)}};
    const auto scan = monotonicity_scan(seqs, 3, pairs, 6);
    REQUIRE(scan.columns.size() == 1);
    CHECK(std::fabs(scan.columns[0].zeros[5] - 5.865251919) <= 1e-8);
  }
  SUBCASE("mixed signs are rejected") {
    const auto seqs = CoefficientSequences<R>::ljacobi(R(11), R(12));
    const std::vector<std::pair<R, R>> pairs = {{R(1, 5), R(-1, 4)}};
    CHECK_THROWS_AS(monotonicity_scan(seqs, 3, pairs, 6), DomainError);
  }
}

TEST_CASE("common zeros of perturbed and unperturbed land on S_k") {
  // a shared zero of P_n and P_n(.;mu_k) must be a zero of S_k; for the
  // co-recursive kind even of P_k itself
  const auto lj = CoefficientSequences<double>::ljacobi(11.0, 12.0);
  const auto pert = Perturbation<double>(4, -2.0, 1.0);
  const auto fam = generate_family(lj, 6);
  const auto pfam = perturbed_family_direct(lj, pert, 6);
  const auto zs = real_zeros(fam[6]);
  const auto pzs = real_zeros(pfam[6]);
  const auto rep = interlacing_report(pzs, zs);
  const auto [sk, shat] = s_polynomials(lj, pert);
  for (const auto& [xa, xb] : rep.common) {
    CHECK(std::fabs(sk.value_at(xa)) <= 1e-6 * std::max(1.0, max_abs_coeff(sk)));
  }
  // the published pair shares no zeros
  CHECK(rep.common.empty());
}
