#include <doctest.h>

#include <cmath>

#include "ricopoly/stieltjes.hpp"

using namespace ricopoly;
using R = Rational;
using PolyR = Polynomial<R>;

TEST_CASE("convergents by hand") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto cf = ri_fraction(seqs);
  CHECK(convergent(cf, R(2), 1) == R(1));       // 1/(2-1)
  CHECK(convergent(cf, R(2), 2) == R(4));       // Q_2(2)/P_2(2) = 1/(1/4)
  // the three-term identity at depth 2: (z-c_1) / ((z-c_1)(z-c_0) - lambda_1 (z-a_1))
  const R z(2);
  CHECK(convergent(cf, z, 2) == (z - 1) / ((z - 1) * (z - 1) - R(1, 4) * (z + 1)));
  CHECK_THROWS_AS(convergent(cf, R(2), 0), IndexRangeError);
}

TEST_CASE("tail fraction indexing") {
  const auto seqs = CoefficientSequences<R>::ljacobi(R(-12), R(-10));
  for (int k = 0; k <= 3; ++k) {
    const auto tail = tail_fraction(seqs, k);
    const R z(6);
    CHECK(convergent(tail, z, 1) == R(1) / (z - seqs.c(k + 1)));
    // the tail is the full fraction of the shift-(k+1) associated family
    const auto assoc_p = generate_family(seqs, 5, k + 1);
    const auto assoc_q = generate_family(seqs, 4, k + 2);
    for (int m = 1; m <= 4; ++m) {
      CHECK(convergent(tail, z, m) == assoc_q[static_cast<size_t>(m) - 1].value_at(z) /
                                          assoc_p[static_cast<size_t>(m)].value_at(z));
    }
  }
}

TEST_CASE("perturbed fraction carries the shifted partial denominator") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto pert = Perturbation<R>(2, R(1, 3), R(1));
  const auto pcf = ri_fraction(apply_perturbation(seqs, pert));
  // depth-(k+1) partial denominator is z - c_k - mu_k
  CHECK(pcf.beta(2).value_at(R(0)) == R(-4, 3));
  CHECK(pcf.beta(1).value_at(R(0)) == R(-1));
}

TEST_CASE("homography validation and application") {
  const PolyR one = PolyR::one();
  CHECK_THROWS_AS(Homography<R>(Mat2<R>{one, one, one, one}), DegenerateHomographyError);
  Homography<R> h(Mat2<R>{one, PolyR::zero(), PolyR::zero(), one});
  CHECK(h.apply(R(7), R(3)) == R(7));
}

TEST_CASE("tail homography at level 0 composes the head of the fraction") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto h = homography_from_tail(seqs, Perturbation<R>(0, R(0), R(1)));
  CHECK(h.A().is_zero());
  CHECK(h.B() == -PolyR::one());
  // C = lambda_1 (z - a_1), D = -P_1
  CHECK(h.C() == R(1, 4) * PolyR(std::vector<R>{R(1), R(1)}));
  CHECK(h.D() == PolyR(std::vector<R>{R(1), R(-1)}));
  // applying to u reproduces 1/(z - c_0 - lambda_1 (z - a_1) u)
  const R z(9, 2), u(1, 3);
  CHECK(h.apply(u, z) == R(1) / (z - 1 - R(1, 4) * (z + 1) * u));
}

TEST_CASE("finite-truncation law through the tail") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto pert = Perturbation<R>(1, R(1, 2), R(1));
  const auto h = homography_from_tail(seqs, pert);
  const auto tail = tail_fraction(seqs, 1);
  const auto pcf = ri_fraction(apply_perturbation(seqs, pert));
  const R z(7, 2);
  for (int m = 1; m <= 8; ++m) {
    CHECK(convergent(pcf, z, 1 + 1 + m) == h.apply(convergent(tail, z, m), z));
  }
}

TEST_CASE("full-function law at matched truncation") {
  const auto seqs = CoefficientSequences<R>::ljacobi(R(-12), R(-10));
  for (const auto& pert :
       {Perturbation<R>(2, R(1, 2), R(1)), Perturbation<R>(2, R(0), R(3)), Perturbation<R>(3, R(-1), R(2))}) {
    const auto h = homography_from_full(seqs, pert);
    const auto full = ri_fraction(seqs);
    const auto pcf = ri_fraction(apply_perturbation(seqs, pert));
    for (const R z : {R(5), R(8), R(-6)}) {
      for (int depth = pert.k + 1; depth <= 12; ++depth) {
        CHECK(convergent(pcf, z, depth) == h.apply(convergent(full, z, depth), z));
      }
    }
  }
}

TEST_CASE("co-recursive and co-dilated specializations of the full map") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto P = generate_family(seqs, 3);
  const auto Q = generate_second_kind(seqs, 3);

  SUBCASE("co-recursive: off-diagonal entries collapse to mu Q_k^2 and -mu P_k^2") {
    const int k = 2;
    const R mu(1, 2);
    const auto h = homography_from_full(seqs, Perturbation<R>(k, mu, R(1)));
    const auto prod = lambda_prefix_product(seqs, k);
    CHECK(h.A() == prod - mu * (Q[k] * P[k]));
    CHECK(h.B() == mu * (Q[k] * Q[k]));
    CHECK(h.C() == -(mu * (P[k] * P[k])));
    CHECK(h.D() == prod + mu * (P[k] * Q[k]));
  }

  SUBCASE("co-dilated: correction terms carry (nu-1) lambda_k (z-a_k)") {
    const int k = 2;
    const R nu(3);
    const auto h = homography_from_full(seqs, Perturbation<R>(k, R(0), nu));
    const auto prod = lambda_prefix_product(seqs, k);
    const PolyR w = (nu - 1) * seqs.lambda(k) * PolyR::linear(seqs.a(k));
    CHECK(h.A() == prod - w * (Q[k - 1] * P[k]));
    CHECK(h.B() == w * (Q[k - 1] * Q[k]));
    CHECK(h.C() == -(w * (P[k - 1] * P[k])));
    CHECK(h.D() == prod + w * (P[k - 1] * Q[k]));
  }
}

TEST_CASE("tail recovered from the full function at matched depths") {
  const auto seqs = CoefficientSequences<R>::eta(R(1), R(0));
  const int k = 2;
  const auto full = ri_fraction(seqs);
  const auto tail = tail_fraction(seqs, k);
  const auto P = generate_family(seqs, k + 1);
  const auto Q = generate_second_kind(seqs, k + 1);
  for (const R z : {R(5), R(-7)}) {
    const R w = seqs.lambda(k + 1) * (z - seqs.a(k + 1));
    for (int m = 1; m <= 8; ++m) {
      const R u = convergent(full, z, k + 1 + m);
      const R lhs = w * convergent(tail, z, m);
      const R rhs = (P[static_cast<size_t>(k) + 1].value_at(z) * u -
                     Q[static_cast<size_t>(k) + 1].value_at(z)) /
                    (P[static_cast<size_t>(k)].value_at(z) * u - Q[static_cast<size_t>(k)].value_at(z));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cofactor of M_k is the full-function map") {
  const auto lj = CoefficientSequences<R>::ljacobi(R(11), R(12));
  const auto seqs = CoefficientSequences<R>::example1();
  CHECK(proportional(cofactor_transform(lj, Perturbation<R>(3, R(1, 2), R(1))).mat(),
                     homography_from_full(lj, Perturbation<R>(3, R(1, 2), R(1))).mat()));
  CHECK(proportional(cofactor_transform(seqs, Perturbation<R>(2, R(0), R(3))).mat(),
                     homography_from_full(seqs, Perturbation<R>(2, R(0), R(3))).mat()));
  // identity perturbation: proportional to the identity map
  const auto id = cofactor_transform(seqs, Perturbation<R>(2, R(0), R(1)));
  CHECK(proportional(id.mat(), Mat2<R>::identity()));
}

TEST_CASE("homography composition consistency") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto pert = Perturbation<R>(2, R(1, 3), R(2));
  const int k = pert.k;
  const auto P = generate_family(seqs, k + 1);
  const auto Q = generate_second_kind(seqs, k + 1);
  const PolyR w = seqs.lambda(k + 1) * PolyR::linear(seqs.a(k + 1));
  const Mat2<R> cross{P[static_cast<size_t>(k) + 1], -Q[static_cast<size_t>(k) + 1],
                      w * P[static_cast<size_t>(k)], -(w * Q[static_cast<size_t>(k)])};
  const auto composed = homography_from_tail(seqs, pert).mat() * cross;
  CHECK(proportional(composed, homography_from_full(seqs, pert).mat()));
}

TEST_CASE("leading large-z behavior of the truncated function") {
  const auto seqs = CoefficientSequences<double>::example1();
  const auto cf = ri_fraction(seqs);
  double prev = 0;
  for (const double z : {1e3, 1e4, 1e5}) {
    const double r = convergent(cf, z, 10) * z - 1.0;
    CHECK(std::fabs(r) <= 10.0 / z);
    if (prev != 0) {
      const double ratio = std::fabs(r) / prev;
      CHECK(ratio > 1e-2 / 3);
      CHECK(ratio < 1e-1 * 3);
    }
    prev = std::fabs(r);
  }
}

TEST_CASE("division reporting names the vanished denominator") {
  const auto seqs = CoefficientSequences<R>::example1();
  const auto cf = ri_fraction(seqs);
  // P_1(1) = 0, so the depth-1 convergent at z = 1 divides by zero
  CHECK_THROWS_WITH_AS(convergent(cf, R(1), 1), "convergent denominator vanished at depth 1",
                       DivisionByZeroError);
}
