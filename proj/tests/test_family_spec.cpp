#include <doctest.h>

#include "ricopoly/family_spec.hpp"
#include "ricopoly/recurrence.hpp"

using namespace ricopoly;
using R = Rational;

TEST_CASE("builtin family specs") {
  const auto e1 = parse_family_spec("builtin: example1");
  CHECK(e1.kind == FamilySpec::Kind::example1);
  const auto seqs = e1.materialize<R>();
  CHECK(seqs.c(3) == R(1));
  CHECK(seqs.lambda(2) == R(1, 4));
  CHECK(seqs.a(1) == R(-1));

  const auto lj = parse_family_spec("builtin: ljacobi, a=11, c=12");
  CHECK(lj.kind == FamilySpec::Kind::ljacobi);
  CHECK(lj.materialize<R>().c(0) == R(6, 5));
  CHECK(lj.materialize<double>().c(0) == doctest::Approx(1.2));

  const auto eta = parse_family_spec("builtin: eta, eta=1, t=0");
  CHECK(eta.kind == FamilySpec::Kind::eta);
  CHECK(eta.materialize<R>().c(2) == R(-1));
  CHECK(eta.materialize<R>().lambda(1) == R(2, 3));

  CHECK_THROWS_AS(parse_family_spec("builtin: unknown"), UsageError);
  CHECK_THROWS_AS(parse_family_spec("builtin: ljacobi, a=11"), UsageError);
  CHECK_THROWS_AS(parse_family_spec(""), UsageError);
}

TEST_CASE("explicit array specs") {
  const auto spec = parse_family_spec("c=[1, 2, 3], lambda=[1/4, -1/4], a=[-1, 0]");
  CHECK(spec.kind == FamilySpec::Kind::explicit_lists);
  const auto seqs = spec.materialize<R>();
  CHECK(seqs.c(2) == R(3));
  CHECK(seqs.lambda(2) == R(-1, 4));
  CHECK(seqs.a(1) == R(-1));
  CHECK(seqs.max_index() == 2);
  const auto fam = generate_family(seqs, 2);
  CHECK(fam[2].degree() == 2);

  CHECK_THROWS_AS(parse_family_spec("c=[1], lambda=[1/4]"), UsageError);
  CHECK_THROWS_AS(parse_family_spec("c=1, lambda=[1], a=[0]"), UsageError);
}

TEST_CASE("perturbation specs") {
  const auto one = parse_perturbation_spec("k=4, mu=-2, nu=1");
  REQUIRE(one.size() == 1);
  CHECK(one[0].k == 4);
  CHECK(one[0].mu == R(-2));
  CHECK(one[0].nu == R(1));
  const auto pert = one[0].materialize<R>();
  CHECK(pert.kind() == PerturbationKind::corecursive);

  const auto two = parse_perturbation_spec("k=3,mu=0.3,nu=1;k=4,mu=2/5,nu=1");
  REQUIRE(two.size() == 2);
  CHECK(two[0].mu == R(3, 10));
  CHECK(two[1].mu == R(2, 5));

  CHECK(parse_perturbation_spec("").empty());
  CHECK_THROWS_AS(parse_perturbation_spec("mu=1"), UsageError);
  CHECK_THROWS_AS(parse_perturbation_spec("k=1,zz=2"), UsageError);
}

TEST_CASE("defaults in perturbation entries") {
  const auto entries = parse_perturbation_spec("k=2");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].mu == R(0));
  CHECK(entries[0].nu == R(1));
  CHECK(entries[0].materialize<R>().is_identity());
}
