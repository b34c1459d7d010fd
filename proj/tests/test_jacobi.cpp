#include <doctest.h>

#include "jacobi/jacobi.hpp"
#include "jacobi/sampler.hpp"
#include "oracles.hpp"

using namespace jacobi;
using namespace jacobi::basis;

namespace {

Sampler sampler(const char* name) { return Sampler(SamplerConfig{}, stream_id_for(name)); }

}  // namespace

TEST_CASE("group law example") {
  const auto g = group_mul(JacobiGroupElem::heisenberg(1, 0), JacobiGroupElem::heisenberg(0, 1));
  CHECK(g == JacobiGroupElem::heisenberg(1, 1, 1));
}

TEST_CASE("unimodularity is enforced") {
  CHECK_THROWS_AS(JacobiGroupElem(2, 0, 0, 1), NotUnimodular);
  CHECK_NOTHROW(JacobiGroupElem(2, 0, 0, Rational(1, 2)));
}

TEST_CASE("heisenberg inverse") {
  CHECK(group_inv(JacobiGroupElem::heisenberg(1, 2, 3)) == JacobiGroupElem::heisenberg(-1, -2, -3));
}

TEST_CASE("embedding of a heisenberg element") {
  const Mat4<Rational> expected{{1, 0, 0, 2}, {1, 1, 2, 3}, {0, 0, 1, -1}, {0, 0, 0, 1}};
  CHECK(embed_group(JacobiGroupElem::heisenberg(1, 2, 3)) == expected);
}

TEST_CASE("embedding matches the oracle and is symplectic") {
  auto s = sampler("embed");
  const oracle::M4 j = oracle::symplectic_form();
  for (int i = 0; i < 300; ++i) {
    const auto g1 = s.group(), g2 = s.group();
    const oracle::M4 e1 = oracle::grp(g1);
    CHECK(oracle::from(embed_group(g1)) == e1);
    CHECK(oracle::from(embed_group(group_mul(g1, g2))) == oracle::mul(e1, oracle::grp(g2)));
    CHECK(oracle::from(embed_group(group_inv(g1))) == oracle::inverse(e1));
    CHECK(oracle::mul(oracle::mul(oracle::transpose(e1), j), e1) == j);
  }
}

TEST_CASE("algebra embedding of basis elements") {
  const auto x = embed_algebra(X());
  CHECK(x(0, 0) == Rational(1));
  CHECK(x(2, 2) == Rational(-1));
  int nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) nonzero += !x(i, k).is_zero();
  CHECK(nonzero == 2);

  const auto p = embed_algebra(P());
  CHECK(p(1, 0) == Rational(1));
  CHECK(p(2, 3) == Rational(-1));
  nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) nonzero += !p(i, k).is_zero();
  CHECK(nonzero == 2);
}

TEST_CASE("algebra_from_matrix rejects matrices outside the image") {
  Mat4<Rational> m;
  m(3, 3) = 1;
  CHECK_THROWS_AS(algebra_from_matrix(m), NotInDomain);
}

TEST_CASE("basis brackets") {
  CHECK(bracket(X(), Y()) == Rational(2) * Z());
  CHECK(bracket(P(), Q()) == Rational(2) * R());
  CHECK(bracket(X(), P()) == -P());
  CHECK(oracle::bracket(X(), P()) == oracle::coords(-P()));
}

TEST_CASE("brackets agree with the oracle and with the closed form") {
  auto s = sampler("bracket");
  for (int i = 0; i < 300; ++i) {
    const auto a = s.algebra(), b = s.algebra();
    const auto v = bracket(a, b);
    CHECK(oracle::coords(v) == oracle::bracket(a, b));
    CHECK(bracket_closed_form(a, b) == v);
    CHECK(bracket(a, b) == -bracket(b, a));
  }
}

TEST_CASE("jacobi identity") {
  auto s = sampler("jacobi-identity");
  for (int i = 0; i < 100; ++i) {
    const auto a = s.algebra(), b = s.algebra(), c = s.algebra();
    CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
  }
}

TEST_CASE("R is central") {
  auto s = sampler("central");
  for (int i = 0; i < 100; ++i) CHECK(bracket(s.algebra(), R()).is_zero());
}

TEST_CASE("adjoint examples") {
  const JacobiAlgElem v{0, 1, 1, 1, 2, 0};
  CHECK(adjoint(JacobiGroupElem::heisenberg(-1, 0), v) == JacobiAlgElem{0, 1, 1, 1, 0, -2});
  CHECK(adjoint(JacobiGroupElem(0, -1, 1, 0), P()) == Q());
}

TEST_CASE("adjoint agrees with the oracle and is an action") {
  auto s = sampler("adjoint");
  for (int i = 0; i < 300; ++i) {
    const auto g = s.group(), h = s.group();
    const auto v = s.algebra();
    CHECK(oracle::coords(adjoint(g, v)) == oracle::adjoint(g, v));
    CHECK(adjoint(g, adjoint(h, v)) == adjoint(group_mul(g, h), v));
    CHECK(adjoint(g, R()) == R());
  }
}

TEST_CASE("invariant values") {
  CHECK(cubic_invariant(JacobiAlgElem{0, Rational(1, 2), Rational(1, 2), 1, 0, 0}) == Rational(-1));
  CHECK(invariants(X() + R()).I == Rational(-1));
  CHECK(rho_invariant(S() + Rational(3) * R()) == Rational(3));
  CHECK(rho_invariant(T() + R()) == Rational(1));
  CHECK_FALSE(rho_invariant(X()).has_value());
  CHECK_FALSE(rho_invariant(S() + P()).has_value());
}

TEST_CASE("invariants are constant along orbits") {
  auto s = sampler("invariants");
  const JacobiAlgElem samples[] = {X() + R(), S() + Rational(3) * R(), T() + R(), S() + P()};
  for (const auto& v : samples) {
    const Invariants base = invariants(v);
    for (int i = 0; i < 200; ++i) {
      const Invariants moved = invariants(adjoint(s.group(), v));
      CHECK(moved.c1 == base.c1);
      CHECK(moved.I == base.I);
      CHECK(moved.rho == base.rho);
    }
  }
}

TEST_CASE("nilpotency and the power identity") {
  CHECK_FALSE(is_nilpotent(X()));
  CHECK(is_nilpotent(S() + P()));
  CHECK(power_identity_check(X(), 2));
  auto s = sampler("power");
  for (int i = 0; i < 300; ++i) {
    const auto v = s.algebra();
    for (unsigned k = 1; k <= 4; ++k) CHECK(power_identity_check(v, k));
    // Nilpotent iff the 4th power of the embedding vanishes.
    const auto m = embed_algebra(v);
    CHECK(is_nilpotent(v) == (m * m * m * m).is_zero());
  }
  for (int i = 0; i < 100; ++i) {
    const auto m = embed_algebra(s.nilpotent());
    CHECK((m * m * m * m).is_zero());
  }
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(JacobiAlgElem{}) == 0);
  CHECK(orbit_dimension(R()) == 0);
  CHECK(orbit_dimension(P()) == 3);
  CHECK(orbit_dimension(S()) == 3);
  CHECK(orbit_dimension(X()) == 4);
}

TEST_CASE("siegel-jacobi action") {
  const SiegelJacobiPoint base({0.0, 1.0}, {0.0, 0.0});
  const auto moved = sj_action(JacobiGroupElem::heisenberg(2, 3, 5), base);
  CHECK(moved.tau().real() == doctest::Approx(0.0));
  CHECK(moved.tau().imag() == doctest::Approx(1.0));
  CHECK(moved.zeta().real() == doctest::Approx(3.0));
  CHECK(moved.zeta().imag() == doctest::Approx(2.0));

  const Rational c(3, 5), sn(4, 5);
  const auto fixed = sj_action(JacobiGroupElem(c, sn, -sn, c, 0, 0, 7), base);
  CHECK(fixed.tau().real() == doctest::Approx(0.0));
  CHECK(fixed.tau().imag() == doctest::Approx(1.0));
  CHECK(std::abs(fixed.zeta()) == doctest::Approx(0.0));
}
