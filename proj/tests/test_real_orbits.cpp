#include <doctest.h>

#include <cmath>
#include <set>

#include "jacobi/json_io.hpp"
#include "jacobi/real_orbits.hpp"
#include "jacobi/sampler.hpp"
#include "oracles.hpp"

using namespace jacobi;
using namespace jacobi::basis;
using namespace jacobi::real;

namespace {

Sampler sampler(const char* name) { return Sampler(SamplerConfig{}, stream_id_for(name)); }

JacobiAlgElem G(Rational x, Rational y, Rational z, Rational p, Rational q, Rational r) {
  return {x, y, z, p, q, r};
}

const Rational half(1, 2);

}  // namespace

TEST_CASE("classification examples") {
  CHECK(classify(G(0, 0, 0, 0, 0, 5)) == OrbitLabel{PiR{5}});
  CHECK(classify(G(0, half, half, 1, 0, 0)) == OrbitLabel{Cone{1, -1}});
  CHECK(classify(G(0, half, half, 0, 0, 3)) == OrbitLabel{PiSR{3}});
  CHECK(classify(G(0, half, -half, 0, 0, 1)) == OrbitLabel{PiTR{1}});
  CHECK(classify(X() + R()) == OrbitLabel{Hyperbolic{1, 1}});
  CHECK(classify(JacobiAlgElem{}) == OrbitLabel{ZeroOrbit{}});
  CHECK(classify(P()) == OrbitLabel{PiP{}});
  CHECK(classify(Q()) == OrbitLabel{PiP{}});
  CHECK(classify(S()) == OrbitLabel{PiS{}});
  CHECK(classify(T()) == OrbitLabel{PiT{}});
  CHECK(classify(Z()) == OrbitLabel{Elliptic{-1, 1, 0}});
  CHECK(classify(-Z()) == OrbitLabel{Elliptic{-1, -1, 0}});
}

TEST_CASE("the PiT_R example is frozen by sampling invariance of (sign z, f, rho)") {
  auto s = sampler("pitr-oracle");
  const auto v = T() + R();
  for (int i = 0; i < 300; ++i) {
    const auto w = adjoint(s.group(), v);
    CHECK(w.z.sign() < 0);
    CHECK(cubic_invariant(w).is_zero());
    CHECK(rho_invariant(w) == Rational(1));
  }
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_rep(PiS{}).exact == S());
  CHECK(canonical_rep(Cone{1, -1}).exact == S() + P());
  const auto irrational = canonical_rep(Cone{1, -2});
  CHECK_FALSE(irrational.is_exact());
  CHECK(static_cast<double>(irrational.numeric.p) == doctest::Approx(std::sqrt(2.0)));
  CHECK(canonical_rep(Hyperbolic{4, 3}).exact == Rational(2) * X() + Rational(3) * R());
  CHECK_FALSE(canonical_rep(Hyperbolic{2, 0}).is_exact());
}

TEST_CASE("label validation") {
  CHECK_THROWS_AS(validate(Cone{1, 1}), NotInDomain);
  CHECK_THROWS_AS(validate(PiSR{0}), NotInDomain);
  CHECK_THROWS_AS(validate(Hyperbolic{-1, 0}), NotInDomain);
  CHECK_THROWS_AS(validate(Elliptic{-1, 0, 0}), NotInDomain);
  CHECK_NOTHROW(validate(Elliptic{-2, -1, 5}));
}

TEST_CASE("round trip on every family") {
  auto s = sampler("roundtrip");
  for (std::size_t family = 0; family < 10; ++family) {
    CAPTURE(family);
    for (int n = 0; n < 20; ++n) {
      const OrbitLabel label = s.real_label(family);
      const JacobiAlgElem member = exact_member(label);
      for (int m = 0; m < 10; ++m) CHECK(classify(adjoint(s.group(), member)) == label);
    }
  }
}

TEST_CASE("exact witnesses") {
  const auto w = witness(Q());
  REQUIRE(w.is_exact());
  CHECK(adjoint(*w.exact, P()) == Q());

  // rho = r - q^2 / (y + z) = -1, so the orbit of S - R; y + z = 4 is a square.
  const JacobiAlgElem v = G(0, 2, 2, 0, 2, 0);
  CHECK(classify(v) == OrbitLabel{PiSR{-1}});
  const auto w2 = witness(v);
  REQUIRE(w2.is_exact());
  CHECK(adjoint(*w2.exact, S() - R()) == v);

  // y + z = 2: reaching it from S needs a scaling by sqrt 2.
  const auto w4 = witness(G(0, 1, 1, 0, 2, 0));
  CHECK_FALSE(w4.is_exact());
  CHECK(w4.residual <= 1e-9);

  // Cone(+1, -2) needs beta = sqrt 2: float witness.
  const JacobiAlgElem c = G(0, 1, 1, 1, 0, -2);
  CHECK(classify(c) == OrbitLabel{Cone{1, -2}});
  const auto w3 = witness(c);
  CHECK_FALSE(w3.is_exact());
  CHECK(w3.residual <= 1e-9);
}

TEST_CASE("witness soundness on random elements") {
  auto s = sampler("witness");
  for (int i = 0; i < 300; ++i) {
    JacobiAlgElem v = s.algebra();
    if (i % 2) {
      const auto member = exact_member(s.real_label(s.uniform(0, 9)));
      v = adjoint(s.group(), member);
    }
    const auto w = witness(v);
    const auto rep = canonical_rep(classify(v));
    if (w.is_exact()) {
      CHECK(adjoint(*w.exact, *rep.exact) == v);
    } else {
      CHECK(witness_residual(w.numeric, rep.numeric, to_numeric(v)) <= 1e-9);
    }
  }
}

TEST_CASE("displayed sets") {
  CHECK_FALSE(displayed_set_membership(Q(), {DisplayedSet::PiP}));
  CHECK(displayed_set_membership(P() + Q(), {DisplayedSet::PiP}));
  CHECK(displayed_set_membership(S(), {DisplayedSet::PiS, 1}));
  CHECK(displayed_set_membership(S(), {DisplayedSet::PiSWithRho, 1}));
  CHECK_FALSE(displayed_set_membership(S() + R(), {DisplayedSet::PiSWithRho, 1}));
  CHECK(displayed_set_membership(S() + R(), {DisplayedSet::PiS, 1}));
  CHECK(displayed_set_membership(-Z(), {DisplayedSet::PiZ, 1}));
  CHECK(displayed_set_membership(Rational(2) * R(), {DisplayedSet::PiR, 2}));
  CHECK(displayed_set_membership(S() + P(), {DisplayedSet::PiSPlusBetaP, 1, 1}));
  CHECK(displayed_set_from_name("PiQ") == DisplayedSet::PiP);
  CHECK(displayed_set_from_name("PiY") == DisplayedSet::PiX);
  CHECK_THROWS_AS(displayed_set_from_name("PiW"), UnknownSetId);
}

TEST_CASE("orbit dimensions per family") {
  const std::pair<OrbitLabel, std::size_t> expected[] = {
      {ZeroOrbit{}, 0}, {PiR{2}, 0},       {PiP{}, 3},          {PiS{}, 3},           {PiT{}, 3},
      {PiSR{2}, 3},     {PiTR{-1}, 3},      {Cone{-1, 4}, 4},    {Hyperbolic{1, 0}, 4}, {Elliptic{-1, 1, 2}, 4},
  };
  for (const auto& [label, dim] : expected) CHECK(orbit_dimension(exact_member(label)) == dim);
}

TEST_CASE("nilpotent families listed in the union") {
  CHECK(listed_family(PiSR{2}).has_value());
  CHECK_FALSE(listed_family(PiTR{2}).has_value());
  CHECK_FALSE(listed_family(Hyperbolic{1, 0}).has_value());
}

TEST_CASE("text rendering") {
  CHECK(render_text(PiSR{3}) == "Π(S^J + 3R^J)");
  CHECK(render_text(PiS{}) == "Π(S^J)");
}

TEST_CASE("labels survive JSON") {
  auto s = sampler("label-json");
  for (int i = 0; i < 100; ++i) {
    const OrbitLabel label = s.real_label(s.uniform(0, 9));
    CHECK(io::decode_real_label(io::encode(label)) == label);
  }
}
