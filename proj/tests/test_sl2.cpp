#include <doctest.h>

#include <set>

#include "jacobi/sampler.hpp"
#include "jacobi/sl2.hpp"

using namespace jacobi;
using namespace jacobi::sl2;
using namespace jacobi::sl2::basis;

namespace {

const GaussRational kI = GaussRational::i();
const Rational half(1, 2);

}  // namespace

TEST_CASE("classification examples") {
  CHECK(classify_sl2(S()) == Sl2OrbitLabel{NPlus{}});
  CHECK(classify_sl2(T()) == Sl2OrbitLabel{NMinus{}});
  CHECK(classify_sl2(Z()) == Sl2OrbitLabel{Sl2Elliptic{-1, 1}});
  CHECK(classify_sl2(X()) == Sl2OrbitLabel{Sl2Hyperbolic{1}});
  CHECK(classify_sl2(Sl2Elem{}) == Sl2OrbitLabel{Sl2Zero{}});
}

TEST_CASE("triples") {
  CHECK(validate_sl2_triple(make_triple(X(), S(), T())));
  CHECK(is_ks_real(make_triple(X(), S(), T())));
  CHECK(validate_sl2_triple(ComplexTriple{H_theta(), Y_theta(), X_theta()}));
  CHECK(is_ks_complex(ComplexTriple{H_theta(), Y_theta(), X_theta()}));
  // In (h, e, f) order the negated triple is {-X, -T, -S}.
  CHECK(is_ks_real(RealTriple{-X().matrix(), -T().matrix(), -S().matrix()}));
  CHECK_FALSE(validate_sl2_triple(RealTriple{-X().matrix(), -S().matrix(), -T().matrix()}));
  CHECK_THROWS_AS(is_ks_real(make_triple(X(), X(), X())), NotATriple);
}

TEST_CASE("theta matrices") {
  CHECK(X_theta() == GaussRational(half) * CMat{{-kI, 1}, {1, kI}});
  CHECK(Y_theta() == GaussRational(half) * CMat{{kI, 1}, {1, -kI}});
  CHECK(H_theta() == CMat{{0, kI}, {-kI, 0}});
  CHECK(H_theta_displayed() == -H_theta());
  CHECK(commutator(H_theta(), Y_theta()) == GaussRational(2) * Y_theta());
  CHECK(commutator(H_theta_displayed(), Y_theta()) == GaussRational(-2) * Y_theta());
}

TEST_CASE("triple through a nilpotent element") {
  CHECK(sl2_triple_through(S()) == make_triple(X(), S(), T()));
  CHECK(sl2_triple_through(T()) == RealTriple{-X().matrix(), T().matrix(), S().matrix()});
  const Sl2Elem two_s{0, 1, 1};
  const RealTriple t = sl2_triple_through(two_s);
  CHECK(t == RealTriple{X().matrix(), Rational(2) * S().matrix(), half * T().matrix()});
  CHECK(validate_sl2_triple(t));
  CHECK_FALSE(is_ks_real(t));
  CHECK_THROWS_AS(sl2_triple_through(X()), NotNilpotent);
  CHECK_THROWS_AS(sl2_triple_through(Sl2Elem{}), ZeroElement);
}

TEST_CASE("cayley transform") {
  CHECK(cayley(make_triple(X(), S(), T())) == ComplexTriple{H_theta(), Y_theta(), X_theta()});
  const Sl2Elem two_s{0, 1, 1};
  CHECK_THROWS_AS(cayley(sl2_triple_through(two_s)), NotKsReal);
  CHECK_THROWS_AS(cayley(RealTriple{-X().matrix(), -S().matrix(), -T().matrix()}), NotKsReal);
  CHECK(is_ks_complex(cayley(RealTriple{-X().matrix(), -T().matrix(), -S().matrix()})));

  Sampler s(SamplerConfig{}, 11);
  for (int i = 0; i < 200; ++i) {
    const RMat k = s.rotation();
    const Sl2Elem e = conjugate(k, i % 2 ? S() : T());
    const RealTriple t = sl2_triple_through(e);
    REQUIRE(is_ks_real(t));
    const ComplexTriple c = cayley(t);
    CHECK(is_ks_complex(c));
    CHECK(classify_pc(c.e) == ks_map(classify_sl2(e)));
  }
}

TEST_CASE("complex nilpotent lines and the KS map") {
  CHECK(classify_pc(1, kI).kind == PcKind::NThetaPlus);
  CHECK(classify_pc(1, -kI).kind == PcKind::NThetaMinus);
  CHECK(classify_pc(0, 0).kind == PcKind::Zero);
  CHECK(classify_pc(1, 0) == PcLabel{PcKind::NonNilpotent, 1});
  CHECK(ks_map(NPlus{}).kind == PcKind::NThetaMinus);
  CHECK(ks_map(Sl2Zero{}).kind == PcKind::Zero);
  CHECK(ks_map(NMinus{}).kind == PcKind::NThetaPlus);
  CHECK_THROWS_AS(ks_map(Sl2Hyperbolic{1}), NotNilpotentLabel);
}

TEST_CASE("cone sweep yields three nilpotent labels and conjugation invariance") {
  Sampler s(SamplerConfig{}, 12);
  std::set<std::size_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const Sl2Elem e = s.sl2_cone_point();
    const auto label = classify_sl2(e);
    REQUIRE(label.index() <= 2);
    seen.insert(label.index());
    const auto g = s.sl2_group();
    CHECK(classify_sl2(conjugate(RMat{{g.a(), g.b()}, {g.c(), g.d()}}, e)) == label);
  }
  CHECK(seen.size() == 3);
}
