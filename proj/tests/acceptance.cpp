// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "jacobi/audit.hpp"
#include "jacobi/cli.hpp"
#include "oracles.hpp"

using namespace jacobi;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Sampler sampler(const char* name) { return Sampler(SamplerConfig{}, stream_id_for(name)); }

constexpr int kPairs = 1000;

Verdict embedding_homomorphism() {
  Verdict v;
  auto s = sampler("acceptance-embedding");
  for (int i = 0; i < kPairs && v.ok; ++i) {
    const auto g1 = s.group(), g2 = s.group();
    v.require(oracle::from(embed_group(group_mul(g1, g2))) == oracle::mul(oracle::grp(g1), oracle::grp(g2)),
              "embed(g1 g2) differs from the matrix product");
    v.require(oracle::from(embed_group(group_inv(g1))) == oracle::inverse(oracle::grp(g1)),
              "embed(g^-1) differs from the matrix inverse");
  }
  if (v.ok) v.detail = std::to_string(kPairs) + " pairs";
  return v;
}

Verdict power_identity() {
  Verdict v;
  auto s = sampler("acceptance-power");
  for (int i = 0; i < kPairs && v.ok; ++i) {
    const auto e = s.algebra();
    const oracle::M4 m = oracle::alg(e);
    const oracle::M4 m2 = oracle::mul(m, m);
    const oracle::Q c1 = oracle::q(casimir(e));
    oracle::M4 lhs = m2;
    oracle::Q c1_pow = 1;
    for (unsigned k = 1; k <= 4; ++k) {
      v.require(lhs == oracle::scale(c1_pow, m2), "G^{2k} != c1^{k-1} G^2");
      v.require(power_identity_check(e, k), "library check disagrees");
      lhs = oracle::mul(lhs, m2);
      c1_pow *= c1;
    }
  }
  if (v.ok) v.detail = std::to_string(kPairs) + " elements, k = 1..4";
  return v;
}

Verdict adjoint_closed_form() {
  Verdict v;
  auto s = sampler("acceptance-adjoint");
  for (int i = 0; i < kPairs && v.ok; ++i) {
    const auto g = s.group();
    const auto e = s.algebra();
    v.require(oracle::coords(adjoint(g, e)) == oracle::adjoint(g, e), "closed form differs from conjugation");
    v.require(is_nilpotent(adjoint(g, s.nilpotent())), "nilpotent element left the nilpotent set");
  }
  if (v.ok) v.detail = std::to_string(kPairs) + " (g, v) pairs plus nilpotent stability";
  return v;
}

Verdict bracket_cross_check() {
  using namespace basis;
  Verdict v;
  auto s = sampler("acceptance-bracket");
  for (int i = 0; i < kPairs && v.ok; ++i) {
    const auto a = s.algebra(), b = s.algebra();
    v.require(oracle::coords(bracket_closed_form(a, b)) == oracle::bracket(a, b),
              "coordinate bracket differs from the commutator");
  }
  v.require(bracket_closed_form(X(), Y()) == Rational(2) * Z(), "[X,Y] != 2Z");
  v.require(bracket_closed_form(P(), Q()) == Rational(2) * R(), "[P,Q] != 2R");
  if (v.ok) v.detail = std::to_string(kPairs) + " pairs, [X,Y] = 2Z, [P,Q] = 2R";
  return v;
}

Verdict classifier_roundtrip() {
  Verdict v;
  auto s = sampler("acceptance-roundtrip");
  long checks = 0, witnesses = 0;
  for (std::size_t family = 0; family < 10 && v.ok; ++family) {
    for (int n = 0; n < 20 && v.ok; ++n) {
      const real::OrbitLabel label = s.real_label(family);
      const JacobiAlgElem member = real::exact_member(label);
      for (int m = 0; m < 50 && v.ok; ++m, ++checks) {
        const auto w = adjoint(s.group(), member);
        v.require(real::classify(w) == label, "round trip failed for " + std::string(real::family_name(label)));
        if (m == 0) {
          ++witnesses;
          const auto wit = real::witness(w);
          const auto rep = real::canonical_rep(label);
          v.require(wit.is_exact() ? adjoint(*wit.exact, *rep.exact) == w
                                   : real::witness_residual(wit.numeric, rep.numeric, to_numeric(w)) <= 1e-9,
                    "unsound witness");
        }
      }
    }
  }
  if (v.ok)
    v.detail = "10 families x 20 labels x 50 conjugators = " + std::to_string(checks) + ", " +
               std::to_string(witnesses) + " witnesses";
  return v;
}

Verdict known_memberships() {
  using namespace basis;
  Verdict v;
  const JacobiAlgElem source{0, 1, 1, 1, 2, 0};
  v.require(adjoint(JacobiGroupElem::heisenberg(-1, 0), source) == JacobiAlgElem{0, 1, 1, 1, 0, -2},
            "shift instance q = 2");
  v.require(real::classify(S() + P()) == real::OrbitLabel{real::Cone{1, -1}}, "S + P is not Cone(f = -1)");
  v.require(cubic_invariant(S() + P()) == Rational(-1), "f(S + P) != -1");
  if (v.ok) v.detail = "q = 2 shift; S + P -> Cone(+1, -1)";
  return v;
}

Verdict sl2_example() {
  using namespace sl2;
  using namespace sl2::basis;
  Verdict v;
  const RealTriple xst = make_triple(X(), S(), T());
  v.require(is_ks_real(xst), "{X,S,T} is not a real KS-triple");
  v.require(cayley(xst) == ComplexTriple{H_theta(), Y_theta(), X_theta()}, "cayley{X,S,T}");
  v.require(ks_map(NPlus{}).kind == PcKind::NThetaMinus, "N+ -> N_theta^-");
  v.require(ks_map(Sl2Zero{}).kind == PcKind::Zero, "0 -> 0");
  v.require(ks_map(NMinus{}).kind == PcKind::NThetaPlus, "N- -> N_theta^+");
  auto s = sampler("acceptance-cone");
  std::set<std::size_t> labels;
  for (int i = 0; i < 10000; ++i) labels.insert(classify_sl2(s.sl2_cone_point()).index());
  v.require(labels == std::set<std::size_t>{0, 1, 2}, "cone sweep labels are not {Zero, N+, N-}");
  if (v.ok) v.detail = "KS triple, Cayley image, KS map, 10^4 cone points -> 3 nilpotent labels + Zero";
  return v;
}

Verdict complex_side() {
  using namespace complex;
  Verdict v;
  auto s = sampler("acceptance-complex");
  for (int i = 0; i < kPairs && v.ok; ++i) {
    const KcElem k = s.kc();
    const PcElem h = s.pc();
    v.require(weight_coords(kc_action(k, h)) == scale_by_u(weight_coords(h), k.u()), "weight equivariance");
    v.require(kc_action(KcElem(k.a(), k.b(), s.gauss()), h) == kc_action(k, h), "kappa acts");
  }
  const G i = G::i();
  for (int n = 0; n < 200 && v.ok; ++n) {
    const G x = s.gauss(), y = s.gauss(), delta = s.nonzero_gauss();
    const G xt = s.coin() ? x : s.gauss();
    const G yt = s.coin() ? y : s.gauss();
    v.require(same_kc_orbit({x, y, delta, 0}, {xt, yt, delta, 0}).same == (xt == x && yt == y), "rigidity");

    const G x2 = s.nonzero_gauss(), y2 = s.gauss(), d2 = s.gauss();
    const G dt = s.coin() ? -d2 : s.gauss();
    v.require(same_kc_orbit({x2, y2, d2, 0}, {x2, y2, dt, 0}).same == (dt == d2 || dt == -d2), "delta sign");

    const G xi = Rational(s.sign()) * i;
    const PcElem h{x, xi * x, s.gauss(), s.gauss()};
    const PcElem moved = kc_action(s.kc(), h);
    v.require(moved.y == xi * moved.x, "line preservation");
  }
  if (v.ok) v.detail = "1000 equivariance/kappa pairs, 200 instances per statement";
  return v;
}

Verdict audit_determinism() {
  Verdict v;
  const std::vector<std::string> args = {"audit", "--seed", "42", "--trials", "1000"};
  std::ostringstream out1, out2, err;
  v.require(cli::dispatch(args, out1, err) == cli::kOk, "audit exit code");
  v.require(cli::dispatch(args, out2, err) == cli::kOk, "audit exit code");
  v.require(out1.str() == out2.str(), "report is not byte-stable");
  if (!v.ok) return v;

  const auto report = io::json::parse(out1.str());
  std::map<std::string, io::json> claims;
  for (const auto& c : report["claims"]) claims[c["claim_id"]] = c;
  for (const char* id : {"power-identity", "adjoint-closed-form", "kc-nilpotent-preservation", "sl2-relations"})
    v.require(claims.count(id) && claims[id]["status"] == "PASS", std::string(id) + " did not PASS");
  const std::pair<const char*, const char*> findings[] = {{"orbit-PiP-display", "A1"},
                                                          {"nilpotent-union-completeness", "A2"},
                                                          {"kc-orbit-vs-display", "B1"},
                                                          {"kc-isotropic-coverage", "B2"}};
  for (const auto& [id, tag] : findings) {
    v.require(claims.count(id) && claims[id]["finding"] == tag, std::string(id) + " lacks finding " + tag);
    v.require(claims.count(id) && audit::replay_evidence(claims[id]), std::string(tag) + " evidence does not replay");
  }

  // Infinitely many orbits: 120 labels per family, pairwise distinct, so
  // pairwise non-conjugate because labels are orbit invariants.
  std::set<std::string> pir, pisr, njp;
  std::vector<complex::PcElem> deltas;
  for (int n = 1; n <= 120; ++n) {
    const Rational a(n, 3);
    pir.insert(io::encode(real::classify(a * basis::R())).dump());
    pisr.insert(io::encode(real::classify(basis::S() + a * basis::R())).dump());
    deltas.push_back({0, 0, a, 0});
    njp.insert(io::encode(complex::classify_kc(deltas.back())).dump());
  }
  for (std::size_t i = 0; i < deltas.size(); ++i)
    for (std::size_t j = i + 1; j < deltas.size(); ++j)
      v.require(!complex::same_kc_orbit(deltas[i], deltas[j]).same, "two NJP labels are conjugate");
  v.require(pir.size() >= 100 && pisr.size() >= 100 && njp.size() >= 100, "fewer than 100 distinct labels");
  if (v.ok)
    v.detail = "byte-stable; 4 PASS; A1 A2 B1 B2 replay; " + std::to_string(pir.size()) + "/" +
               std::to_string(pisr.size()) + "/" + std::to_string(njp.size()) + " distinct PiR/PiS_R/NJP labels";
  return v;
}

Verdict orbit_dimensions() {
  using namespace real;
  Verdict v;
  const std::pair<OrbitLabel, std::size_t> expected[] = {
      {ZeroOrbit{}, 0},  {PiR{1}, 0},    {PiP{}, 3},       {PiS{}, 3},           {PiT{}, 3},
      {PiSR{1}, 3},      {PiTR{1}, 3},   {Cone{1, -1}, 4}, {Hyperbolic{1, 0}, 4}, {Elliptic{-1, 1, 0}, 4},
  };
  for (const auto& [label, dim] : expected) {
    const auto rep = canonical_rep(label);
    v.require(rep.exact && orbit_dimension(*rep.exact) == dim,
              std::string(family_name(label)) + " has the wrong dimension");
  }
  if (v.ok) v.detail = "0 0 3 3 3 3 3 4 4 4";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"embedding homomorphism and inverse", embedding_homomorphism},
      {"power identity", power_identity},
      {"adjoint closed form and nilpotent stability", adjoint_closed_form},
      {"bracket cross-check", bracket_cross_check},
      {"classifier round trip and witness soundness", classifier_roundtrip},
      {"known memberships", known_memberships},
      {"sl2 KS example", sl2_example},
      {"complex side", complex_side},
      {"audit determinism and findings", audit_determinism},
      {"orbit dimensions", orbit_dimensions},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %-45s  %s  (%.2fs)\n", v.ok ? "PASS" : "FAIL", n, name, v.detail.c_str(), secs);
    failed += !v.ok;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
