#include "jacobi/audit.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace jacobi::audit {

namespace {

using io::encode;

struct Outcome {
  long trials = 0;
  bool flagged = false;
  std::optional<std::string> finding;
  json evidence = json::array();

  /// A check that should hold did not.  Only the first one is kept.
  void violation(json ev) {
    if (flagged && !finding) return;
    flagged = true;
    evidence.push_back(std::move(ev));
  }
  /// Evidence for a known discrepancy with the literal statement.
  void discrepancy(const char* tag, json ev) {
    flagged = true;
    if (!finding) finding = tag;
    evidence.push_back(std::move(ev));
  }
  bool ok() const { return !flagged || finding.has_value(); }
};

using ClaimFn = Outcome (*)(Sampler&, const SamplerConfig&);

struct ClaimDef {
  const char* id;
  const char* description;
  ClaimFn run;
};

// ---- shared helpers ------------------------------------------------------------

real::OrbitLabel classify(const JacobiAlgElem& v) { return real::classify(v); }

Mat4<Rational> displayed_inverse(const JacobiGroupElem& g) {
  const Rational &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  const Rational &l = g.lambda(), &m = g.mu(), &k = g.kappa();
  return Mat4<Rational>{{d, 0, -b, -m},
                        {c * m - d * l, 1, b * l - a * m, -k},
                        {-c, 0, a, l},
                        {0, 0, 0, 1}};
}

// Entries of the nilpotent disjoint-union list: family index and parameter.
struct ListedRep {
  int family;
  Rational param;
  JacobiAlgElem elem;
};

ListedRep random_listed(Sampler& s) {
  using namespace basis;
  const int fam = static_cast<int>(s.uniform(0, 6));
  const Rational a = s.nonzero_rational();
  switch (fam) {
    case 0: return {fam, 0, JacobiAlgElem{}};
    case 1: return {fam, 0, S()};
    case 2: return {fam, 0, T()};
    case 3: return {fam, 0, P()};
    case 4: return {fam, a, a * R()};
    case 5: return {fam, a, S() + a * R()};
    default: return {fam, a, a * (S() + P())};
  }
}

sl2::Sl2Elem sl2_theta(const sl2::Sl2Elem& v) { return sl2::Sl2Elem::from_matrix(-v.matrix().transpose()); }

complex::PcElem pc(const GaussRational& x, const GaussRational& y, const GaussRational& p,
                   const GaussRational& q) {
  return {x, y, p, q};
}

const GaussRational kI = GaussRational::i();

// ---- group and algebra ---------------------------------------------------------

Outcome embedding_homomorphism(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g1 = s.group();
    const auto g2 = s.group();
    if (!(embed_group(group_mul(g1, g2)) == embed_group(g1) * embed_group(g2)))
      return out.violation({{"check", "embed(g1 g2) = embed(g1) embed(g2)"}, {"g1", encode(g1)}, {"g2", encode(g2)}}), out;
    if (!(embed_group(group_inv(g1)) == inverse(embed_group(g1))))
      return out.violation({{"check", "embed(g^-1) = embed(g)^-1"}, {"g", encode(g1)}}), out;
  }
  return out;
}

Outcome inverse_display(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto shown = displayed_inverse(g);
    if (!(shown == embed_group(group_inv(g))) || !(shown * embed_group(g) == Mat4<Rational>::identity()))
      return out.violation({{"check", "displayed inverse matrix"}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome power_identity(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto v = (i % 4 == 0) ? s.nilpotent() : s.algebra();
    for (unsigned k = 1; k <= 4; ++k)
      if (!power_identity_check(v, k))
        return out.violation({{"check", "power identity"}, {"v", encode(v)}, {"k", k}}), out;
  }
  return out;
}

Outcome adjoint_closed_form(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto v = s.algebra();
    if (!(adjoint(g, v) == adjoint_by_conjugation(g, v)))
      return out.violation({{"check", "closed form vs conjugation"}, {"g", encode(g)}, {"v", encode(v)}}), out;
  }
  return out;
}

Outcome adjoint_nilpotent_stable(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto v = s.nilpotent();
    if (!is_nilpotent(adjoint(g, v)))
      return out.violation({{"check", "nilpotent image"}, {"g", encode(g)}, {"v", encode(v)}}), out;
  }
  return out;
}

Outcome bracket_closed_form(Sampler& s, const SamplerConfig& cfg) {
  using namespace basis;
  Outcome out;
  const std::pair<JacobiAlgElem, JacobiAlgElem> basis_pairs[] = {{X(), Y()}, {P(), Q()}};
  const JacobiAlgElem expected[] = {Rational(2) * Z(), Rational(2) * R()};
  for (int i = 0; i < 2; ++i, ++out.trials) {
    const auto& [a, b] = basis_pairs[i];
    if (!(bracket(a, b) == expected[i]) || !(bracket_closed_form(a, b) == expected[i]))
      out.violation({{"check", "basis relation"}, {"v1", encode(a)}, {"v2", encode(b)}});
  }
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto v1 = s.algebra();
    const auto v2 = s.algebra();
    if (!(bracket(v1, v2) == bracket_closed_form(v1, v2)))
      return out.violation({{"check", "coordinate bracket vs commutator"}, {"v1", encode(v1)}, {"v2", encode(v2)}}), out;
  }
  return out;
}

Outcome invariant_c1(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto v = s.algebra();
    if (!(casimir(adjoint(g, v)) == casimir(v)))
      return out.violation({{"check", "c1 invariance"}, {"g", encode(g)}, {"v", encode(v)}}), out;
  }
  return out;
}

Outcome invariant_I(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto v = s.algebra();
    if (!(invariants(adjoint(g, v)).I == invariants(v).I))
      return out.violation({{"check", "I invariance"}, {"g", encode(g)}, {"v", encode(v)}}), out;
  }
  return out;
}

Outcome invariant_cone_sign_rho(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto g = s.group();
    const auto v = s.nilpotent();
    if (adjoint(g, v).z.sign() != v.z.sign())
      return out.violation({{"check", "sign z on the cone"}, {"g", encode(g)}, {"v", encode(v)}}), out;

    const auto ell_member = real::exact_member(s.real_label(9));
    const auto ell = adjoint(s.group(), ell_member);
    if (adjoint(g, ell).z.sign() != ell.z.sign())
      return out.violation({{"check", "sign z on c1 < 0"}, {"g", encode(g)}, {"v", encode(ell)}}), out;

    const auto label = s.real_label(static_cast<std::size_t>(s.uniform(3, 6)));
    const auto w = adjoint(s.group(), real::exact_member(label));
    const auto rho = rho_invariant(w);
    const auto rho_moved = rho_invariant(adjoint(g, w));
    if (!rho || !rho_moved || !(*rho == *rho_moved))
      return out.violation({{"check", "rho invariance"}, {"g", encode(g)}, {"v", encode(w)}}), out;
  }
  return out;
}

// ---- real orbit displays -------------------------------------------------------

Outcome orbit_pix_display(Sampler& s, const SamplerConfig& cfg) {
  using namespace basis;
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const auto g = s.group();
    const auto wx = adjoint(g, alpha * X());
    const auto wy = adjoint(g, alpha * Y());
    const real::SetQuery q{real::DisplayedSet::PiX, alpha};
    if (!real::displayed_set_membership(wx, q) || !real::displayed_set_membership(wy, q) ||
        !(classify(wx) == real::OrbitLabel{real::Hyperbolic{alpha * alpha, 0}}) ||
        !(classify(wx) == classify(wy)))
      return out.violation({{"check", "hyperbolic display"}, {"alpha", encode(alpha)}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome orbit_piz_sheet(Sampler& s, const SamplerConfig& cfg) {
  using namespace basis;
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const auto g = s.group();
    const real::SetQuery q{real::DisplayedSet::PiZ, alpha};
    const auto reference = alpha * Z();
    if (!real::displayed_set_membership(adjoint(g, reference), q))
      return out.violation({{"check", "orbit inside display"}, {"alpha", encode(alpha)}, {"g", encode(g)}}), out;
    const auto other = adjoint(g, -reference);
    if (!out.finding && real::displayed_set_membership(other, q) && other.z.sign() != reference.z.sign())
      out.discrepancy("A3", {{"alpha", encode(alpha)},
                             {"reference", encode(reference)},
                             {"element", encode(other)},
                             {"reference_label", encode(classify(reference))},
                             {"element_label", encode(classify(other))}});
  }
  return out;
}

Outcome orbit_pip_display(Sampler& s, const SamplerConfig& cfg) {
  using namespace basis;
  Outcome out;
  const JacobiGroupElem rot(0, -1, 1, 0);
  const auto q_elem = adjoint(rot, P());
  ++out.trials;
  if (!real::displayed_set_membership(q_elem, {real::DisplayedSet::PiP}))
    out.discrepancy("A1", {{"source", encode(P())},
                           {"conjugator", encode(rot)},
                           {"element", encode(q_elem)},
                           {"alpha", "1"}});
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const auto g = s.group();
    const auto w = adjoint(g, alpha * P());
    if (!w.sl2_part_zero() || !(classify(w) == real::OrbitLabel{real::PiP{}}) ||
        !(classify(adjoint(g, alpha * Q())) == classify(w)))
      return out.violation({{"check", "P orbit"}, {"alpha", encode(alpha)}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome orbit_pir_point(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const auto g = s.group();
    if (!(adjoint(g, alpha * basis::R()) == alpha * basis::R()))
      return out.violation({{"check", "R fixed"}, {"alpha", encode(alpha)}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome orbit_heisenberg_shift(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const Rational p = s.rational(), q = s.rational(), r = s.rational();
    const JacobiAlgElem v = alpha * JacobiAlgElem{0, 1, 1, p, q, r};
    const JacobiAlgElem expected = alpha * JacobiAlgElem{0, 1, 1, p, 0, r - q * q / Rational(2)};
    const auto g = JacobiGroupElem::heisenberg(-q / Rational(2), 0);
    if (!(adjoint(g, v) == expected))
      return out.violation({{"check", "shift removes q"}, {"v", encode(v)}}), out;
  }
  return out;
}

Outcome nilpotent_sheet_display(Sampler& s, const SamplerConfig& cfg, const JacobiAlgElem& base,
                                real::DisplayedSet literal, real::DisplayedSet with_rho) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const auto g = s.group();
    const auto w = adjoint(g, alpha * base);
    if (!real::displayed_set_membership(w, {literal, alpha}) ||
        !real::displayed_set_membership(w, {with_rho, alpha}) || !(classify(w) == classify(alpha * base)))
      return out.violation({{"check", "orbit inside display"}, {"alpha", encode(alpha)}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome orbit_pis_display(Sampler& s, const SamplerConfig& cfg) {
  return nilpotent_sheet_display(s, cfg, basis::S(), real::DisplayedSet::PiS,
                                 real::DisplayedSet::PiSWithRho);
}

Outcome orbit_pit_display(Sampler& s, const SamplerConfig& cfg) {
  Outcome out = nilpotent_sheet_display(s, cfg, basis::T(), real::DisplayedSet::PiT,
                                        real::DisplayedSet::PiTWithRho);
  for (int i = 0; i < cfg.trials && out.ok(); ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    if (!(classify(alpha * basis::T()) == classify(-alpha * basis::S())))
      out.violation({{"check", "T orbit equals -S orbit"}, {"alpha", encode(alpha)}});
  }
  return out;
}

Outcome orbit_cone_display(Sampler& s, const SamplerConfig& cfg) {
  using namespace basis;
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Rational alpha = s.nonzero_rational();
    const Rational beta = s.nonzero_rational();
    const auto g = s.group();
    const auto w = adjoint(g, alpha * (S() + beta * P()));
    const Rational f = -(alpha * alpha * alpha) * beta * beta;
    if (!real::displayed_set_membership(w, {real::DisplayedSet::PiSPlusBetaP, alpha, beta}) ||
        !(classify(w) == real::OrbitLabel{real::Cone{alpha.sign(), f}}))
      return out.violation({{"check", "cone display"}, {"alpha", encode(alpha)}, {"beta", encode(beta)}, {"g", encode(g)}}), out;
    // |beta|^{2/3} is rational when beta is a cube.
    const Rational t = s.nonzero_rational();
    const Rational cube = t * t * t;
    if (!(classify(alpha * (S() + cube * P())) == classify((alpha * t * t) * (S() + P()))))
      return out.violation({{"check", "rescaling to S + P"}, {"alpha", encode(alpha)}, {"t", encode(t)}}), out;
  }
  return out;
}

Outcome nilpotent_union_completeness(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  const JacobiAlgElem t_plus_r = basis::T() + basis::R();
  ++out.trials;
  if (!real::listed_family(classify(t_plus_r)))
    out.discrepancy("A2", {{"element", encode(t_plus_r)},
                           {"label", encode(classify(t_plus_r))},
                           {"invariants", encode(invariants(t_plus_r))}});
  long unlisted = 0;
  std::optional<JacobiAlgElem> sampled;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto label = s.real_label(static_cast<std::size_t>(s.uniform(0, 7)));
    const auto w = adjoint(s.group(), real::exact_member(label));
    const auto got = classify(w);
    if (!(got == label)) return out.violation({{"check", "classification"}, {"v", encode(w)}}), out;
    if (!real::listed_family(got)) {
      ++unlisted;
      if (!sampled) sampled = w;
    }
  }
  if (sampled)
    out.discrepancy("A2", {{"element", encode(*sampled)},
                           {"label", encode(classify(*sampled))},
                           {"invariants", encode(invariants(*sampled))},
                           {"unlisted_samples", unlisted}});
  return out;
}

Outcome nilpotent_union_disjoint(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const ListedRep a = random_listed(s);
    const ListedRep b = random_listed(s);
    const bool same_entry = a.family == b.family && a.param == b.param;
    const auto la = classify(adjoint(s.group(), a.elem));
    const auto lb = classify(adjoint(s.group(), b.elem));
    const bool same_label = la == lb;
    if (same_entry != same_label)
      return out.violation({{"check", "listed families are distinct orbits"}, {"v1", encode(a.elem)}, {"v2", encode(b.elem)}}), out;
  }
  return out;
}

Outcome nilpotent_orbits_infinite(Sampler&, const SamplerConfig&) {
  Outcome out;
  std::set<std::string> seen;
  for (int n = 1; n <= 120; ++n) {
    for (const auto& v : {Rational(n, 7) * basis::R(), basis::S() + Rational(n, 7) * basis::R()}) {
      ++out.trials;
      if (!seen.insert(encode(classify(v)).dump()).second)
        out.violation({{"check", "distinct labels"}, {"v", encode(v)}});
    }
  }
  return out;
}

Outcome classifier_roundtrip(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto label = s.real_label(static_cast<std::size_t>(s.uniform(0, 9)));
    const auto g = s.group();
    const auto w = adjoint(g, real::exact_member(label));
    if (!(classify(w) == label))
      return out.violation({{"check", "classify(adjoint(g, member)) = label"}, {"label", encode(label)}, {"g", encode(g)}}), out;
  }
  return out;
}

Outcome witness_soundness(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    JacobiAlgElem v = s.algebra();
    if (i % 2 == 0) {
      const auto member = real::exact_member(s.real_label(static_cast<std::size_t>(s.uniform(0, 9))));
      v = adjoint(s.group(), member);
    }
    try {
      const real::Witness w = real::witness(v);
      const real::Representative rep = real::canonical_rep(classify(v));
      const bool ok = w.exact ? adjoint(*w.exact, *rep.exact) == v : w.residual <= 1e-9;
      if (!ok) return out.violation({{"check", "witness"}, {"v", encode(v)}}), out;
    } catch (const Error& e) {
      return out.violation({{"check", "witness"}, {"v", encode(v)}, {"error", e.what()}}), out;
    }
  }
  return out;
}

// ---- sl2 -----------------------------------------------------------------------

Outcome sl2_relations(Sampler&, const SamplerConfig&) {
  using namespace sl2;
  using namespace sl2::basis;
  Outcome out;
  const RMat x = X().matrix(), s = S().matrix(), t = T().matrix();
  const CMat h_th = H_theta(), x_th = X_theta(), y_th = Y_theta();
  const GaussRational half = Rational(1, 2);
  const CMat x_th_shown = half * CMat{{-kI, 1}, {1, kI}};
  const CMat y_th_shown = half * CMat{{kI, 1}, {1, -kI}};
  auto conj = [](const CMat& m) {
    CMat c;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) c(i, j) = m(i, j).conj();
    return c;
  };
  const std::pair<const char*, bool> checks[] = {
      {"[X,S] = 2S", commutator(x, s) == Rational(2) * s},
      {"[X,T] = -2T", commutator(x, t) == Rational(-2) * t},
      {"[S,T] = X", commutator(s, t) == x},
      {"theta(X) = -X", sl2_theta(X()) == Sl2Elem{-1, 0, 0}},
      {"theta(S) = -T", sl2_theta(S()) == Sl2Elem::from_matrix(-t)},
      {"theta(T) = -S", sl2_theta(T()) == Sl2Elem::from_matrix(-s)},
      {"{X,S,T} KS", is_ks_real(make_triple(X(), S(), T()))},
      {"{-X,-T,-S} KS", is_ks_real(RealTriple{-x, -t, -s})},
      {"X_theta display", x_th == x_th_shown},
      {"Y_theta display", y_th == y_th_shown},
      {"{H,Y,X}_theta KS", is_ks_complex(ComplexTriple{h_th, y_th, x_th})},
      {"-{H,X,Y}_theta KS", is_ks_complex(ComplexTriple{-h_th, -x_th, -y_th})},
      {"sigma(H_theta) = -H_theta", conj(h_th) == -h_th},
      {"sigma(X_theta) = Y_theta", conj(x_th) == y_th},
      {"sigma(Y_theta) = X_theta", conj(y_th) == x_th},
      {"cayley{X,S,T}", cayley(make_triple(X(), S(), T())) == ComplexTriple{h_th, y_th, x_th}},
      {"cayley{-X,-T,-S} is KS", is_ks_complex(cayley(RealTriple{-x, -t, -s}))},
  };
  for (const auto& [name, ok] : checks) {
    ++out.trials;
    if (!ok) out.violation({{"check", name}});
  }
  return out;
}

Outcome sl2_htheta_display(Sampler&, const SamplerConfig&) {
  using namespace sl2;
  Outcome out;
  const CMat shown = sl2::basis::H_theta_displayed();
  const CMat y_th = sl2::basis::Y_theta();
  const CMat bracket = commutator(shown, y_th);
  ++out.trials;
  if (!(shown == -sl2::basis::H_theta()))
    out.violation({{"check", "displayed matrix vs i(S - T)"}, {"displayed", io::encode(shown)}});
  ++out.trials;
  if (!(bracket == GaussRational(2) * y_th))
    out.discrepancy("S1", {{"displayed", io::encode(shown)},
                           {"Y_theta", io::encode(y_th)},
                           {"commutator", io::encode(bracket)},
                           {"formula", io::encode(sl2::basis::H_theta())}});
  return out;
}

Outcome sl2_three_nilpotent_orbits(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  std::set<std::size_t> seen;
  for (int i = 0; i < 10 * cfg.trials; ++i, ++out.trials) {
    const auto e = s.sl2_cone_point();
    const auto label = sl2::classify_sl2(e);
    if (label.index() > 2) return out.violation({{"check", "cone point is nilpotent"}, {"v", encode(e)}}), out;
    seen.insert(label.index());
  }
  if (seen.size() != 3) out.violation({{"check", "three nilpotent labels"}, {"distinct", seen.size()}});
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto v = i % 2 ? s.sl2_cone_point() : s.sl2_elem();
    const auto m = s.sl2_group();
    const sl2::RMat mm{{m.a(), m.b()}, {m.c(), m.d()}};
    if (!(sl2::classify_sl2(sl2::conjugate(mm, v)) == sl2::classify_sl2(v)))
      return out.violation({{"check", "conjugation invariance"}, {"v", encode(v)}, {"g", encode(m)}}), out;
  }
  return out;
}

Outcome sl2_ks_correspondence(Sampler& s, const SamplerConfig& cfg) {
  using namespace sl2;
  Outcome out;
  const std::pair<Sl2OrbitLabel, PcKind> table[] = {
      {NPlus{}, PcKind::NThetaMinus}, {Sl2Zero{}, PcKind::Zero}, {NMinus{}, PcKind::NThetaPlus}};
  for (const auto& [from, to] : table) {
    ++out.trials;
    if (ks_map(from).kind != to) out.violation({{"check", "ks_map"}, {"label", encode(from)}});
  }
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const RMat k = s.rotation();
    const Sl2Elem base = s.coin() ? sl2::basis::S() : sl2::basis::T();
    const Sl2Elem e = conjugate(k, Sl2Elem::from_matrix(Rational(s.sign()) * base.matrix()));
    const RealTriple t = sl2_triple_through(e);
    if (!is_ks_real(t) || !(classify_pc(cayley(t).e) == ks_map(classify_sl2(e))))
      return out.violation({{"check", "elementwise correspondence"}, {"E", encode(e)}}), out;
  }
  return out;
}

Outcome sl2_triple_through_claim(Sampler& s, const SamplerConfig& cfg) {
  using namespace sl2;
  using namespace sl2::basis;
  Outcome out;
  const RMat x = X().matrix(), sm = S().matrix(), tm = T().matrix();
  const Rational half(1, 2);
  const std::pair<Sl2Elem, RealTriple> examples[] = {
      {S(), {x, sm, tm}},
      {T(), {-x, tm, sm}},
      {Sl2Elem{0, 1, 1}, {x, Rational(2) * sm, half * tm}},
  };
  for (const auto& [e, expected] : examples) {
    ++out.trials;
    if (!(sl2_triple_through(e) == expected)) out.violation({{"check", "example triple"}, {"E", encode(e)}});
  }
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    Sl2Elem e = s.sl2_cone_point();
    if (e == Sl2Elem{}) e = S();
    const RealTriple t = sl2_triple_through(e);
    if (!validate_sl2_triple(t) || is_ks_real(t) != (normalization_ratio(e) == Rational(2)))
      return out.violation({{"check", "triple through E"}, {"E", encode(e)}}), out;
  }
  return out;
}

// ---- complex side ----------------------------------------------------------------

Outcome kc_nilpotent_preservation(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto k = s.kc();
    const auto h = s.nilpotent_pc();
    const auto g = s.pc();
    const auto moved = complex::kc_action(k, g);
    if (!complex::is_nilpotent_pc(complex::kc_action(k, h)) ||
        !(moved.x * moved.x + moved.y * moved.y == g.x * g.x + g.y * g.y))
      return out.violation({{"check", "nilpotent cone preserved"}, {"k", encode(k)}, {"h", encode(h)}}), out;
  }
  return out;
}

Outcome kc_weight_equivariance(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto k = s.kc();
    const auto h = s.pc();
    const auto w = complex::weight_coords(h);
    if (!(complex::weight_coords(complex::kc_action(k, h)) == complex::scale_by_u(w, k.u())) ||
        !(complex::from_weight_coords(w) == h))
      return out.violation({{"check", "diagonal action"}, {"k", encode(k)}, {"h", encode(h)}}), out;
  }
  return out;
}

Outcome kc_kappa_trivial(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto k = s.kc();
    const complex::KcElem k2(k.a(), k.b(), s.gauss());
    const auto h = s.pc();
    if (!(complex::kc_action(k, h) == complex::kc_action(k2, h)))
      return out.violation({{"check", "kappa acts trivially"}, {"k", encode(k)}, {"h", encode(h)}}), out;
  }
  return out;
}

Outcome kc_rigidity_x(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const GaussRational x = s.gauss(), y = s.gauss(), delta = s.nonzero_gauss();
    GaussRational xt = x, yt = y;
    if (s.coin()) {
      xt = s.gauss();
      yt = s.coin() ? y : s.gauss();
    }
    const bool same = complex::same_kc_orbit(pc(x, y, delta, 0), pc(xt, yt, delta, 0)).same;
    if (same != (xt == x && yt == y))
      return out.violation({{"check", "rigidity"}, {"h1", encode(pc(x, y, delta, 0))}, {"h2", encode(pc(xt, yt, delta, 0))}}), out;
  }
  return out;
}

Outcome kc_delta_sign(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    GaussRational x = s.gauss(), y = s.gauss();
    if (x.is_zero() && y.is_zero()) x = 1;
    const GaussRational delta = s.gauss();
    const auto pick = s.uniform(0, 2);
    const GaussRational dt = pick == 0 ? delta : pick == 1 ? -delta : s.gauss();
    const bool same = complex::same_kc_orbit(pc(x, y, delta, 0), pc(x, y, dt, 0)).same;
    if (same != (dt == delta || dt == -delta))
      return out.violation({{"check", "delta up to sign"}, {"h1", encode(pc(x, y, delta, 0))}, {"h2", encode(pc(x, y, dt, 0))}}), out;
  }
  return out;
}

Outcome kc_line_preservation(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const GaussRational xi = Rational(s.sign()) * kI;
    const GaussRational x = s.gauss();
    const GaussRational p = s.gauss(), q = s.gauss();
    const auto h = pc(x, xi * x, p, q);
    const auto k = s.kc();
    const auto moved = complex::kc_action(k, h);
    if (!(moved.y == xi * moved.x))
      return out.violation({{"check", "line y = xi x preserved"}, {"k", encode(k)}, {"h", encode(h)}}), out;
  }
  return out;
}

Outcome kc_nj_displays(Sampler& s, const SamplerConfig& cfg) {
  using complex::PcDisplayedSet;
  Outcome out;
  const GaussRational half = Rational(1, 2);
  const auto x_theta = pc(half * -kI, half, 0, 0);
  const auto y_theta = pc(half * kI, half, 0, 0);
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const auto k = s.kc();
    const GaussRational x = s.nonzero_gauss();
    const GaussRational delta = s.nonzero_gauss();
    const Rational t = s.rational();
    const Rational den = Rational(1) + t * t;
    // A point of p^2 + q^2 = delta^2.
    const auto on_circle = pc(0, 0, delta * ((Rational(1) - t * t) / den), delta * (Rational(2) * t / den));
    const bool ok =
        complex::displayed_set_membership_pc(complex::kc_action(k, x_theta), {PcDisplayedSet::NJPlus}) &&
        complex::displayed_set_membership_pc(complex::kc_action(k, y_theta), {PcDisplayedSet::NJMinus}) &&
        complex::same_kc_orbit(pc(x, kI * x, 0, 0), x_theta).same &&
        complex::same_kc_orbit(pc(x, -(kI * x), 0, 0), y_theta).same &&
        complex::displayed_set_membership_pc(complex::kc_action(k, pc(0, 0, delta, 0)),
                                         {PcDisplayedSet::NJP, 1, delta}) &&
        complex::same_kc_orbit(pc(0, 0, delta, 0), pc(0, 0, 0, delta)).same &&
        complex::same_kc_orbit(on_circle, pc(0, 0, delta, 0)).same;
    if (!ok)
      return out.violation({{"check", "display equals orbit"}, {"k", encode(k)}, {"x", encode(x)}, {"delta", encode(delta)}}), out;
  }
  return out;
}

Outcome kc_orbit_vs_display(Sampler& s, const SamplerConfig& cfg) {
  using complex::PcDisplayedSet;
  Outcome out;
  const complex::PcSetQuery query{PcDisplayedSet::NJPlusXDelta, 1, 1};
  const auto h1 = pc(1, kI, 1, 0);
  const auto h2 = pc(2, GaussRational(2) * kI, 1, 0);
  ++out.trials;
  if (complex::displayed_set_membership_pc(h1, query) && complex::displayed_set_membership_pc(h2, query) &&
      !complex::same_kc_orbit(h1, h2).same)
    out.discrepancy("B1", {{"h1", encode(h1)}, {"h2", encode(h2)}, {"set", "NJPlusXDelta"},
                           {"x", encode(GaussRational(1))}, {"delta", encode(GaussRational(1))}});
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const GaussRational x = s.nonzero_gauss(), delta = s.nonzero_gauss();
    const auto base = pc(x, kI * x, delta, 0);
    const auto k = s.kc();
    if (!complex::displayed_set_membership_pc(complex::kc_action(k, base), {PcDisplayedSet::NJPlusXDelta, x, delta}))
      return out.violation({{"check", "orbit inside display"}, {"k", encode(k)}, {"h", encode(base)}}), out;
  }
  return out;
}

Outcome kc_isotropic_coverage(Sampler& s, const SamplerConfig& cfg) {
  Outcome out;
  const auto h = pc(0, 0, 1, kI);
  ++out.trials;
  const auto label = complex::classify_kc(h);
  if (complex::is_nilpotent_pc(h) && !complex::listed_family(label))
    out.discrepancy("B2", {{"element", encode(h)}, {"label", encode(label)}});
  long uncovered = 0;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials)
    if (!complex::listed_family(complex::classify_kc(s.nilpotent_pc()))) ++uncovered;
  if (out.finding) out.evidence.back()["uncovered_samples"] = uncovered;
  return out;
}

Outcome kc_union_disjoint(Sampler& s, const SamplerConfig& cfg) {
  struct Entry {
    int family;
    GaussRational x, delta;
    complex::PcElem h;
  };
  auto draw = [&] {
    const int fam = static_cast<int>(s.uniform(0, 5));
    const GaussRational x = s.nonzero_gauss();
    const GaussRational delta = s.nonzero_gauss();
    switch (fam) {
      case 0: return Entry{fam, 0, 0, {}};
      case 1: return Entry{fam, x, 0, pc(x, kI * x, 0, 0)};
      case 2: return Entry{fam, x, 0, pc(x, -(kI * x), 0, 0)};
      case 3: return Entry{fam, 0, delta, pc(0, 0, delta, 0)};
      case 4: return Entry{fam, x, delta, pc(x, kI * x, delta, 0)};
      default: return Entry{fam, x, delta, pc(x, -(kI * x), delta, 0)};
    }
  };
  Outcome out;
  for (int i = 0; i < cfg.trials; ++i, ++out.trials) {
    const Entry a = draw();
    const Entry b = draw();
    // Families 1 and 2 are single orbits; delta is only defined up to sign.
    bool same_entry = a.family == b.family && (a.delta == b.delta || a.delta == -b.delta);
    if (a.family >= 4) same_entry = same_entry && a.x == b.x;
    const auto ha = complex::kc_action(s.kc(), a.h);
    const auto hb = complex::kc_action(s.kc(), b.h);
    if (complex::same_kc_orbit(ha, hb).same != same_entry ||
        (complex::classify_kc(ha) == complex::classify_kc(hb)) != same_entry)
      return out.violation({{"check", "listed families are distinct orbits"}, {"h1", encode(ha)}, {"h2", encode(hb)}}), out;
  }
  return out;
}

Outcome kc_orbits_infinite(Sampler&, const SamplerConfig&) {
  Outcome out;
  std::vector<complex::PcElem> elems;
  std::set<std::string> labels;
  for (int n = 1; n <= 120; ++n) {
    elems.push_back(pc(0, 0, Rational(n, 3), 0));
    labels.insert(encode(complex::classify_kc(elems.back())).dump());
  }
  out.trials = static_cast<long>(elems.size());
  if (labels.size() != elems.size()) out.violation({{"check", "distinct labels"}});
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (complex::same_kc_orbit(elems[i], elems[j]).same)
        out.violation({{"check", "pairwise distinct orbits"}, {"h1", encode(elems[i])}, {"h2", encode(elems[j])}});
  return out;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> claims = {
      {"adjoint-closed-form", "closed-form adjoint action equals 4x4 conjugation", adjoint_closed_form},
      {"adjoint-nilpotent-stable", "the nilpotent set c1 = 0 is stable under the adjoint action", adjoint_nilpotent_stable},
      {"bracket-closed-form", "coordinate bracket equals the 4x4 commutator; [X,Y] = 2Z, [P,Q] = 2R", bracket_closed_form},
      {"classifier-roundtrip", "classify(adjoint(g, member of L)) = L for every real family", classifier_roundtrip},
      {"embedding-homomorphism", "the 4x4 embedding is a group homomorphism", embedding_homomorphism},
      {"inverse-display", "displayed inverse matrix equals embed(g^-1)", inverse_display},
      {"invariant-I", "I = f - c1 r is conjugation invariant", invariant_I},
      {"invariant-c1", "c1 = x^2 + y^2 - z^2 is conjugation invariant", invariant_c1},
      {"invariant-cone-sign-rho", "sign z (on c1 <= 0) and rho are conjugation invariant", invariant_cone_sign_rho},
      {"kc-NJ-displays", "N^{J,+-} and N^{J,P}(delta) displays equal the orbits", kc_nj_displays},
      {"kc-isotropic-coverage", "every nilpotent element of p_C^J lies in a listed family", kc_isotropic_coverage},
      {"kc-kappa-trivial", "kappa acts trivially on p_C^J", kc_kappa_trivial},
      {"kc-line-preservation", "orbits preserve the line y = xi x, xi = +-i", kc_line_preservation},
      {"kc-nilpotent-preservation", "K_C^J preserves x^2 + y^2 and the nilpotent cone", kc_nilpotent_preservation},
      {"kc-orbit-vs-display", "N^{J,+}(x,delta) display equals a single orbit", kc_orbit_vs_display},
      {"kc-orbits-infinite", "infinitely many nilpotent K_C^J orbits (distinct delta^2)", kc_orbits_infinite},
      {"kc-rigidity-x", "H(x,y,delta,0) ~ H(x',y',delta,0) iff x' = x, y' = y", kc_rigidity_x},
      {"kc-delta-sign", "H(x,y,delta,0) ~ H(x,y,delta',0) iff delta' = +-delta", kc_delta_sign},
      {"kc-union-disjoint", "listed complex nilpotent families are pairwise distinct orbits", kc_union_disjoint},
      {"kc-weight-equivariance", "K_C^J acts diagonally on weight coordinates", kc_weight_equivariance},
      {"nilpotent-orbits-infinite", "infinitely many nilpotent orbits (distinct alpha in alpha R, S + alpha R)", nilpotent_orbits_infinite},
      {"nilpotent-union-completeness", "every real nilpotent orbit is in the disjoint-union list", nilpotent_union_completeness},
      {"nilpotent-union-disjoint", "listed real nilpotent families are pairwise distinct orbits", nilpotent_union_disjoint},
      {"orbit-PiP-display", "orbit of alpha P equals {G(0,0,0,p,q,r) : pq != 0}", orbit_pip_display},
      {"orbit-PiR-point", "orbit of alpha R is a point", orbit_pir_point},
      {"orbit-PiS-display", "orbit of alpha S equals its cone display (rho = 0)", orbit_pis_display},
      {"orbit-PiT-display", "orbit of alpha T equals its cone display and the orbit of -alpha S", orbit_pit_display},
      {"orbit-PiX-display", "orbits of alpha X and alpha Y equal {c1 = alpha^2, f = alpha^2 r}", orbit_pix_display},
      {"orbit-PiZ-sheet", "orbit of alpha Z equals {c1 = -alpha^2, f = -alpha^2 r}", orbit_piz_sheet},
      {"orbit-cone-display", "orbit of alpha(S + beta P) equals {c1 = 0, z/alpha > 0, f = -alpha^3 beta^2}", orbit_cone_display},
      {"orbit-heisenberg-shift", "(I, (-q/2, 0, 0)) moves G(0,1,1,p,q,r) to G(0,1,1,p,0,r - q^2/2)", orbit_heisenberg_shift},
      {"power-identity", "G^{2k} = c1^{k-1} G^2 for k = 1..4", power_identity},
      {"sl2-Htheta-matrix-display", "displayed H_theta matrix satisfies [H_theta, Y_theta] = 2 Y_theta", sl2_htheta_display},
      {"sl2-ks-correspondence", "orbit-level KS map, realized by Cayley transforms of KS triples", sl2_ks_correspondence},
      {"sl2-relations", "sl2 basis relations, Cartan involution, KS triples and Cayley images", sl2_relations},
      {"sl2-three-nilpotent-orbits", "sl(2,R) has exactly three nilpotent orbits", sl2_three_nilpotent_orbits},
      {"sl2-triple-through", "every nonzero nilpotent E lies in an sl2-triple; KS iff ratio 2", sl2_triple_through_claim},
      {"witness-soundness", "witnesses conjugate the canonical representative to the input", witness_soundness},
  };
  return claims;
}

ClaimRecord run_claim(const ClaimDef& def, const SamplerConfig& cfg) {
  Sampler sampler(cfg, stream_id_for(def.id));
  Outcome out;
  try {
    out = def.run(sampler, cfg);
  } catch (const Error& e) {
    out.violation({{"check", "exception"}, {"error", e.code()}, {"message", e.what()}});
  }
  ClaimRecord rec;
  rec.claim_id = def.id;
  rec.status = out.flagged ? Status::Flag : Status::Pass;
  rec.finding = out.flagged ? out.finding : std::nullopt;
  rec.trials = out.trials;
  rec.description = def.description;
  rec.evidence = out.evidence;
  return rec;
}

// ---- replay ----------------------------------------------------------------------

bool replay_a1(const json& ev) {
  const auto source = io::decode_alg(ev.at("source"));
  const auto g = io::decode_group(ev.at("conjugator"));
  const auto elem = io::decode_alg(ev.at("element"));
  const Rational alpha = io::decode_rational(ev.at("alpha"));
  return adjoint(g, source) == elem && source == alpha * basis::P() &&
         !real::displayed_set_membership(elem, {real::DisplayedSet::PiP, alpha});
}

bool replay_a2(const json& ev) {
  // Invariants alone rule out every listed family: z < 0 with f = 0 only
  // occurs in the orbit of T, where rho = 0.
  const auto v = io::decode_alg(ev.at("element"));
  const Invariants inv = invariants(v);
  return inv.c1.is_zero() && !v.sl2_part_zero() && v.z.sign() < 0 && inv.f.is_zero() && inv.rho &&
         !inv.rho->is_zero();
}

bool replay_a3(const json& ev) {
  const Rational alpha = io::decode_rational(ev.at("alpha"));
  const auto reference = io::decode_alg(ev.at("reference"));
  const auto elem = io::decode_alg(ev.at("element"));
  return reference == alpha * basis::Z() &&
         real::displayed_set_membership(elem, {real::DisplayedSet::PiZ, alpha}) &&
         casimir(elem).sign() < 0 && elem.z.sign() != reference.z.sign();
}

bool replay_b1(const json& ev) {
  const auto h1 = io::decode_pc(ev.at("h1"));
  const auto h2 = io::decode_pc(ev.at("h2"));
  const complex::PcSetQuery q{complex::pc_displayed_set_from_name(ev.at("set").get<std::string>()),
                              io::decode_gauss(ev.at("x")), io::decode_gauss(ev.at("delta"))};
  return complex::displayed_set_membership_pc(h1, q) && complex::displayed_set_membership_pc(h2, q) &&
         !complex::same_kc_orbit(h1, h2).same;
}

bool replay_b2(const json& ev) {
  const auto h = io::decode_pc(ev.at("element"));
  const bool pq_nonzero = !h.p.is_zero() || !h.q.is_zero();
  return h.x.is_zero() && h.y.is_zero() && pq_nonzero && (h.p * h.p + h.q * h.q).is_zero();
}

bool replay_s1(const json& ev) {
  const auto shown = io::decode_cmat(ev.at("displayed"));
  const auto y_th = io::decode_cmat(ev.at("Y_theta"));
  return y_th == sl2::basis::Y_theta() && !(commutator(shown, y_th) == GaussRational(2) * y_th);
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.emplace_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<ClaimRecord> run_audit(const SamplerConfig& cfg, bool parallel) {
  cfg.validate();
  std::vector<ClaimRecord> records;
  if (parallel) {
    std::vector<std::future<ClaimRecord>> jobs;
    for (const auto& def : registry())
      jobs.push_back(std::async(std::launch::async, [&def, &cfg] { return run_claim(def, cfg); }));
    for (auto& job : jobs) records.push_back(job.get());
  } else {
    for (const auto& def : registry()) records.push_back(run_claim(def, cfg));
  }
  std::sort(records.begin(), records.end(),
            [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
  return records;
}

json record_json(const ClaimRecord& r) {
  return {{"claim_id", r.claim_id},
          {"status", r.status == Status::Pass ? "PASS" : "FLAG"},
          {"finding", r.finding ? json(*r.finding) : json(nullptr)},
          {"trials", r.trials},
          {"description", r.description},
          {"evidence", r.evidence}};
}

json report_json(const std::vector<ClaimRecord>& records, const SamplerConfig& cfg) {
  json claims = json::array();
  long pass = 0, flag = 0;
  for (const auto& r : records) {
    claims.push_back(record_json(r));
    (r.status == Status::Pass ? pass : flag) += 1;
  }
  return {{"config", {{"seed", cfg.seed}, {"trials", cfg.trials}, {"height_bound", cfg.height_bound}}},
          {"claims", claims},
          {"summary", {{"pass", pass}, {"flag", flag}}}};
}

std::string report_text(const std::vector<ClaimRecord>& records) {
  std::ostringstream os;
  long pass = 0, flag = 0;
  for (const auto& r : records) {
    const bool ok = r.status == Status::Pass;
    (ok ? pass : flag) += 1;
    os << (ok ? "PASS" : "FLAG") << "  " << r.claim_id;
    if (r.finding) os << " [" << *r.finding << "]";
    os << "  (" << r.trials << " trials)  " << r.description << "\n";
  }
  os << pass << " pass, " << flag << " flag\n";
  return os.str();
}

bool replay_evidence(const json& record) {
  if (record.value("status", "") != "FLAG") return false;
  const json& finding = record.at("finding");
  const json& evidence = record.at("evidence");
  if (!finding.is_string() || !evidence.is_array() || evidence.empty()) return false;
  const std::string tag = finding.get<std::string>();
  bool (*check)(const json&) = nullptr;
  if (tag == "A1") check = replay_a1;
  else if (tag == "A2") check = replay_a2;
  else if (tag == "A3") check = replay_a3;
  else if (tag == "B1") check = replay_b1;
  else if (tag == "B2") check = replay_b2;
  else if (tag == "S1") check = replay_s1;
  if (!check) return false;
  try {
    return std::all_of(evidence.begin(), evidence.end(), check);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace jacobi::audit
