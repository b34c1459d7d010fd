#include "jacobi/complex_orbits.hpp"

namespace jacobi::complex {

namespace {

const G kI = G::i();

std::array<G, 4> as_array(const WeightCoords& w) {
  return {w.xi_plus, w.xi_minus, w.pi_plus, w.pi_minus};
}

std::array<bool, 4> support_of(const WeightCoords& w) {
  const auto c = as_array(w);
  return {!c[0].is_zero(), !c[1].is_zero(), !c[2].is_zero(), !c[3].is_zero()};
}

// Candidate u (or u^2) from a pair of coordinates with matching support.
struct Constraint {
  std::optional<G> u;
  std::optional<G> u_squared;
};

Constraint solve_scaling(const WeightCoords& w1, const WeightCoords& w2) {
  if (!w1.pi_minus.is_zero()) return {w2.pi_minus / w1.pi_minus, std::nullopt};
  if (!w1.pi_plus.is_zero()) return {w1.pi_plus / w2.pi_plus, std::nullopt};
  if (!w1.xi_minus.is_zero()) return {std::nullopt, w2.xi_minus / w1.xi_minus};
  if (!w1.xi_plus.is_zero()) return {std::nullopt, w1.xi_plus / w2.xi_plus};
  return {G(1), std::nullopt};
}

}  // namespace

KcElem::KcElem(G a, G b, G kappa) : a_(std::move(a)), b_(std::move(b)), kappa_(std::move(kappa)) {
  if (!(a_ * a_ + b_ * b_ == G(1))) throw NotOnUnitQuadric();
}

KcElem KcElem::from_u(const G& u, G kappa) {
  const G inv = u.inverse();
  const G half = Rational(1, 2);
  return KcElem(half * (u + inv), (u - inv) / (G(2) * kI), std::move(kappa));
}

PcElem kc_action(const KcElem& k, const PcElem& h) {
  const G& a = k.a();
  const G& b = k.b();
  const G diff = a * a - b * b;
  const G two_ab = G(2) * a * b;
  return {diff * h.x + two_ab * h.y, -(two_ab * h.x) + diff * h.y, a * h.p + b * h.q,
          a * h.q - b * h.p};
}

WeightCoords weight_coords(const PcElem& h) {
  return {h.x + kI * h.y, h.x - kI * h.y, h.p + kI * h.q, h.p - kI * h.q};
}

PcElem from_weight_coords(const WeightCoords& w) {
  const G half = Rational(1, 2);
  const G half_over_i = half / kI;
  return {half * (w.xi_plus + w.xi_minus), half_over_i * (w.xi_plus - w.xi_minus),
          half * (w.pi_plus + w.pi_minus), half_over_i * (w.pi_plus - w.pi_minus)};
}

WeightCoords scale_by_u(const WeightCoords& w, const G& u) {
  const G inv = u.inverse();
  return {inv * inv * w.xi_plus, u * u * w.xi_minus, inv * w.pi_plus, u * w.pi_minus};
}

OrbitDecision same_kc_orbit(const PcElem& h1, const PcElem& h2) {
  const WeightCoords w1 = weight_coords(h1);
  const WeightCoords w2 = weight_coords(h2);
  OrbitDecision out;
  if (support_of(w1) != support_of(w2)) return out;

  const Constraint c = solve_scaling(w1, w2);
  if (c.u) {
    out.same = scale_by_u(w1, *c.u) == w2;
    if (out.same) out.u = c.u;
    return out;
  }
  // Only xi coordinates are nonzero: every nonzero t = u^2 has a complex
  // square root, so agreement of the two xi ratios is all that is needed.
  const G& t = *c.u_squared;
  const bool plus_ok = w1.xi_plus.is_zero() || w1.xi_plus == t * w2.xi_plus;
  const bool minus_ok = w1.xi_minus.is_zero() || t * w1.xi_minus == w2.xi_minus;
  out.same = plus_ok && minus_ok;
  if (out.same) out.u_squared = t;
  return out;
}

Mat4<G> embed_pc(const PcElem& h) {
  return Mat4<G>{{h.x, 0, h.y, h.q}, {h.p, 0, h.q, 0}, {h.y, 0, -h.x, -h.p}, {0, 0, 0, 0}};
}

bool is_nilpotent_pc(const PcElem& h) {
  const bool by_invariant = (h.x * h.x + h.y * h.y).is_zero();
  const bool by_power = power(embed_pc(h), 4).is_zero();
  if (by_invariant != by_power)
    throw InternalInconsistency("x^2 + y^2 = 0 disagrees with the fourth matrix power");
  return by_invariant;
}

OrbitInvariants orbit_invariants(const WeightCoords& w) {
  OrbitInvariants out;
  out.support = support_of(w);
  const auto coords = as_array(w);
  const auto& s = out.support;

  int pivot = -1;
  if (s[1] && s[2])
    pivot = 2;
  else if (s[3])
    pivot = 3;
  else if (s[2])
    pivot = 2;

  if (pivot < 0) {
    if (s[0] && s[1]) out.monomials.push_back(coords[0] * coords[1]);
    return out;
  }
  const int eps = kWeights[pivot];
  for (int i = 0; i < 4; ++i) {
    if (i == pivot || !s[i]) continue;
    out.monomials.push_back(coords[i] * coords[pivot].pow(-kWeights[i] * eps));
  }
  return out;
}

KcOrbitLabel classify_kc(const PcElem& h) {
  const WeightCoords w = weight_coords(h);
  const OrbitInvariants inv = orbit_invariants(w);
  const auto& s = inv.support;
  const bool xp = s[0], xm = s[1], pp = s[2], pm = s[3];

  if (xp && xm) return NonNilpotent{s, inv.monomials};
  if (!xp && !xm) {
    if (pp && pm) return NJP{w.pi_plus * w.pi_minus};
    if (pm) return PIsotropic{+1};
    if (pp) return PIsotropic{-1};
    return KcZero{};
  }
  if (!pp && !pm) return xm ? KcOrbitLabel{NJPlus{}} : KcOrbitLabel{NJMinus{}};
  if (pp && pm) {
    const G delta_sq = w.pi_plus * w.pi_minus;
    if (xm) return MixedPlus{delta_sq, w.xi_minus * w.pi_plus * w.pi_plus};
    return MixedMinus{delta_sq, w.xi_plus * w.pi_minus * w.pi_minus};
  }
  // One xi, one pi: a single weight-0 monomial.
  return MixedIsotropic{xm ? "xi_minus" : "xi_plus", pm ? +1 : -1, inv.monomials.at(0)};
}

std::string_view family_name(const KcOrbitLabel& label) {
  static constexpr std::string_view names[] = {"Zero",       "NJPlus",     "NJMinus",
                                               "NJP",        "PIsotropic", "MixedPlus",
                                               "MixedMinus", "MixedIsotropic", "NonNilpotent"};
  return names[label.index()];
}

std::optional<std::string> listed_family(const KcOrbitLabel& label) {
  if (std::holds_alternative<KcZero>(label)) return "{0}";
  if (std::holds_alternative<NJPlus>(label)) return "N^{J,+}";
  if (std::holds_alternative<NJMinus>(label)) return "N^{J,-}";
  if (std::holds_alternative<NJP>(label)) return "N^{J,P}(delta)";
  if (std::holds_alternative<MixedPlus>(label)) return "N^{J,+}(x,delta)";
  if (std::holds_alternative<MixedMinus>(label)) return "N^{J,-}(x,delta)";
  return std::nullopt;
}

std::string render_text(const KcOrbitLabel& label) {
  struct Visitor {
    std::string operator()(const KcZero&) const { return "{0}"; }
    std::string operator()(const NJPlus&) const { return "N_θ^{J,+}"; }
    std::string operator()(const NJMinus&) const { return "N_θ^{J,-}"; }
    std::string operator()(const NJP& l) const { return "N_θ^{J,P}(δ² = " + l.delta_sq.str() + ")"; }
    std::string operator()(const PIsotropic& l) const {
      return std::string("isotropic (p,q), ") + (l.sign > 0 ? "p + iq = 0" : "p - iq = 0");
    }
    std::string operator()(const MixedPlus& l) const {
      return "N_θ^{J,+}(δ² = " + l.delta_sq.str() + ", ξ₋π₊² = " + l.w0.str() + ")";
    }
    std::string operator()(const MixedMinus& l) const {
      return "N_θ^{J,-}(δ² = " + l.delta_sq.str() + ", ξ₊π₋² = " + l.w0.str() + ")";
    }
    std::string operator()(const MixedIsotropic& l) const {
      return "mixed isotropic (" + l.side + ", " + (l.sign > 0 ? "p + iq = 0" : "p - iq = 0") +
             ", w0 = " + l.w0.str() + ")";
    }
    std::string operator()(const NonNilpotent& l) const {
      std::string out = "non-nilpotent(";
      for (std::size_t i = 0; i < l.invariants.size(); ++i)
        out += (i ? ", " : "") + l.invariants[i].str();
      return out + ")";
    }
  };
  return std::visit(Visitor{}, label);
}

PcDisplayedSet pc_displayed_set_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, PcDisplayedSet> table[] = {
      {"NJPlus", PcDisplayedSet::NJPlus},
      {"NJMinus", PcDisplayedSet::NJMinus},
      {"NJP", PcDisplayedSet::NJP},
      {"NJQ", PcDisplayedSet::NJP},
      {"NJPlusXDelta", PcDisplayedSet::NJPlusXDelta},
      {"NJMinusXDelta", PcDisplayedSet::NJMinusXDelta},
      {"Nilpotent", PcDisplayedSet::Nilpotent},
  };
  for (const auto& [key, id] : table)
    if (key == name) return id;
  throw UnknownSetId("unknown p_C^J set '" + std::string(name) + "'");
}

std::string_view pc_displayed_set_name(PcDisplayedSet id) {
  switch (id) {
    case PcDisplayedSet::NJPlus: return "NJPlus";
    case PcDisplayedSet::NJMinus: return "NJMinus";
    case PcDisplayedSet::NJP: return "NJP";
    case PcDisplayedSet::NJPlusXDelta: return "NJPlusXDelta";
    case PcDisplayedSet::NJMinusXDelta: return "NJMinusXDelta";
    case PcDisplayedSet::Nilpotent: return "Nilpotent";
  }
  return "?";
}

bool displayed_set_membership_pc(const PcElem& h, const PcSetQuery& query) {
  const bool pq_zero = h.p.is_zero() && h.q.is_zero();
  const bool on_circle = h.p * h.p + h.q * h.q == query.delta * query.delta;
  switch (query.id) {
    case PcDisplayedSet::NJPlus:
      return !h.x.is_zero() && h.y == kI * h.x && pq_zero;
    case PcDisplayedSet::NJMinus:
      return !h.x.is_zero() && h.y == -(kI * h.x) && pq_zero;
    case PcDisplayedSet::NJP:
      if (query.delta.is_zero()) throw NotInDomain("delta must be nonzero");
      return h.x.is_zero() && h.y.is_zero() && on_circle;
    case PcDisplayedSet::NJPlusXDelta:
      if (query.x.is_zero()) throw NotInDomain("x must be nonzero");
      return h.y == kI * h.x && on_circle;
    case PcDisplayedSet::NJMinusXDelta:
      if (query.x.is_zero()) throw NotInDomain("x must be nonzero");
      return h.y == -(kI * h.x) && on_circle;
    case PcDisplayedSet::Nilpotent:
      return (h.x * h.x + h.y * h.y).is_zero();
  }
  return false;
}

}  // namespace jacobi::complex
