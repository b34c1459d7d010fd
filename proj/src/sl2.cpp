#include "jacobi/sl2.hpp"

namespace jacobi::sl2 {

namespace {

const GaussRational kI = GaussRational::i();

RMat transpose_neg(const RMat& m) { return -m.transpose(); }

CMat conj(const CMat& m) {
  CMat out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = m(i, j).conj();
  return out;
}

bool in_k_c(const CMat& m) {
  return m(0, 0).is_zero() && m(1, 1).is_zero() && m(0, 1) == -m(1, 0);
}

bool in_p_c(const CMat& m) { return m(0, 1) == m(1, 0) && m(0, 0) == -m(1, 1); }

}  // namespace

Sl2Elem Sl2Elem::from_matrix(const RMat& m) {
  if (!(m(0, 0) + m(1, 1)).is_zero()) throw NotInDomain("sl2 matrix must be traceless");
  const Rational half(1, 2);
  return {m(0, 0), half * (m(0, 1) + m(1, 0)), half * (m(0, 1) - m(1, 0))};
}

namespace basis {
CMat H_theta() { return kI * complexify(S().matrix() - T().matrix()); }
CMat H_theta_displayed() { return CMat{{0, -kI}, {kI, 0}}; }
CMat X_theta() {
  const GaussRational half = Rational(1, 2);
  return half * (complexify(S().matrix() + T().matrix()) - kI * complexify(X().matrix()));
}
CMat Y_theta() {
  const GaussRational half = Rational(1, 2);
  return half * (complexify(S().matrix() + T().matrix()) + kI * complexify(X().matrix()));
}
}  // namespace basis

CMat complexify(const RMat& m) {
  CMat out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = m(i, j);
  return out;
}

Sl2OrbitLabel classify_sl2(const Sl2Elem& v) {
  const Rational c1 = v.x * v.x + v.y * v.y - v.z * v.z;
  if (c1.sign() > 0) return Sl2Hyperbolic{c1};
  if (c1.sign() < 0) return Sl2Elliptic{c1, v.z.sign()};
  if (v.z.is_zero()) return Sl2Zero{};  // c1 = 0 and z = 0 force x = y = 0
  return v.z.sign() > 0 ? Sl2OrbitLabel{NPlus{}} : Sl2OrbitLabel{NMinus{}};
}

std::string_view label_name(const Sl2OrbitLabel& label) {
  static constexpr std::string_view names[] = {"Zero", "NPlus", "NMinus", "Hyperbolic", "Elliptic"};
  return names[label.index()];
}

Sl2Elem conjugate(const RMat& m, const Sl2Elem& v) {
  return Sl2Elem::from_matrix(m * v.matrix() * inverse(m));
}

bool is_ks_real(const RealTriple& t) {
  if (!validate_sl2_triple(t)) throw NotATriple("input is not an sl2-triple");
  return transpose_neg(t.e) == -t.f;
}

bool is_ks_complex(const ComplexTriple& t) {
  if (!validate_sl2_triple(t)) throw NotATriple("input is not an sl2-triple");
  return in_k_c(t.h) && in_p_c(t.e) && in_p_c(t.f) && conj(t.e) == t.f;
}

Rational normalization_ratio(const Sl2Elem& e) {
  if (e.x.is_zero() && e.y.is_zero() && e.z.is_zero()) throw ZeroElement("E must be nonzero");
  if (!(e.x * e.x + e.y * e.y - e.z * e.z).is_zero()) throw NotNilpotent("E must be nilpotent");
  const RMat em = e.matrix();
  const RMat image = commutator(commutator(em, em.transpose()), em);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (em(i, j).is_zero()) continue;
      const Rational ratio = image(i, j) / em(i, j);
      if (!(ratio * em == image) || ratio.sign() <= 0)
        throw InternalInconsistency("[[E,E^t],E] is not a positive multiple of E");
      return ratio;
    }
  throw InternalInconsistency("unreachable: nonzero E has a nonzero entry");
}

RealTriple sl2_triple_through(const Sl2Elem& e) {
  const Rational scale = Rational(2) / normalization_ratio(e);
  const RMat em = e.matrix();
  RealTriple t{scale * commutator(em, em.transpose()), em, scale * em.transpose()};
  if (!validate_sl2_triple(t)) throw InternalInconsistency("normalized triple fails the relations");
  return t;
}

ComplexTriple cayley(const RealTriple& t) {
  if (!validate_sl2_triple(t) || !is_ks_real(t)) throw NotKsReal("cayley needs a real KS-triple");
  const CMat h = complexify(t.h);
  const CMat e = complexify(t.e);
  const CMat f = complexify(t.f);
  const GaussRational half = Rational(1, 2);
  return {kI * (e - f), half * (e + f + kI * h), half * (e + f - kI * h)};
}

std::string_view pc_kind_name(PcKind kind) {
  switch (kind) {
    case PcKind::Zero: return "Zero";
    case PcKind::NThetaPlus: return "NThetaPlus";
    case PcKind::NThetaMinus: return "NThetaMinus";
    case PcKind::NonNilpotent: return "NonNilpotent";
  }
  return "?";
}

PcLabel classify_pc(const GaussRational& x, const GaussRational& y) {
  if (x.is_zero() && y.is_zero()) return {PcKind::Zero, {}};
  if (y == kI * x) return {PcKind::NThetaPlus, {}};
  if (y == -(kI * x)) return {PcKind::NThetaMinus, {}};
  return {PcKind::NonNilpotent, x * x + y * y};
}

PcLabel classify_pc(const CMat& m) {
  if (!in_p_c(m)) throw NotInDomain("matrix is not symmetric traceless");
  return classify_pc(m(0, 0), m(0, 1));
}

PcLabel ks_map(const Sl2OrbitLabel& label) {
  if (std::holds_alternative<Sl2Zero>(label)) return {PcKind::Zero, {}};
  if (std::holds_alternative<NPlus>(label)) return {PcKind::NThetaMinus, {}};
  if (std::holds_alternative<NMinus>(label)) return {PcKind::NThetaPlus, {}};
  throw NotNilpotentLabel("ks_map is defined on nilpotent labels only");
}

std::string render_text(const Sl2OrbitLabel& label) {
  if (const auto* h = std::get_if<Sl2Hyperbolic>(&label)) return "Hyperbolic(c1 = " + h->c1.str() + ")";
  if (const auto* e = std::get_if<Sl2Elliptic>(&label))
    return "Elliptic(c1 = " + e->c1.str() + ", sheet " + (e->sheet > 0 ? "+" : "-") + ")";
  if (std::holds_alternative<NPlus>(label)) return "N_R^+";
  if (std::holds_alternative<NMinus>(label)) return "N_R^-";
  return "{0}";
}

std::string render_text(const PcLabel& label) {
  switch (label.kind) {
    case PcKind::Zero: return "{0}";
    case PcKind::NThetaPlus: return "N_θ^+";
    case PcKind::NThetaMinus: return "N_θ^-";
    case PcKind::NonNilpotent: return "non-nilpotent(x² + y² = " + label.invariant.str() + ")";
  }
  return "?";
}

}  // namespace jacobi::sl2
