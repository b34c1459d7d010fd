#include "jacobi/real_orbits.hpp"

#include <algorithm>
#include <cmath>

namespace jacobi::real {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// ---- witness construction, generic over Rational / long double -------------

template <class T>
using MaybeGroup = std::optional<GroupElem<T>>;

template <class T>
T lift(const Rational& v) {
  if constexpr (is_exact_v<T>)
    return v;
  else
    return v.to_long_double();
}

// M with M S M^{-1} = [[x, s], [t, -x]] for a nilpotent block with z > 0.
template <class T>
MaybeGroup<T> conjugator_from_S(const T& x, const T& s, const T& t) {
  if (!is_zero(s)) {
    auto a = field_sqrt(s);
    if (!a) return std::nullopt;
    return GroupElem<T>(*a, T(0), -x / *a, T(1) / *a);
  }
  auto c = field_sqrt(-t);
  if (!c) return std::nullopt;
  return GroupElem<T>(T(0), -(T(1) / *c), *c, T(0));
}

// M with M X M^{-1} = B, where B^2 = I.  Columns are eigenvectors of B.
template <class T>
GroupElem<T> conjugator_from_X(const T& x, const T& s, const T& t) {
  auto pick = [](T c0a, T c0b, T c1a, T c1b) -> std::pair<T, T> {
    if constexpr (is_exact_v<T>) {
      if (!is_zero(c0a) || !is_zero(c0b)) return {c0a, c0b};
      return {c1a, c1b};
    } else {
      if (std::hypot(c0a, c0b) >= std::hypot(c1a, c1b)) return {c0a, c0b};
      return {c1a, c1b};
    }
  };
  // columns of B + I and of B - I
  auto [u0, u1] = pick(x + T(1), t, s, T(1) - x);
  auto [w0, w1] = pick(x - T(1), t, s, T(-1) - x);
  const T det = u0 * w1 - u1 * w0;
  return GroupElem<T>(u0, w0 / det, u1, w1 / det);
}

// M with M Z M^{-1} = B, where B^2 = -I and B(2,1) < 0.
template <class T>
MaybeGroup<T> conjugator_from_Z(const T& x, const T& /*s*/, const T& t) {
  auto k = field_sqrt(T(1) / -t);
  if (!k) return std::nullopt;
  return GroupElem<T>(*k, -x * *k, T(0), -t * *k);
}

template <class T>
GroupElem<T> negate(const GroupElem<T>& m) {
  return GroupElem<T>(-m.a(), -m.b(), -m.c(), -m.d());
}

template <class T>
MaybeGroup<T> semisimple_witness(const GroupElem<T>& m, const AlgElem<T>& v) {
  const T s = v.upper();
  const T t = v.lower();
  const T det = -(v.x * v.x + s * t);
  const T lambda = (-(v.x * v.p) - t * v.q) / det;
  const T mu = (v.x * v.q - s * v.p) / det;
  return group_mul(GroupElem<T>::heisenberg(lambda, mu), m);
}

template <class T>
MaybeGroup<T> solve_witness(const OrbitLabel& label, const AlgElem<T>& v, const AlgElem<T>& rep) {
  const T s = v.upper();
  const T t = v.lower();

  if (std::holds_alternative<ZeroOrbit>(label) || std::holds_alternative<PiR>(label))
    return GroupElem<T>::identity();

  if (std::holds_alternative<PiP>(label)) {
    // adjoint(g, P) = (0,0,0,d,-b,-2 mu); then a p + c q = 1.
    T a = T(0), c = T(0);
    if (!is_zero(v.p))
      a = T(1) / v.p;
    else
      c = T(1) / v.q;
    return GroupElem<T>(a, -v.q, c, v.p, T(0), -v.r / T(2));
  }

  if (const auto* h = std::get_if<Hyperbolic>(&label)) {
    auto alpha = field_sqrt(lift<T>(h->c1));
    if (!alpha) return std::nullopt;
    return semisimple_witness(conjugator_from_X(v.x / *alpha, s / *alpha, t / *alpha), v);
  }

  if (const auto* e = std::get_if<Elliptic>(&label)) {
    auto alpha = field_sqrt(lift<T>(-e->c1));
    if (!alpha) return std::nullopt;
    const T scale = T(e->sheet) * *alpha;
    auto m = conjugator_from_Z(v.x / scale, s / scale, t / scale);
    if (!m) return std::nullopt;
    return semisimple_witness(*m, v);
  }

  // Nilpotent families with nonzero sl2 part.  The sl2 part of the
  // representative is S (z > 0), or T / -S (z < 0).
  const bool upper_side = std::holds_alternative<PiS>(label) ||
                          std::holds_alternative<PiSR>(label) ||
                          (std::holds_alternative<Cone>(label) && std::get<Cone>(label).sign_z > 0);
  const bool t_rep = std::holds_alternative<PiT>(label) || std::holds_alternative<PiTR>(label);

  MaybeGroup<T> m = upper_side ? conjugator_from_S(v.x, s, t) : conjugator_from_S(-v.x, -s, -t);
  if (!m) return std::nullopt;
  if (t_rep) m = group_mul(*m, GroupElem<T>(T(0), T(1), T(-1), T(0)));  // N T N^{-1} = -S

  auto to_frame = [&](const GroupElem<T>& mm) { return adjoint(group_inv(mm), v); };
  AlgElem<T> w = to_frame(*m);
  if (std::holds_alternative<Cone>(label) && sign_of(w.p) != sign_of(rep.p)) {
    m = negate(*m);
    w = to_frame(*m);
  }

  T lambda = T(0), mu = T(0);
  if (t_rep) {
    mu = w.p;
  } else if (upper_side) {
    lambda = w.q;
    if (!is_zero(rep.p)) mu = (lambda * lambda + rep.r - w.r) / (T(2) * rep.p);
  } else {
    lambda = -w.q;
    mu = (rep.r - lambda * lambda - w.r) / (T(2) * rep.p);
  }
  return group_mul(*m, GroupElem<T>::heisenberg(lambda, mu));
}

std::string signed_term(const Rational& coeff, const std::string& symbol) {
  if (coeff.sign() < 0) {
    Rational mag = -coeff;
    return " - " + (mag == Rational(1) ? "" : mag.str()) + symbol;
  }
  return " + " + (coeff == Rational(1) ? "" : coeff.str()) + symbol;
}

std::string scaled(const Rational& coeff, const std::string& symbol) {
  if (coeff == Rational(1)) return symbol;
  if (coeff == Rational(-1)) return "-" + symbol;
  return coeff.str() + symbol;
}

}  // namespace

std::string_view family_name(const OrbitLabel& label) {
  return std::visit(overloaded{
                        [](const ZeroOrbit&) { return std::string_view("Zero"); },
                        [](const PiR&) { return std::string_view("PiR"); },
                        [](const PiP&) { return std::string_view("PiP"); },
                        [](const PiS&) { return std::string_view("PiS"); },
                        [](const PiT&) { return std::string_view("PiT"); },
                        [](const PiSR&) { return std::string_view("PiS_R"); },
                        [](const PiTR&) { return std::string_view("PiT_R"); },
                        [](const Cone&) { return std::string_view("Cone"); },
                        [](const Hyperbolic&) { return std::string_view("Hyperbolic"); },
                        [](const Elliptic&) { return std::string_view("Elliptic"); },
                    },
                    label);
}

bool is_nilpotent_label(const OrbitLabel& label) {
  return !std::holds_alternative<Hyperbolic>(label) && !std::holds_alternative<Elliptic>(label);
}

void validate(const OrbitLabel& label) {
  auto fail = [&](const char* why) {
    throw NotInDomain(std::string(family_name(label)) + ": " + why);
  };
  std::visit(overloaded{
                 [](const ZeroOrbit&) {}, [](const PiP&) {}, [](const PiS&) {}, [](const PiT&) {},
                 [&](const PiR& l) { if (l.alpha.is_zero()) fail("alpha must be nonzero"); },
                 [&](const PiSR& l) { if (l.rho.is_zero()) fail("rho must be nonzero"); },
                 [&](const PiTR& l) { if (l.rho.is_zero()) fail("rho must be nonzero"); },
                 [&](const Cone& l) {
                   if (l.sign_z != 1 && l.sign_z != -1) fail("sign_z must be +1 or -1");
                   if (l.sign_z * l.f.sign() >= 0) fail("requires sign_z * f < 0");
                 },
                 [&](const Hyperbolic& l) { if (l.c1.sign() <= 0) fail("requires c1 > 0"); },
                 [&](const Elliptic& l) {
                   if (l.c1.sign() >= 0) fail("requires c1 < 0");
                   if (l.sheet != 1 && l.sheet != -1) fail("sheet must be +1 or -1");
                 },
             },
             label);
}

OrbitLabel classify(const JacobiAlgElem& v) {
  const Invariants inv = invariants(v);
  if (inv.c1.sign() > 0) return Hyperbolic{inv.c1, -inv.I / inv.c1};
  if (inv.c1.sign() < 0) return Elliptic{inv.c1, v.z.sign(), -inv.I / inv.c1};

  if (v.sl2_part_zero()) {
    if (!v.p.is_zero() || !v.q.is_zero()) return PiP{};
    if (v.r.is_zero()) return ZeroOrbit{};
    return PiR{v.r};
  }
  // On the cone z = 0 forces x = y = 0, so sign z is defined here.
  const int sz = v.z.sign();
  if (!inv.f.is_zero()) return Cone{sz, inv.f};
  const Rational& rho = *inv.rho;
  if (rho.is_zero()) return sz > 0 ? OrbitLabel{PiS{}} : OrbitLabel{PiT{}};
  return sz > 0 ? OrbitLabel{PiSR{rho}} : OrbitLabel{PiTR{rho}};
}

Representative canonical_rep(const OrbitLabel& label) {
  validate(label);
  using basis::P, basis::R, basis::S, basis::T, basis::X, basis::Z;

  // Representative = scale * base + r_coeff * R, with scale a square root.
  auto radical_rep = [](const Rational& radicand, const Rational& sign, const JacobiAlgElem& base,
                        const JacobiAlgElem& rest) {
    Representative rep;
    if (auto root = radicand.exact_sqrt()) rep.exact = (sign * *root) * base + rest;
    const long double root_ld = std::sqrt(radicand.to_long_double());
    rep.numeric = (sign.to_long_double() * root_ld) * to_numeric(base) + to_numeric(rest);
    return rep;
  };

  return std::visit(
      overloaded{
          [](const ZeroOrbit&) { return Representative{JacobiAlgElem{}, {}}; },
          [](const PiR& l) { JacobiAlgElem v = l.alpha * R(); return Representative{v, to_numeric(v)}; },
          [](const PiP&) { return Representative{P(), to_numeric(P())}; },
          [](const PiS&) { return Representative{S(), to_numeric(S())}; },
          [](const PiT&) { return Representative{T(), to_numeric(T())}; },
          [](const PiSR& l) { JacobiAlgElem v = S() + l.rho * R(); return Representative{v, to_numeric(v)}; },
          [](const PiTR& l) { JacobiAlgElem v = T() + l.rho * R(); return Representative{v, to_numeric(v)}; },
          [&](const Cone& l) {
            // +1: S + beta P with beta^2 = -f.  -1: -(S + beta P) with beta^2 = f.
            const Rational sign(l.sign_z);
            return radical_rep(-sign * l.f, sign, P(), sign * S());
          },
          [&](const Hyperbolic& l) { return radical_rep(l.c1, Rational(1), X(), l.c * R()); },
          [&](const Elliptic& l) { return radical_rep(-l.c1, Rational(l.sheet), Z(), l.c * R()); },
      },
      label);
}

JacobiAlgElem exact_member(const OrbitLabel& label) {
  const Representative rep = canonical_rep(label);
  if (rep.exact) return *rep.exact;
  // sl2 block [[0, s], [t, 0]] with s t = c1; then I = -c1 r, so r = c.
  auto block = [](const Rational& s, const Rational& t, const Rational& c) {
    const Rational half(1, 2);
    return JacobiAlgElem{0, half * (s + t), half * (s - t), 0, 0, c};
  };
  if (const auto* h = std::get_if<Hyperbolic>(&label)) return block(1, h->c1, h->c);
  if (const auto* e = std::get_if<Elliptic>(&label))
    return block(Rational(e->sheet), Rational(e->sheet) * e->c1, e->c);
  throw NotInDomain(render_text(label) + " has no rational points");
}

std::optional<std::string> listed_family(const OrbitLabel& label) {
  return std::visit(
      overloaded{
          [](const ZeroOrbit&) -> std::optional<std::string> { return "{0}"; },
          [](const PiS&) -> std::optional<std::string> { return "Π(S^J)"; },
          [](const PiT&) -> std::optional<std::string> { return "Π(T^J)"; },
          [](const PiP&) -> std::optional<std::string> { return "Π(P^J)"; },
          [](const PiR&) -> std::optional<std::string> { return "Π(αR^J)"; },
          [](const PiSR&) -> std::optional<std::string> { return "Π(S^J + αR^J)"; },
          [](const Cone&) -> std::optional<std::string> { return "Π(α(S^J + P^J))"; },
          [](const auto&) -> std::optional<std::string> { return std::nullopt; },
      },
      label);
}

double witness_residual(const GroupElem<long double>& g, const AlgElem<long double>& rep,
                        const AlgElem<long double>& v) {
  const AlgElem<long double> diff = adjoint(g, rep) - v;
  const long double worst = std::max({std::fabs(diff.x), std::fabs(diff.y), std::fabs(diff.z),
                                      std::fabs(diff.p), std::fabs(diff.q), std::fabs(diff.r)});
  return static_cast<double>(worst);
}

Witness witness(const JacobiAlgElem& v, double tol) {
  const OrbitLabel label = classify(v);
  const Representative rep = canonical_rep(label);
  Witness out;
  if (rep.exact) {
    if (auto g = solve_witness<Rational>(label, v, *rep.exact)) {
      if (!(adjoint(*g, *rep.exact) == v))
        throw InternalInconsistency("exact witness does not conjugate the representative");
      out.numeric = to_numeric(*g);
      out.exact = std::move(g);
      return out;
    }
  }
  const AlgElem<long double> target = to_numeric(v);
  auto g = solve_witness<long double>(label, target, rep.numeric);
  if (!g) throw InternalInconsistency("no real witness for " + std::string(family_name(label)));
  out.numeric = *g;
  out.residual = witness_residual(*g, rep.numeric, target);
  if (!(out.residual <= tol))
    throw InternalInconsistency("float witness residual " + std::to_string(out.residual) +
                                " exceeds tolerance");
  return out;
}

DisplayedSet displayed_set_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, DisplayedSet> table[] = {
      {"PiX", DisplayedSet::PiX},
      {"PiY", DisplayedSet::PiX},
      {"PiZ", DisplayedSet::PiZ},
      {"PiP", DisplayedSet::PiP},
      {"PiQ", DisplayedSet::PiP},
      {"PiR", DisplayedSet::PiR},
      {"PiS", DisplayedSet::PiS},
      {"PiT", DisplayedSet::PiT},
      {"PiSWithRho", DisplayedSet::PiSWithRho},
      {"PiTWithRho", DisplayedSet::PiTWithRho},
      {"PiSPlusBetaP", DisplayedSet::PiSPlusBetaP},
      {"Nilpotent", DisplayedSet::Nilpotent},
  };
  for (const auto& [key, id] : table)
    if (key == name) return id;
  throw UnknownSetId("unknown orbit set '" + std::string(name) + "'");
}

std::string_view displayed_set_name(DisplayedSet id) {
  switch (id) {
    case DisplayedSet::PiX: return "PiX";
    case DisplayedSet::PiZ: return "PiZ";
    case DisplayedSet::PiP: return "PiP";
    case DisplayedSet::PiR: return "PiR";
    case DisplayedSet::PiS: return "PiS";
    case DisplayedSet::PiT: return "PiT";
    case DisplayedSet::PiSWithRho: return "PiSWithRho";
    case DisplayedSet::PiTWithRho: return "PiTWithRho";
    case DisplayedSet::PiSPlusBetaP: return "PiSPlusBetaP";
    case DisplayedSet::Nilpotent: return "Nilpotent";
  }
  return "?";
}

bool displayed_set_membership(const JacobiAlgElem& v, const SetQuery& query) {
  const Rational& alpha = query.alpha;
  if (query.id != DisplayedSet::Nilpotent && alpha.is_zero())
    throw NotInDomain("displayed orbit sets need alpha != 0");
  const Invariants inv = invariants(v);
  const Rational a2 = alpha * alpha;
  const bool z_over_alpha_pos = v.z.sign() * alpha.sign() > 0;
  const bool z_over_alpha_neg = v.z.sign() * alpha.sign() < 0;
  const bool on_cone = inv.c1.is_zero();
  switch (query.id) {
    case DisplayedSet::PiX:
      return inv.c1 == a2 && inv.f == a2 * v.r;
    case DisplayedSet::PiZ:
      return inv.c1 == -a2 && inv.f == -a2 * v.r;
    case DisplayedSet::PiP:
      return v.sl2_part_zero() && !(v.p * v.q).is_zero();
    case DisplayedSet::PiR:
      return v == alpha * basis::R();
    case DisplayedSet::PiS:
      return on_cone && z_over_alpha_pos && inv.f.is_zero();
    case DisplayedSet::PiT:
      return on_cone && z_over_alpha_neg && inv.f.is_zero();
    case DisplayedSet::PiSWithRho:
      return on_cone && z_over_alpha_pos && inv.f.is_zero() && inv.rho && inv.rho->is_zero();
    case DisplayedSet::PiTWithRho:
      return on_cone && z_over_alpha_neg && inv.f.is_zero() && inv.rho && inv.rho->is_zero();
    case DisplayedSet::PiSPlusBetaP:
      if (query.beta.is_zero()) throw NotInDomain("PiSPlusBetaP needs beta != 0");
      return on_cone && z_over_alpha_pos && inv.f == -(a2 * alpha) * query.beta * query.beta;
    case DisplayedSet::Nilpotent:
      return on_cone;
  }
  return false;
}

std::string render_text(const OrbitLabel& label) {
  return std::visit(
      overloaded{
          [](const ZeroOrbit&) { return std::string("{0}"); },
          [](const PiR& l) { return "Π(" + scaled(l.alpha, "R^J") + ")"; },
          [](const PiP&) { return std::string("Π(P^J)"); },
          [](const PiS&) { return std::string("Π(S^J)"); },
          [](const PiT&) { return std::string("Π(T^J)"); },
          [](const PiSR& l) { return "Π(S^J" + signed_term(l.rho, "R^J") + ")"; },
          [](const PiTR& l) { return "Π(T^J" + signed_term(l.rho, "R^J") + ")"; },
          [](const Cone& l) {
            const std::string base = l.sign_z > 0 ? "Π(S^J + βP^J)" : "Π(-S^J - βP^J)";
            return base + ", β² = " + (l.sign_z > 0 ? (-l.f).str() : l.f.str());
          },
          [](const Hyperbolic& l) {
            return "Π(αX^J" + signed_term(l.c, "R^J") + "), α² = " + l.c1.str();
          },
          [](const Elliptic& l) {
            return std::string(l.sheet > 0 ? "Π(αZ^J" : "Π(-αZ^J") + signed_term(l.c, "R^J") +
                   "), α² = " + (-l.c1).str();
          },
      },
      label);
}

}  // namespace jacobi::real
