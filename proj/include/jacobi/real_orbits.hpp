#pragma once

// Adjoint G^J-orbits in g^J: exact classification, canonical representatives,
// conjugating witnesses, and the orbit sets as literally displayed.
//
// Labels hold exact data only (signs, c1, f, I-derived constants, rho); no
// radicals are taken when labeling.  Representatives and witnesses fall back
// to long double when a needed square root is irrational.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "jacobi/jacobi.hpp"

namespace jacobi::real {

struct ZeroOrbit {
  friend bool operator==(const ZeroOrbit&, const ZeroOrbit&) = default;
};
/// The single point alpha R^J.
struct PiR {
  Rational alpha;
  friend bool operator==(const PiR&, const PiR&) = default;
};
struct PiP {
  friend bool operator==(const PiP&, const PiP&) = default;
};
struct PiS {
  friend bool operator==(const PiS&, const PiS&) = default;
};
struct PiT {
  friend bool operator==(const PiT&, const PiT&) = default;
};
/// Orbit of S^J + rho R^J, rho != 0.
struct PiSR {
  Rational rho;
  friend bool operator==(const PiSR&, const PiSR&) = default;
};
/// Orbit of T^J + rho R^J, rho != 0.
struct PiTR {
  Rational rho;
  friend bool operator==(const PiTR&, const PiTR&) = default;
};
/// Nilpotent with f != 0; sign_z * f < 0 always.
struct Cone {
  int sign_z;
  Rational f;
  friend bool operator==(const Cone&, const Cone&) = default;
};
/// c1 > 0; orbit of alpha X^J + c R^J with alpha^2 = c1.
struct Hyperbolic {
  Rational c1;
  Rational c;
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};
/// c1 < 0; orbit of sheet * alpha Z^J + c R^J with alpha^2 = -c1.
struct Elliptic {
  Rational c1;
  int sheet;
  Rational c;
  friend bool operator==(const Elliptic&, const Elliptic&) = default;
};

using OrbitLabel =
    std::variant<ZeroOrbit, PiR, PiP, PiS, PiT, PiSR, PiTR, Cone, Hyperbolic, Elliptic>;

std::string_view family_name(const OrbitLabel& label);
bool is_nilpotent_label(const OrbitLabel& label);

/// Throws NotInDomain when the parameters violate the family's constraints.
void validate(const OrbitLabel& label);

OrbitLabel classify(const JacobiAlgElem& v);

struct Representative {
  std::optional<JacobiAlgElem> exact;
  AlgElem<long double> numeric;
  bool is_exact() const { return exact.has_value(); }
};

Representative canonical_rep(const OrbitLabel& label);

/// Some rational element of the orbit: the representative when it is exact,
/// otherwise G(0, (1+c1)/2, (1-c1)/2, 0, 0, c) up to sheet.  Cone orbits
/// only have rational points when -sign_z * f is a square; NotInDomain otherwise.
JacobiAlgElem exact_member(const OrbitLabel& label);

/// Name of the family in the nilpotent disjoint-union list containing this
/// orbit, or nullopt when the list has no such family.
std::optional<std::string> listed_family(const OrbitLabel& label);

struct Witness {
  std::optional<JacobiGroupElem> exact;
  GroupElem<long double> numeric = GroupElem<long double>::identity();
  double residual = 0.0;  // max-abs coordinate error; 0 when exact
  bool is_exact() const { return exact.has_value(); }
};

/// g with adjoint(g, canonical_rep(classify(v))) = v.  Float witnesses are
/// verified against `tol`; a failure raises InternalInconsistency.
Witness witness(const JacobiAlgElem& v, double tol = 1e-9);

/// Max-abs coordinate residual of adjoint(g, rep) against v, in long double.
double witness_residual(const GroupElem<long double>& g, const AlgElem<long double>& rep,
                        const AlgElem<long double>& v);

// Orbit sets exactly as displayed, as coordinate predicates.
enum class DisplayedSet {
  PiX,            // c1 = alpha^2, f = alpha^2 r  (also stated for alpha Y^J)
  PiZ,            // c1 = -alpha^2, f = -alpha^2 r
  PiP,            // G(0,0,0,p,q,r) with pq != 0 (also stated for alpha Q^J)
  PiR,            // the point alpha R^J
  PiS,            // c1 = 0, z/alpha > 0, f = 0
  PiT,            // c1 = 0, z/alpha < 0, f = 0
  PiSWithRho,     // PiS plus the reconstructed r-dependence rho = 0
  PiTWithRho,     // PiT plus rho = 0
  PiSPlusBetaP,   // c1 = 0, z/alpha > 0, f = -alpha^3 beta^2
  Nilpotent,      // c1 = 0
};

struct SetQuery {
  DisplayedSet id;
  Rational alpha{1};
  Rational beta{1};
};

/// Parses names such as "PiX", "PiSPlusBetaP"; throws UnknownSetId.
DisplayedSet displayed_set_from_name(std::string_view name);
std::string_view displayed_set_name(DisplayedSet id);

bool displayed_set_membership(const JacobiAlgElem& v, const SetQuery& query);

/// Human-readable form, e.g. "Π(S^J + 3R^J)".
std::string render_text(const OrbitLabel& label);

}  // namespace jacobi::real
