#pragma once

// The complexified side: H(x,y,p,q) in p_C^J, the K_C^J action, and exact
// orbit decisions in weight coordinates.
//
// With u = a + ib (so a^2 + b^2 = 1 means u is any unit of C), k^J acts on
// (xi+, xi-, pi+, pi-) = (x+iy, x-iy, p+iq, p-iq) by (u^-2, u^2, u^-1, u).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jacobi/matrix.hpp"
#include "jacobi/rational.hpp"

namespace jacobi::complex {

using G = GaussRational;

/// sl2 block [[x, y], [y, -x]] plus (p, q).
struct PcElem {
  G x, y, p, q;
  friend bool operator==(const PcElem&, const PcElem&) = default;
};

/// (a, b, kappa) with a^2 + b^2 = 1.
class KcElem {
 public:
  /// Throws NotOnUnitQuadric.
  KcElem(G a, G b, G kappa = {});
  /// a = (u + 1/u)/2, b = (u - 1/u)/(2i).  Throws DivisionByZero for u = 0.
  static KcElem from_u(const G& u, G kappa = {});

  const G& a() const { return a_; }
  const G& b() const { return b_; }
  const G& kappa() const { return kappa_; }
  G u() const { return a_ + G::i() * b_; }

  friend bool operator==(const KcElem&, const KcElem&) = default;

 private:
  G a_, b_, kappa_;
};

PcElem kc_action(const KcElem& k, const PcElem& h);

struct WeightCoords {
  G xi_plus, xi_minus, pi_plus, pi_minus;
  friend bool operator==(const WeightCoords&, const WeightCoords&) = default;
};

/// Weights of the four coordinates under u.
inline constexpr std::array<int, 4> kWeights = {-2, 2, -1, 1};

WeightCoords weight_coords(const PcElem& h);
PcElem from_weight_coords(const WeightCoords& w);
/// Diagonal action: (u^-2 xi+, u^2 xi-, u^-1 pi+, u pi-).
WeightCoords scale_by_u(const WeightCoords& w, const G& u);

struct OrbitDecision {
  bool same = false;
  /// Set when a weight +-1 coordinate is nonzero (or both elements vanish).
  std::optional<G> u;
  /// Set when only u^2 is constrained.
  std::optional<G> u_squared;
};

OrbitDecision same_kc_orbit(const PcElem& h1, const PcElem& h2);

bool is_nilpotent_pc(const PcElem& h);
/// Rows (x,0,y,q / p,0,q,0 / y,0,-x,-p / 0,0,0,0).
Mat4<G> embed_pc(const PcElem& h);

// Orbit labels.  `support` in NonNilpotent is the zero pattern of the weight
// coordinates in the order (xi+, xi-, pi+, pi-).

struct KcZero {
  friend bool operator==(const KcZero&, const KcZero&) = default;
};
/// Only xi- nonzero: the line y = ix.
struct NJPlus {
  friend bool operator==(const NJPlus&, const NJPlus&) = default;
};
/// Only xi+ nonzero: the line y = -ix.
struct NJMinus {
  friend bool operator==(const NJMinus&, const NJMinus&) = default;
};
struct NJP {
  G delta_sq;
  friend bool operator==(const NJP&, const NJP&) = default;
};
/// xi = 0, exactly one of pi+ / pi- nonzero.  sign +1 when pi+ = 0.
struct PIsotropic {
  int sign;
  friend bool operator==(const PIsotropic&, const PIsotropic&) = default;
};
/// y = ix, p^2 + q^2 = delta_sq != 0, w0 = xi- pi+^2.
struct MixedPlus {
  G delta_sq, w0;
  friend bool operator==(const MixedPlus&, const MixedPlus&) = default;
};
/// y = -ix, p^2 + q^2 = delta_sq != 0, w0 = xi+ pi-^2.
struct MixedMinus {
  G delta_sq, w0;
  friend bool operator==(const MixedMinus&, const MixedMinus&) = default;
};
/// One xi and exactly one pi nonzero; w0 is the weight-0 monomial in the two.
struct MixedIsotropic {
  std::string side;  // "xi_plus" or "xi_minus"
  int sign;
  G w0;
  friend bool operator==(const MixedIsotropic&, const MixedIsotropic&) = default;
};
struct NonNilpotent {
  std::array<bool, 4> support;
  std::vector<G> invariants;
  friend bool operator==(const NonNilpotent&, const NonNilpotent&) = default;
};

using KcOrbitLabel = std::variant<KcZero, NJPlus, NJMinus, NJP, PIsotropic, MixedPlus, MixedMinus,
                                  MixedIsotropic, NonNilpotent>;

std::string_view family_name(const KcOrbitLabel& label);

/// Zero pattern plus a complete set of weight-0 monomials.
struct OrbitInvariants {
  std::array<bool, 4> support{};
  std::vector<G> monomials;
  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};
OrbitInvariants orbit_invariants(const WeightCoords& w);

KcOrbitLabel classify_kc(const PcElem& h);

/// The family of the nilpotent disjoint-union list the label belongs to, if any.
std::optional<std::string> listed_family(const KcOrbitLabel& label);

std::string render_text(const KcOrbitLabel& label);

// Displayed sets, evaluated verbatim.
enum class PcDisplayedSet {
  NJPlus,        // H(x, ix, 0, 0), x != 0
  NJMinus,       // H(x, -ix, 0, 0), x != 0
  NJP,           // H(0, 0, p, q), p^2 + q^2 = delta^2
  NJPlusXDelta,  // H(z, iz, p, q), p^2 + q^2 = delta^2, z unrestricted
  NJMinusXDelta, // H(z, -iz, p, q), p^2 + q^2 = delta^2
  Nilpotent,     // x^2 + y^2 = 0
};

struct PcSetQuery {
  PcDisplayedSet id;
  G x{1};
  G delta{1};
};

/// Throws UnknownSetId.
PcDisplayedSet pc_displayed_set_from_name(std::string_view name);
std::string_view pc_displayed_set_name(PcDisplayedSet id);

bool displayed_set_membership_pc(const PcElem& h, const PcSetQuery& query);

}  // namespace jacobi::complex
