#pragma once

// sl(2,R), its nilpotent orbits, sl2- and KS-triples, and the Cayley
// transform into the complexified symmetric-traceless space.

#include <string>
#include <string_view>
#include <variant>

#include "jacobi/matrix.hpp"
#include "jacobi/rational.hpp"

namespace jacobi::sl2 {

using RMat = Mat2<Rational>;
using CMat = Mat2<GaussRational>;

/// F(x,y,z) = [[x, y+z], [y-z, -x]].
struct Sl2Elem {
  Rational x, y, z;

  RMat matrix() const { return RMat{{x, y + z}, {y - z, -x}}; }
  /// Throws NotInDomain for a matrix with nonzero trace.
  static Sl2Elem from_matrix(const RMat& m);

  friend bool operator==(const Sl2Elem&, const Sl2Elem&) = default;
};

namespace basis {
inline Sl2Elem X() { return {1, 0, 0}; }
inline Sl2Elem Y() { return {0, 1, 0}; }
inline Sl2Elem Z() { return {0, 0, 1}; }
inline Sl2Elem S() { return {0, Rational(1, 2), Rational(1, 2)}; }
inline Sl2Elem T() { return {0, Rational(1, 2), Rational(-1, 2)}; }

/// i(S - T).  Satisfies the triple relations with Y_theta, X_theta.
CMat H_theta();
/// The matrix [[0, -i], [i, 0]], which is -H_theta.
CMat H_theta_displayed();
CMat X_theta();  // (S + T - iX)/2
CMat Y_theta();  // (S + T + iX)/2
}  // namespace basis

CMat complexify(const RMat& m);

struct Sl2Zero {
  friend bool operator==(const Sl2Zero&, const Sl2Zero&) = default;
};
struct NPlus {  // orbit of S: cone, z > 0
  friend bool operator==(const NPlus&, const NPlus&) = default;
};
struct NMinus {  // orbit of T: cone, z < 0
  friend bool operator==(const NMinus&, const NMinus&) = default;
};
struct Sl2Hyperbolic {
  Rational c1;
  friend bool operator==(const Sl2Hyperbolic&, const Sl2Hyperbolic&) = default;
};
/// sheet = sign z; Z lies on sheet +1.
struct Sl2Elliptic {
  Rational c1;
  int sheet;
  friend bool operator==(const Sl2Elliptic&, const Sl2Elliptic&) = default;
};

using Sl2OrbitLabel = std::variant<Sl2Zero, NPlus, NMinus, Sl2Hyperbolic, Sl2Elliptic>;

Sl2OrbitLabel classify_sl2(const Sl2Elem& v);
std::string_view label_name(const Sl2OrbitLabel& label);

/// M v M^{-1} for M in SL(2,Q) given as a matrix.
Sl2Elem conjugate(const RMat& m, const Sl2Elem& v);

template <class T>
struct Triple {
  Mat2<T> h, e, f;
  friend bool operator==(const Triple&, const Triple&) = default;
};
using RealTriple = Triple<Rational>;
using ComplexTriple = Triple<GaussRational>;

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, decided exactly.
template <class T>
bool validate_sl2_triple(const Triple<T>& t) {
  return commutator(t.h, t.e) == T(2) * t.e && commutator(t.h, t.f) == T(-2) * t.f &&
         commutator(t.e, t.f) == t.h;
}

inline RealTriple make_triple(const Sl2Elem& h, const Sl2Elem& e, const Sl2Elem& f) {
  return {h.matrix(), e.matrix(), f.matrix()};
}

/// theta(e) = -f with theta(A) = -A^t.  Throws NotATriple on invalid input.
bool is_ks_real(const RealTriple& t);
/// h in k_C, e and f symmetric traceless, conj(e) = f.  Throws NotATriple.
bool is_ks_complex(const ComplexTriple& t);

/// {(2/l) [E, E^t], E, (2/l) E^t} where [[E, E^t], E] = l E.
/// Throws ZeroElement / NotNilpotent.
RealTriple sl2_triple_through(const Sl2Elem& e);
/// The eigen-ratio l above; the triple is KS iff l = 2.
Rational normalization_ratio(const Sl2Elem& e);

/// x = i(E - F), e = (E + F + iH)/2, f = (E + F - iH)/2.  Throws NotKsReal.
ComplexTriple cayley(const RealTriple& t);

// Elements [[x, y], [y, -x]] of p_C.
enum class PcKind { Zero, NThetaPlus, NThetaMinus, NonNilpotent };

struct PcLabel {
  PcKind kind;
  GaussRational invariant;  // x^2 + y^2, only set for NonNilpotent
  friend bool operator==(const PcLabel&, const PcLabel&) = default;
};

std::string_view pc_kind_name(PcKind kind);

PcLabel classify_pc(const GaussRational& x, const GaussRational& y);
/// Reads (x, y) off a symmetric traceless matrix; throws NotInDomain otherwise.
PcLabel classify_pc(const CMat& m);

/// NPlus -> NThetaMinus, Zero -> Zero, NMinus -> NThetaPlus.  Throws NotNilpotentLabel.
PcLabel ks_map(const Sl2OrbitLabel& label);

std::string render_text(const Sl2OrbitLabel& label);
std::string render_text(const PcLabel& label);

}  // namespace jacobi::sl2
