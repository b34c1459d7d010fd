#pragma once

// The Jacobi group G^J = SL(2,R) x H_R and its Lie algebra g^J.
//
// Algebra elements use cone coordinates (x,y,z,p,q,r): the sl2 block is
// [[x, y+z], [y-z, -x]].  Both the algebra and the group embed into 4x4
// matrices of sp(4,R) / Sp(4,R); the embeddings are the ground truth that the
// closed-form formulas in this header are checked against.

#include <complex>
#include <cstddef>
#include <optional>

#include "jacobi/matrix.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

template <class T>
struct AlgElem {
  T x{}, y{}, z{}, p{}, q{}, r{};

  /// Entry coordinates of the sl2 block: (1,2) entry and (2,1) entry.
  T upper() const { return y + z; }
  T lower() const { return y - z; }

  AlgElem& operator+=(const AlgElem& o) {
    x += o.x; y += o.y; z += o.z; p += o.p; q += o.q; r += o.r;
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    x -= o.x; y -= o.y; z -= o.z; p -= o.p; q -= o.q; r -= o.r;
    return *this;
  }
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator-(const AlgElem& a) { return T(-1) * a; }
  friend AlgElem operator*(const T& s, const AlgElem& a) {
    return {s * a.x, s * a.y, s * a.z, s * a.p, s * a.q, s * a.r};
  }
  friend bool operator==(const AlgElem&, const AlgElem&) = default;

  bool is_zero() const {
    return jacobi::is_zero(x) && jacobi::is_zero(y) && jacobi::is_zero(z) && jacobi::is_zero(p) &&
           jacobi::is_zero(q) && jacobi::is_zero(r);
  }
  bool sl2_part_zero() const {
    return jacobi::is_zero(x) && jacobi::is_zero(y) && jacobi::is_zero(z);
  }
};

using JacobiAlgElem = AlgElem<Rational>;

/// Element (M, (lambda, mu, kappa)) with M = [[a, b], [c, d]].
/// For exact scalars the constructor enforces ad - bc = 1.
template <class T>
class GroupElem {
 public:
  GroupElem(T a, T b, T c, T d, T lambda = T{}, T mu = T{}, T kappa = T{})
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        lambda_(std::move(lambda)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
    if constexpr (is_exact_v<T>) {
      if (!(a_ * d_ - b_ * c_ == T(1))) throw NotUnimodular();
    }
  }

  static GroupElem identity() { return GroupElem(T(1), T(0), T(0), T(1)); }
  static GroupElem heisenberg(T lambda, T mu, T kappa = T{}) {
    return GroupElem(T(1), T(0), T(0), T(1), std::move(lambda), std::move(mu), std::move(kappa));
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }
  const T& lambda() const { return lambda_; }
  const T& mu() const { return mu_; }
  const T& kappa() const { return kappa_; }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;

 private:
  T a_, b_, c_, d_, lambda_, mu_, kappa_;
};

using JacobiGroupElem = GroupElem<Rational>;

namespace basis {
inline JacobiAlgElem X() { return {1, 0, 0, 0, 0, 0}; }
inline JacobiAlgElem Y() { return {0, 1, 0, 0, 0, 0}; }
inline JacobiAlgElem Z() { return {0, 0, 1, 0, 0, 0}; }
inline JacobiAlgElem P() { return {0, 0, 0, 1, 0, 0}; }
inline JacobiAlgElem Q() { return {0, 0, 0, 0, 1, 0}; }
inline JacobiAlgElem R() { return {0, 0, 0, 0, 0, 1}; }
/// S = (Y + Z)/2 and T = (Y - Z)/2.
inline JacobiAlgElem S() { return {0, Rational(1, 2), Rational(1, 2), 0, 0, 0}; }
inline JacobiAlgElem T() { return {0, Rational(1, 2), Rational(-1, 2), 0, 0, 0}; }
}  // namespace basis

// Group law: (M,h)(M',h') = (MM', (l~ + l', m~ + m', k + k' + l~ m' - l' m~))
// with (l~, m~) = (l, m) M'.
template <class T>
GroupElem<T> group_mul(const GroupElem<T>& g1, const GroupElem<T>& g2) {
  const T lt = g1.lambda() * g2.a() + g1.mu() * g2.c();
  const T mt = g1.lambda() * g2.b() + g1.mu() * g2.d();
  return GroupElem<T>(g1.a() * g2.a() + g1.b() * g2.c(), g1.a() * g2.b() + g1.b() * g2.d(),
                      g1.c() * g2.a() + g1.d() * g2.c(), g1.c() * g2.b() + g1.d() * g2.d(),
                      lt + g2.lambda(), mt + g2.mu(),
                      g1.kappa() + g2.kappa() + lt * g2.mu() - g2.lambda() * mt);
}

template <class T>
GroupElem<T> group_inv(const GroupElem<T>& g) {
  const T& a = g.a();
  const T& b = g.b();
  const T& c = g.c();
  const T& d = g.d();
  return GroupElem<T>(d, -b, -c, a, c * g.mu() - d * g.lambda(), b * g.lambda() - a * g.mu(),
                      -g.kappa());
}

template <class T>
Mat4<T> embed_group(const GroupElem<T>& g) {
  const T& a = g.a();
  const T& b = g.b();
  const T& c = g.c();
  const T& d = g.d();
  const T& l = g.lambda();
  const T& m = g.mu();
  return Mat4<T>{{a, T(0), b, a * m - b * l},
                 {l, T(1), m, g.kappa()},
                 {c, T(0), d, c * m - d * l},
                 {T(0), T(0), T(0), T(1)}};
}

template <class T>
Mat4<T> embed_algebra(const AlgElem<T>& v) {
  return Mat4<T>{{v.x, T(0), v.upper(), v.q},
                 {v.p, T(0), v.q, v.r},
                 {v.lower(), T(0), -v.x, -v.p},
                 {T(0), T(0), T(0), T(0)}};
}

/// Inverse of embed_algebra.  Throws NotInDomain when `m` is not in the image.
template <class T>
AlgElem<T> algebra_from_matrix(const Mat4<T>& m) {
  const T x = m(0, 0);
  const T upper = m(0, 2);
  const T lower = m(2, 0);
  AlgElem<T> v{x, (upper + lower) / T(2), (upper - lower) / T(2), m(1, 0), m(1, 2), m(1, 3)};
  if constexpr (is_exact_v<T>) {
    if (!(embed_algebra(v) == m)) throw NotInDomain("matrix is not in the image of g^J");
  }
  return v;
}

/// Lie bracket, computed as the commutator of the 4x4 embeddings.
template <class T>
AlgElem<T> bracket(const AlgElem<T>& v1, const AlgElem<T>& v2) {
  return algebra_from_matrix(commutator(embed_algebra(v1), embed_algebra(v2)));
}

/// Bracket by the coordinate formula written in entry coordinates
/// (sl2 block [[x, u], [w, -x]]), converted from and back to cone coordinates.
template <class T>
AlgElem<T> bracket_closed_form(const AlgElem<T>& v1, const AlgElem<T>& v2) {
  const T x1 = v1.x, u1 = v1.upper(), w1 = v1.lower();
  const T x2 = v2.x, u2 = v2.upper(), w2 = v2.lower();
  // [[x1,u1],[w1,-x1]] * [[x2,u2],[w2,-x2]] - reverse
  const T xt = u1 * w2 - u2 * w1;
  const T ut = T(2) * (x1 * u2 - x2 * u1);
  const T wt = T(2) * (w1 * x2 - w2 * x1);
  const T pt = v1.p * x2 + v1.q * w2 - v2.p * x1 - v2.q * w1;
  const T qt = v2.q * x1 + v1.p * u2 - v1.q * x2 - v2.p * u1;
  const T rt = T(2) * (v1.p * v2.q - v2.p * v1.q);
  return {xt, (ut + wt) / T(2), (ut - wt) / T(2), pt, qt, rt};
}

/// Adjoint action g v g^{-1}, closed form.
template <class T>
AlgElem<T> adjoint(const GroupElem<T>& g, const AlgElem<T>& v) {
  const T& a = g.a();
  const T& b = g.b();
  const T& c = g.c();
  const T& d = g.d();
  const T& l = g.lambda();
  const T& m = g.mu();
  const T s = v.upper();
  const T t = v.lower();
  const T xt = (a * d + b * c) * v.x - a * c * s + b * d * t;
  const T st = T(-2) * a * b * v.x + a * a * s - b * b * t;
  const T tt = T(2) * c * d * v.x - c * c * s + d * d * t;
  const T u1 = l * v.x + m * t + v.p;
  const T u2 = m * v.x - l * s - v.q;
  const T pt = d * u1 + c * u2;
  const T qt = -(b * u1) - a * u2;
  const T rt = T(-2) * l * m * v.x + l * l * s - m * m * t - T(2) * v.p * m + T(2) * v.q * l + v.r;
  return {xt, (st + tt) / T(2), (st - tt) / T(2), pt, qt, rt};
}

/// Adjoint action through the matrix embedding: embed(g) embed(v) embed(g)^{-1}.
template <class T>
AlgElem<T> adjoint_by_conjugation(const GroupElem<T>& g, const AlgElem<T>& v) {
  const Mat4<T> eg = embed_group(g);
  return algebra_from_matrix(eg * embed_algebra(v) * inverse(eg));
}

template <class T>
T casimir(const AlgElem<T>& v) {
  return v.x * v.x + v.y * v.y - v.z * v.z;
}

/// f = 2pqx - p^2 (y+z) + q^2 (y-z).
template <class T>
T cubic_invariant(const AlgElem<T>& v) {
  return T(2) * v.p * v.q * v.x - v.p * v.p * v.upper() + v.q * v.q * v.lower();
}

struct Invariants {
  Rational c1;
  Rational f;
  Rational I;  // f - c1 * r, invariant under the adjoint action
  /// Defined only on {c1 = 0, (x,y,z) != 0, f = 0}.
  std::optional<Rational> rho;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const JacobiAlgElem& v);

/// rho = r - q^2/(y+z), or r + p^2/(y-z) when y+z = 0.  Absent off its locus.
std::optional<Rational> rho_invariant(const JacobiAlgElem& v);

bool is_nilpotent(const JacobiAlgElem& v);

/// embed(v)^{2k} == c1^{k-1} embed(v)^2, decided exactly.
bool power_identity_check(const JacobiAlgElem& v, unsigned k);

/// Rank of w -> [w, v] on the basis {X,Y,Z,P,Q,R}.
std::size_t orbit_dimension(const JacobiAlgElem& v);

/// Point of the Siegel-Jacobi space H x C.
class SiegelJacobiPoint {
 public:
  SiegelJacobiPoint(std::complex<double> tau, std::complex<double> zeta);
  std::complex<double> tau() const { return tau_; }
  std::complex<double> zeta() const { return zeta_; }

 private:
  std::complex<double> tau_;
  std::complex<double> zeta_;
};

/// (M, (l, m, k)) . (tau, zeta) = (M<tau>, (zeta + l tau + m) / (c tau + d)).
SiegelJacobiPoint sj_action(const JacobiGroupElem& g, const SiegelJacobiPoint& pt);

template <class T>
AlgElem<long double> to_numeric(const AlgElem<T>& v) {
  return {to_long_double(v.x), to_long_double(v.y), to_long_double(v.z),
          to_long_double(v.p), to_long_double(v.q), to_long_double(v.r)};
}

template <class T>
GroupElem<long double> to_numeric(const GroupElem<T>& g) {
  return GroupElem<long double>(to_long_double(g.a()), to_long_double(g.b()),
                                to_long_double(g.c()), to_long_double(g.d()),
                                to_long_double(g.lambda()), to_long_double(g.mu()),
                                to_long_double(g.kappa()));
}

}  // namespace jacobi
