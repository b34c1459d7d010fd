#pragma once

// Independent exact oracles for the tests.  Built on raw mpq_class 4x4
// matrices written straight from the displayed embeddings; nothing here calls
// into the library except to read values out of its types.

#include <gmpxx.h>

#include <array>
#include <string>

#include "jacobi/jacobi.hpp"

namespace oracle {

using Q = mpq_class;
using M4 = std::array<std::array<Q, 4>, 4>;

inline Q q(const jacobi::Rational& r) {
  Q v(r.str());
  v.canonicalize();
  return v;
}

inline M4 zero() {
  M4 m;
  for (auto& row : m) row.fill(0);
  return m;
}

inline M4 identity() {
  M4 m = zero();
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

inline M4 mul(const M4& a, const M4& b) {
  M4 c = zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline M4 sub(const M4& a, const M4& b) {
  M4 c = a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] -= b[i][j];
  return c;
}

inline M4 scale(const Q& s, M4 a) {
  for (auto& row : a)
    for (auto& v : row) v *= s;
  return a;
}

// Gauss-Jordan; the caller guarantees invertibility.
inline M4 inverse(M4 a) {
  M4 inv = identity();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Q d = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q f = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline M4 from(const jacobi::Mat4<jacobi::Rational>& m) {
  M4 o;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o[i][j] = q(m(i, j));
  return o;
}

// G(x,y,z,p,q,r): sl2 block [[x, y+z], [y-z, -x]].
inline M4 alg(const Q& x, const Q& y, const Q& z, const Q& p, const Q& qq, const Q& r) {
  return M4{{{x, 0, y + z, qq}, {p, 0, qq, r}, {y - z, 0, -x, -p}, {0, 0, 0, 0}}};
}

inline M4 alg(const jacobi::JacobiAlgElem& v) {
  return alg(q(v.x), q(v.y), q(v.z), q(v.p), q(v.q), q(v.r));
}

inline M4 grp(const jacobi::JacobiGroupElem& g) {
  const Q a = q(g.a()), b = q(g.b()), c = q(g.c()), d = q(g.d());
  const Q l = q(g.lambda()), m = q(g.mu()), k = q(g.kappa());
  return M4{{{a, 0, b, a * m - b * l}, {l, 1, m, k}, {c, 0, d, c * m - d * l}, {0, 0, 0, 1}}};
}

// Reads G(x,y,z,p,q,r) back off an algebra matrix.
struct Coords {
  Q x, y, z, p, q, r;
  bool operator==(const Coords&) const = default;
};

inline Coords coords(const M4& m) {
  return {m[0][0], (m[0][2] + m[2][0]) / 2, (m[0][2] - m[2][0]) / 2, m[1][0], m[1][2], m[1][3]};
}

inline Coords coords(const jacobi::JacobiAlgElem& v) {
  return {q(v.x), q(v.y), q(v.z), q(v.p), q(v.q), q(v.r)};
}

inline Coords adjoint(const jacobi::JacobiGroupElem& g, const jacobi::JacobiAlgElem& v) {
  const M4 e = grp(g);
  return coords(mul(mul(e, alg(v)), inverse(e)));
}

inline Coords bracket(const jacobi::JacobiAlgElem& a, const jacobi::JacobiAlgElem& b) {
  const M4 ma = alg(a), mb = alg(b);
  return coords(sub(mul(ma, mb), mul(mb, ma)));
}

// Standard symplectic form on (e1, e2, e3, e4) paired as (1,3), (2,4).
inline M4 symplectic_form() {
  M4 j = zero();
  j[0][2] = 1;
  j[2][0] = -1;
  j[1][3] = 1;
  j[3][1] = -1;
  return j;
}

inline M4 transpose(const M4& a) {
  M4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

}  // namespace oracle
