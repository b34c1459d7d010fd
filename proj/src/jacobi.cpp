#include "jacobi/jacobi.hpp"

#include <array>
#include <vector>

namespace jacobi {

std::optional<Rational> rho_invariant(const JacobiAlgElem& v) {
  if (!casimir(v).is_zero() || v.sl2_part_zero() || !cubic_invariant(v).is_zero())
    return std::nullopt;
  const Rational s = v.upper();
  const Rational t = v.lower();
  std::optional<Rational> from_upper;
  std::optional<Rational> from_lower;
  if (!s.is_zero()) from_upper = v.r - v.q * v.q / s;
  if (!t.is_zero()) from_lower = v.r + v.p * v.p / t;
  // On the locus f = 0 forces p^2 (y+z) + q^2 (y-z) = 0, so both agree.
  if (from_upper && from_lower && !(*from_upper == *from_lower))
    throw InternalInconsistency("rho formulas disagree on the nilpotent locus");
  return from_upper ? from_upper : from_lower;
}

Invariants invariants(const JacobiAlgElem& v) {
  Invariants out;
  out.c1 = casimir(v);
  out.f = cubic_invariant(v);
  out.I = out.f - out.c1 * v.r;
  out.rho = rho_invariant(v);
  return out;
}

bool is_nilpotent(const JacobiAlgElem& v) { return casimir(v).is_zero(); }

bool power_identity_check(const JacobiAlgElem& v, unsigned k) {
  if (k == 0) throw NotInDomain("power identity needs k >= 1");
  const Mat4<Rational> m = embed_algebra(v);
  const Mat4<Rational> sq = m * m;
  return power(m, 2 * k) == casimir(v).pow(k - 1) * sq;
}

std::size_t orbit_dimension(const JacobiAlgElem& v) {
  const std::array<JacobiAlgElem, 6> frame = {basis::X(), basis::Y(), basis::Z(),
                                              basis::P(), basis::Q(), basis::R()};
  // Row i holds the coordinates of [basis_i, v]; rank is the same either way.
  std::vector<std::vector<Rational>> rows;
  rows.reserve(frame.size());
  for (const auto& w : frame) {
    const JacobiAlgElem img = bracket(w, v);
    rows.push_back({img.x, img.y, img.z, img.p, img.q, img.r});
  }
  return rank(std::move(rows));
}

SiegelJacobiPoint::SiegelJacobiPoint(std::complex<double> tau, std::complex<double> zeta)
    : tau_(tau), zeta_(zeta) {
  if (!(tau.imag() > 0)) throw NotInDomain("tau must lie in the upper half plane");
}

SiegelJacobiPoint sj_action(const JacobiGroupElem& g, const SiegelJacobiPoint& pt) {
  const auto num = [](const Rational& v) { return static_cast<double>(v.to_long_double()); };
  const std::complex<double> tau = pt.tau();
  const std::complex<double> denom = num(g.c()) * tau + num(g.d());
  const std::complex<double> moved = (num(g.a()) * tau + num(g.b())) / denom;
  const std::complex<double> zeta = (pt.zeta() + num(g.lambda()) * tau + num(g.mu())) / denom;
  return SiegelJacobiPoint(moved, zeta);
}

}  // namespace jacobi
