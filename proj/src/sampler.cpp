#include "jacobi/sampler.hpp"

namespace jacobi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void SamplerConfig::validate() const {
  if (trials < 1) throw NotInDomain("trials must be at least 1");
  if (height_bound < 2) throw NotInDomain("height bound must be at least 2");
}

std::uint64_t stream_id_for(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Sampler::Sampler(const SamplerConfig& cfg, std::uint64_t stream_id)
    : rng_(splitmix64(cfg.seed ^ splitmix64(stream_id))), height_(cfg.height_bound) {}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Largest multiple of span that fits; draws above it are rejected.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t draw = rng_();
  while (limit != 0 && draw >= limit) draw = rng_();
  return lo + static_cast<std::int64_t>(span == 0 ? draw : draw % span);
}

// Draws are sequenced explicitly: argument evaluation order is unspecified.
Rational Sampler::rational() {
  const std::int64_t num = uniform(-height_, height_);
  const std::int64_t den = uniform(1, height_);
  return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
  std::int64_t num = 0;
  while (num == 0) num = uniform(-height_, height_);
  const std::int64_t den = uniform(1, height_);
  return Rational(num, den);
}

GaussRational Sampler::gauss() { return {rational(), rational()}; }

GaussRational Sampler::nonzero_gauss() {
  GaussRational g;
  while (g.is_zero()) g = gauss();
  return g;
}

JacobiGroupElem Sampler::sl2_group() {
  // [[1,u],[0,1]] diag(t, 1/t) [[1,0],[l,1]]
  const Rational u = rational();
  const Rational t = nonzero_rational();
  const Rational l = rational();
  return JacobiGroupElem(t + u * l / t, u / t, l / t, t.inverse());
}

JacobiGroupElem Sampler::group() {
  const JacobiGroupElem m = sl2_group();
  Rational lambda = rational();
  Rational mu = rational();
  Rational kappa = rational();
  return JacobiGroupElem(m.a(), m.b(), m.c(), m.d(), lambda, mu, kappa);
}

JacobiAlgElem Sampler::algebra() {
  return {rational(), rational(), rational(), rational(), rational(), rational()};
}

JacobiAlgElem Sampler::nilpotent() {
  std::int64_t m = 0, n = 0;
  while (m == 0 && n == 0) {
    m = uniform(-height_, height_);
    n = uniform(-height_, height_);
  }
  const Rational t = nonzero_rational();
  const Rational x = t * Rational(m * m - n * n);
  const Rational y = t * Rational(2 * m * n);
  const Rational z = t * Rational(m * m + n * n);
  return {x, y, z, rational(), rational(), rational()};
}

real::OrbitLabel Sampler::real_label(std::size_t family) {
  using namespace real;
  // Half of the semisimple draws use a square c1 so the exact path is exercised.
  auto positive = [&] {
    const Rational v = nonzero_rational().abs();
    return coin() ? v * v : v;
  };
  switch (family) {
    case 0: return ZeroOrbit{};
    case 1: return PiR{nonzero_rational()};
    case 2: return PiP{};
    case 3: return PiS{};
    case 4: return PiT{};
    case 5: return PiSR{nonzero_rational()};
    case 6: return PiTR{nonzero_rational()};
    case 7: {
      const int s = sign();
      // Cone orbits have rational points only when -s f is a square.
      const Rational b = nonzero_rational();
      return Cone{s, Rational(-s) * b * b};
    }
    case 8: return Hyperbolic{positive(), rational()};
    case 9: return Elliptic{-positive(), sign(), rational()};
    default: throw NotInDomain("no real orbit family with index " + std::to_string(family));
  }
}

sl2::Sl2Elem Sampler::sl2_elem() { return {rational(), rational(), rational()}; }

sl2::Sl2Elem Sampler::sl2_cone_point() {
  if (uniform(0, 15) == 0) return {};
  const JacobiAlgElem v = nilpotent();
  return {v.x, v.y, v.z * Rational(sign())};
}

sl2::RMat Sampler::rotation() {
  const Rational t = rational();
  const Rational den = Rational(1) + t * t;
  const Rational c = (Rational(1) - t * t) / den;
  const Rational s = Rational(2) * t / den;
  return sl2::RMat{{c, s}, {-s, c}};
}

complex::PcElem Sampler::pc() { return {gauss(), gauss(), gauss(), gauss()}; }

complex::PcElem Sampler::nilpotent_pc() {
  const GaussRational i = GaussRational::i();
  complex::PcElem h;
  if (coin()) {
    h.x = nonzero_gauss();
    h.y = Rational(sign()) * i * h.x;
  }
  switch (uniform(0, 3)) {
    case 0: break;  // p = q = 0
    case 1:
      h.p = gauss();
      h.q = gauss();
      break;
    case 2:  // isotropic (p, q)
      h.p = nonzero_gauss();
      h.q = Rational(sign()) * i * h.p;
      break;
    default:
      h.p = nonzero_gauss();
      h.q = nonzero_gauss();
  }
  return h;
}

complex::KcElem Sampler::kc() {
  const GaussRational u = nonzero_gauss();
  return complex::KcElem::from_u(u, gauss());
}

JacobiGroupElem sample_group(const SamplerConfig& cfg, std::uint64_t stream_id) {
  Sampler s(cfg, stream_id);
  return s.group();
}

}  // namespace jacobi
