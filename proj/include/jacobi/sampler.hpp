#pragma once

// Seeded, height-bounded exact samplers.  Every draw goes through our own
// bounded-integer routine so streams are identical across standard libraries.

#include <cstdint>
#include <random>
#include <string_view>

#include "jacobi/complex_orbits.hpp"
#include "jacobi/jacobi.hpp"
#include "jacobi/real_orbits.hpp"
#include "jacobi/sl2.hpp"

namespace jacobi {

struct SamplerConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  int height_bound = 10;  // max |numerator| and denominator

  /// Throws NotInDomain unless trials >= 1 and height_bound >= 2.
  void validate() const;
};

/// FNV-1a of the claim id; used as a stream id so claims sample independently.
std::uint64_t stream_id_for(std::string_view name);

class Sampler {
 public:
  Sampler(const SamplerConfig& cfg, std::uint64_t stream_id);

  /// Uniform on [lo, hi], by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  int sign() { return coin() ? 1 : -1; }

  Rational rational();
  Rational nonzero_rational();
  GaussRational gauss();
  GaussRational nonzero_gauss();

  JacobiGroupElem group();
  /// SL(2) part only, as a group element with trivial Heisenberg part.
  JacobiGroupElem sl2_group();
  JacobiAlgElem algebra();
  /// Uniform-ish over the rational nilpotent cone x^2 + y^2 = z^2, z != 0.
  JacobiAlgElem nilpotent();
  /// Random label of the given family index (order of real::OrbitLabel).
  real::OrbitLabel real_label(std::size_t family);

  sl2::Sl2Elem sl2_elem();
  sl2::Sl2Elem sl2_cone_point();  // may be zero
  /// A rotation in SO(2, Q) from a rational tangent half-angle.
  sl2::RMat rotation();

  complex::PcElem pc();
  complex::PcElem nilpotent_pc();
  complex::KcElem kc();

 private:
  std::mt19937_64 rng_;
  std::int64_t height_;
};

/// Deterministic per (seed, stream_id).
JacobiGroupElem sample_group(const SamplerConfig& cfg, std::uint64_t stream_id);

}  // namespace jacobi
