#pragma once

// Uniform helpers over the scalar types the templates are instantiated with:
// Rational and GaussRational (exact), long double (witness materialization).

#include <cmath>
#include <optional>
#include <type_traits>

#include "jacobi/rational.hpp"

namespace jacobi {

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const GaussRational& v) { return v.is_zero(); }
inline bool is_zero(long double v) { return v == 0.0L; }

inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(long double v) { return (v > 0) - (v < 0); }

/// Square root in the scalar field; nullopt when it does not exist there.
inline std::optional<Rational> field_sqrt(const Rational& v) { return v.exact_sqrt(); }
inline std::optional<long double> field_sqrt(long double v) {
  if (v < 0) return std::nullopt;
  return std::sqrt(v);
}

inline long double to_long_double(const Rational& v) { return v.to_long_double(); }
inline long double to_long_double(long double v) { return v; }

inline long double magnitude(const Rational& v) { return std::fabs(v.to_long_double()); }
inline long double magnitude(long double v) { return std::fabs(v); }
inline long double magnitude(const GaussRational& v) {
  return std::hypot(v.re.to_long_double(), v.im.to_long_double());
}

}  // namespace jacobi
