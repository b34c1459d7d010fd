#pragma once

// JSON encoding for every public type.  Exact scalars travel as strings
// ("3", "-1/2"); complex scalars as {"re": .., "im": ..}.  Decoders throw
// ParseError on malformed input and the type's own InputError on invariant
// violations (NotUnimodular, NotOnUnitQuadric).

#include <json.hpp>

#include "jacobi/complex_orbits.hpp"
#include "jacobi/jacobi.hpp"
#include "jacobi/real_orbits.hpp"
#include "jacobi/sl2.hpp"

namespace jacobi::io {

using json = nlohmann::json;

json encode(const Rational& v);
json encode(const GaussRational& v);
json encode(const JacobiAlgElem& v);
json encode(const AlgElem<long double>& v);
json encode(const JacobiGroupElem& g);
json encode(const GroupElem<long double>& g);
json encode(const Invariants& inv);
json encode(const real::OrbitLabel& label);
json encode(const real::Representative& rep);
json encode(const real::Witness& w);
json encode(const sl2::Sl2Elem& v);
json encode(const sl2::Sl2OrbitLabel& label);
json encode(const sl2::PcLabel& label);
json encode(const sl2::RMat& m);
json encode(const sl2::CMat& m);
json encode(const sl2::RealTriple& t);
json encode(const sl2::ComplexTriple& t);
json encode(const complex::PcElem& h);
json encode(const complex::KcElem& k);
json encode(const complex::WeightCoords& w);
json encode(const complex::KcOrbitLabel& label);
json encode(const complex::OrbitDecision& d);

Rational decode_rational(const json& j);
GaussRational decode_gauss(const json& j);
JacobiAlgElem decode_alg(const json& j);
JacobiGroupElem decode_group(const json& j);
real::OrbitLabel decode_real_label(const json& j);
sl2::Sl2Elem decode_sl2(const json& j);
sl2::Sl2OrbitLabel decode_sl2_label(const json& j);
sl2::RMat decode_rmat(const json& j);
sl2::CMat decode_cmat(const json& j);
sl2::RealTriple decode_real_triple(const json& j);
sl2::ComplexTriple decode_complex_triple(const json& j);
complex::PcElem decode_pc(const json& j);
complex::KcElem decode_kc(const json& j);
complex::KcOrbitLabel decode_kc_label(const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

}  // namespace jacobi::io
