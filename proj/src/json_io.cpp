#include "jacobi/json_io.hpp"

namespace jacobi::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int decode_sign(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
    throw ParseError(std::string("field '") + key + "' must be 1 or -1");
  return v.get<int>();
}

std::string family_of(const json& j) {
  const json& f = field(j, "family");
  if (!f.is_string()) throw ParseError("'family' must be a string");
  return f.get<std::string>();
}

const json& params_of(const json& j) {
  static const json empty = json::object();
  auto it = j.find("params");
  return it == j.end() ? empty : *it;
}

json labeled(std::string_view family, json params = json::object()) {
  return {{"family", family}, {"params", std::move(params)}};
}

template <class M>
json encode_matrix(const M& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 2; ++i) rows.push_back({encode(m(i, 0)), encode(m(i, 1))});
  return rows;
}

template <class M, class Decode>
M decode_matrix(const json& j, Decode decode) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a 2x2 matrix");
  M m;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError("expected a 2x2 matrix");
    for (std::size_t k = 0; k < 2; ++k) m(i, k) = decode(j[i][k]);
  }
  return m;
}

template <class Tr, class Decode>
Tr decode_triple(const json& j, Decode decode) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a triple is an array of three matrices");
  return {decode(j[0]), decode(j[1]), decode(j[2])};
}

template <class T>
json scalar(const T& v) {
  if constexpr (is_exact_v<T>)
    return v.str();
  else
    return static_cast<double>(v);
}

template <class T>
json encode_group_fields(const GroupElem<T>& g) {
  return {{"a", scalar(g.a())},   {"b", scalar(g.b())},           {"c", scalar(g.c())},
          {"d", scalar(g.d())},   {"lambda", scalar(g.lambda())}, {"mu", scalar(g.mu())},
          {"kappa", scalar(g.kappa())}};
}

template <class T>
json encode_alg_fields(const AlgElem<T>& v) {
  return {{"x", scalar(v.x)}, {"y", scalar(v.y)}, {"z", scalar(v.z)},
          {"p", scalar(v.p)}, {"q", scalar(v.q)}, {"r", scalar(v.r)}};
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json encode(const Rational& v) { return v.str(); }

json encode(const GaussRational& v) { return {{"re", v.re.str()}, {"im", v.im.str()}}; }

json encode(const JacobiAlgElem& v) { return encode_alg_fields(v); }
json encode(const AlgElem<long double>& v) { return encode_alg_fields(v); }

json encode(const JacobiGroupElem& g) { return encode_group_fields(g); }
json encode(const GroupElem<long double>& g) { return encode_group_fields(g); }

json encode(const Invariants& inv) {
  return {{"c1", encode(inv.c1)},
          {"f", encode(inv.f)},
          {"I", encode(inv.I)},
          {"rho", inv.rho ? encode(*inv.rho) : json(nullptr)}};
}

json encode(const real::OrbitLabel& label) {
  using namespace real;
  const std::string_view name = family_name(label);
  if (const auto* l = std::get_if<PiR>(&label)) return labeled(name, {{"alpha", encode(l->alpha)}});
  if (const auto* l = std::get_if<PiSR>(&label)) return labeled(name, {{"rho", encode(l->rho)}});
  if (const auto* l = std::get_if<PiTR>(&label)) return labeled(name, {{"rho", encode(l->rho)}});
  if (const auto* l = std::get_if<Cone>(&label))
    return labeled(name, {{"sign_z", l->sign_z}, {"f", encode(l->f)}});
  if (const auto* l = std::get_if<Hyperbolic>(&label))
    return labeled(name, {{"c1", encode(l->c1)}, {"c", encode(l->c)}});
  if (const auto* l = std::get_if<Elliptic>(&label))
    return labeled(name, {{"c1", encode(l->c1)}, {"sheet", l->sheet}, {"c", encode(l->c)}});
  return labeled(name);
}

json encode(const real::Representative& rep) {
  return {{"exact", rep.exact ? encode(*rep.exact) : json(nullptr)},
          {"numeric", encode(rep.numeric)}};
}

json encode(const real::Witness& w) {
  json out = w.exact ? encode(*w.exact) : encode(w.numeric);
  out["exact"] = w.is_exact();
  out["residual"] = w.residual;
  return out;
}

json encode(const sl2::Sl2Elem& v) {
  return {{"x", encode(v.x)}, {"y", encode(v.y)}, {"z", encode(v.z)}};
}

json encode(const sl2::Sl2OrbitLabel& label) {
  const std::string_view name = sl2::label_name(label);
  if (const auto* h = std::get_if<sl2::Sl2Hyperbolic>(&label))
    return labeled(name, {{"c1", encode(h->c1)}});
  if (const auto* e = std::get_if<sl2::Sl2Elliptic>(&label))
    return labeled(name, {{"c1", encode(e->c1)}, {"sheet", e->sheet}});
  return labeled(name);
}

json encode(const sl2::PcLabel& label) {
  if (label.kind == sl2::PcKind::NonNilpotent)
    return labeled(sl2::pc_kind_name(label.kind), {{"invariant", encode(label.invariant)}});
  return labeled(sl2::pc_kind_name(label.kind));
}

json encode(const sl2::RMat& m) { return encode_matrix(m); }
json encode(const sl2::CMat& m) { return encode_matrix(m); }

json encode(const sl2::RealTriple& t) {
  return json::array({encode(t.h), encode(t.e), encode(t.f)});
}
json encode(const sl2::ComplexTriple& t) {
  return json::array({encode(t.h), encode(t.e), encode(t.f)});
}

json encode(const complex::PcElem& h) {
  return {{"x", encode(h.x)}, {"y", encode(h.y)}, {"p", encode(h.p)}, {"q", encode(h.q)}};
}

json encode(const complex::KcElem& k) {
  return {{"a", encode(k.a())}, {"b", encode(k.b())}, {"kappa", encode(k.kappa())}};
}

json encode(const complex::WeightCoords& w) {
  return {{"xi_plus", encode(w.xi_plus)},
          {"xi_minus", encode(w.xi_minus)},
          {"pi_plus", encode(w.pi_plus)},
          {"pi_minus", encode(w.pi_minus)}};
}

json encode(const complex::KcOrbitLabel& label) {
  using namespace complex;
  const std::string_view name = family_name(label);
  if (const auto* l = std::get_if<NJP>(&label)) return labeled(name, {{"delta_sq", encode(l->delta_sq)}});
  if (const auto* l = std::get_if<PIsotropic>(&label)) return labeled(name, {{"sign", l->sign}});
  if (const auto* l = std::get_if<MixedPlus>(&label))
    return labeled(name, {{"delta_sq", encode(l->delta_sq)}, {"w0", encode(l->w0)}});
  if (const auto* l = std::get_if<MixedMinus>(&label))
    return labeled(name, {{"delta_sq", encode(l->delta_sq)}, {"w0", encode(l->w0)}});
  if (const auto* l = std::get_if<MixedIsotropic>(&label))
    return labeled(name, {{"side", l->side}, {"sign", l->sign}, {"w0", encode(l->w0)}});
  if (const auto* l = std::get_if<NonNilpotent>(&label)) {
    json inv = json::array();
    for (const auto& v : l->invariants) inv.push_back(encode(v));
    return labeled(name, {{"support", l->support}, {"invariants", inv}});
  }
  return labeled(name);
}

json encode(const complex::OrbitDecision& d) {
  return {{"same", d.same},
          {"u", d.u ? encode(*d.u) : json(nullptr)},
          {"u_squared", d.u_squared ? encode(*d.u_squared) : json(nullptr)}};
}

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("exact scalars must be strings such as \"-3/4\" or integers, got " + j.dump());
}

GaussRational decode_gauss(const json& j) {
  if (j.is_object()) {
    const Rational re = decode_rational(field(j, "re"));
    const auto it = j.find("im");
    return {re, it == j.end() ? Rational(0) : decode_rational(*it)};
  }
  return decode_rational(j);
}

JacobiAlgElem decode_alg(const json& j) {
  return {decode_rational(field(j, "x")), decode_rational(field(j, "y")),
          decode_rational(field(j, "z")), decode_rational(field(j, "p")),
          decode_rational(field(j, "q")), decode_rational(field(j, "r"))};
}

JacobiGroupElem decode_group(const json& j) {
  auto opt = [&](const char* key) {
    auto it = j.find(key);
    return it == j.end() ? Rational(0) : decode_rational(*it);
  };
  return JacobiGroupElem(decode_rational(field(j, "a")), decode_rational(field(j, "b")),
                         decode_rational(field(j, "c")), decode_rational(field(j, "d")),
                         opt("lambda"), opt("mu"), opt("kappa"));
}

real::OrbitLabel decode_real_label(const json& j) {
  using namespace real;
  const std::string family = family_of(j);
  const json& p = params_of(j);
  OrbitLabel label;
  if (family == "Zero") label = ZeroOrbit{};
  else if (family == "PiR") label = PiR{decode_rational(field(p, "alpha"))};
  else if (family == "PiP") label = PiP{};
  else if (family == "PiS") label = PiS{};
  else if (family == "PiT") label = PiT{};
  else if (family == "PiS_R") label = PiSR{decode_rational(field(p, "rho"))};
  else if (family == "PiT_R") label = PiTR{decode_rational(field(p, "rho"))};
  else if (family == "Cone") label = Cone{decode_sign(p, "sign_z"), decode_rational(field(p, "f"))};
  else if (family == "Hyperbolic")
    label = Hyperbolic{decode_rational(field(p, "c1")), decode_rational(field(p, "c"))};
  else if (family == "Elliptic")
    label = Elliptic{decode_rational(field(p, "c1")), decode_sign(p, "sheet"),
                     decode_rational(field(p, "c"))};
  else
    throw ParseError("unknown orbit family '" + family + "'");
  validate(label);
  return label;
}

sl2::Sl2Elem decode_sl2(const json& j) {
  return {decode_rational(field(j, "x")), decode_rational(field(j, "y")),
          decode_rational(field(j, "z"))};
}

sl2::Sl2OrbitLabel decode_sl2_label(const json& j) {
  const std::string family = family_of(j);
  const json& p = params_of(j);
  if (family == "Zero") return sl2::Sl2Zero{};
  if (family == "NPlus") return sl2::NPlus{};
  if (family == "NMinus") return sl2::NMinus{};
  if (family == "Hyperbolic") {
    Rational c1 = decode_rational(field(p, "c1"));
    if (c1.sign() <= 0) throw NotInDomain("Hyperbolic requires c1 > 0");
    return sl2::Sl2Hyperbolic{c1};
  }
  if (family == "Elliptic") {
    Rational c1 = decode_rational(field(p, "c1"));
    if (c1.sign() >= 0) throw NotInDomain("Elliptic requires c1 < 0");
    return sl2::Sl2Elliptic{c1, decode_sign(p, "sheet")};
  }
  throw ParseError("unknown sl2 orbit family '" + family + "'");
}

sl2::RMat decode_rmat(const json& j) { return decode_matrix<sl2::RMat>(j, decode_rational); }
sl2::CMat decode_cmat(const json& j) { return decode_matrix<sl2::CMat>(j, decode_gauss); }

sl2::RealTriple decode_real_triple(const json& j) {
  return decode_triple<sl2::RealTriple>(j, decode_rmat);
}
sl2::ComplexTriple decode_complex_triple(const json& j) {
  return decode_triple<sl2::ComplexTriple>(j, decode_cmat);
}

complex::PcElem decode_pc(const json& j) {
  return {decode_gauss(field(j, "x")), decode_gauss(field(j, "y")), decode_gauss(field(j, "p")),
          decode_gauss(field(j, "q"))};
}

complex::KcElem decode_kc(const json& j) {
  auto it = j.find("kappa");
  return complex::KcElem(decode_gauss(field(j, "a")), decode_gauss(field(j, "b")),
                         it == j.end() ? GaussRational{} : decode_gauss(*it));
}

complex::KcOrbitLabel decode_kc_label(const json& j) {
  using namespace complex;
  const std::string family = family_of(j);
  const json& p = params_of(j);
  if (family == "Zero") return KcZero{};
  if (family == "NJPlus") return NJPlus{};
  if (family == "NJMinus") return NJMinus{};
  if (family == "NJP") return NJP{decode_gauss(field(p, "delta_sq"))};
  if (family == "PIsotropic") return PIsotropic{decode_sign(p, "sign")};
  if (family == "MixedPlus")
    return MixedPlus{decode_gauss(field(p, "delta_sq")), decode_gauss(field(p, "w0"))};
  if (family == "MixedMinus")
    return MixedMinus{decode_gauss(field(p, "delta_sq")), decode_gauss(field(p, "w0"))};
  if (family == "MixedIsotropic") {
    const json& side = field(p, "side");
    if (side != "xi_plus" && side != "xi_minus")
      throw ParseError("'side' must be \"xi_plus\" or \"xi_minus\"");
    return MixedIsotropic{side.get<std::string>(), decode_sign(p, "sign"), decode_gauss(field(p, "w0"))};
  }
  if (family == "NonNilpotent") {
    NonNilpotent out{};
    const json& support = field(p, "support");
    if (!support.is_array() || support.size() != 4) throw ParseError("'support' needs 4 booleans");
    for (std::size_t i = 0; i < 4; ++i) {
      if (!support[i].is_boolean()) throw ParseError("'support' needs 4 booleans");
      out.support[i] = support[i].get<bool>();
    }
    const json& inv = field(p, "invariants");
    if (!inv.is_array()) throw ParseError("'invariants' must be an array");
    for (const auto& v : inv) out.invariants.push_back(decode_gauss(v));
    return out;
  }
  throw ParseError("unknown K_C orbit family '" + family + "'");
}

}  // namespace jacobi::io
