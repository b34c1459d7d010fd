#include "jacobi/rational.hpp"

#include <cctype>

namespace jacobi {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw ParseError("bad decimal '" + std::string(text) + "'");
    std::string_view int_part = text.substr(0, dot);
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    mpz_class whole = parse_integer(digits, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class tail(std::string(frac), 10);
    mpz_class num = ::abs(whole) * scale + tail;
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }
  return Rational(mpq_class(parse_integer(text, text)));
}

long double Rational::to_long_double() const {
  // mpq_get_d truncates to double; go through the parts for extra precision.
  const mpz_class& num = v_.get_num();
  const mpz_class& den = v_.get_den();
  if (num.fits_slong_p() && den.fits_slong_p())
    return static_cast<long double>(num.get_si()) / static_cast<long double>(den.get_si());
  return static_cast<long double>(v_.get_d());
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& num = v_.get_num();
  const mpz_class& den = v_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned k) const {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

GaussRational GaussRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {re / n, -im / n};
}

GaussRational GaussRational::pow(int k) const {
  GaussRational base = k < 0 ? inverse() : *this;
  GaussRational out(1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string GaussRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = im == Rational(1) ? "i" : (im == Rational(-1) ? "-i" : im.str() + "i");
  if (re.is_zero()) return imag;
  return re.str() + (im.sign() > 0 ? "+" : "") + imag;
}

}  // namespace jacobi
