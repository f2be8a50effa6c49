// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "nearcurve/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

unsigned bits_to_digits10(unsigned bits) {
  // ceil(bits * log10(2)) plus two guard digits; MPFR allocates at least
  // the requested number of bits back from this.
  return static_cast<unsigned>(bits * 0.30103) + 3;
}

ScopedPrecision::ScopedPrecision(unsigned bits)
    : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_digits10_); }

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  Rational r;
  mpq_ptr raw = r.backend().data();
  mpz_set(mpq_numref(raw), num.backend().data());
  mpz_set(mpq_denref(raw), den.backend().data());
  mpq_canonicalize(raw);
  return r;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ConfigError("cannot parse rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash != std::string_view::npos) {
      Integer num{std::string(text.substr(0, slash))};
      Integer den{std::string(text.substr(slash + 1))};
      return make_rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      return Rational(Integer{std::string(text)});
    }
    // exact decimal: sign, integer part, fractional digits
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
    const bool negative = !digits.empty() && digits[0] == '-';
    Integer ipart = digits.empty() || digits == "-" || digits == "+"
                        ? Integer(0)
                        : Integer(digits);
    Integer den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer fpart = frac.empty() ? Integer(0) : Integer(frac);
    Integer num = abs(ipart) * den + fpart;
    if (negative) num = -num;
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Real to_real(const Rational& value) { return Real(value); }

Real const_e() { return exp(Real(1)); }

Real const_pi() { return boost::math::constants::pi<Real>(); }

NearestInteger nearest_integer_distance(const Real& value) {
  if (!isfinite(value)) throw ConfigError("nearest integer of a non-finite value");
  Real rounded(0, value.precision());
  // MPFR round-to-nearest on rint is ties-to-even.
  mpfr_rint(rounded.backend().data(), value.backend().data(), MPFR_RNDN);
  NearestInteger out;
  out.m = rounded.convert_to<Integer>();
  out.d = abs(value - rounded);
  return out;
}

NearestIntegerExact nearest_integer_distance(const Rational& value) {
  // floor(value + 1/2), stepping back to the even neighbour on exact ties.
  const Rational shifted = value + Rational(1, 2);
  Integer m = numerator(shifted) / denominator(shifted);
  if (numerator(shifted) < 0 && m * denominator(shifted) != numerator(shifted)) {
    --m;  // floor for negatives
  }
  NearestIntegerExact out;
  out.tie = (shifted == Rational(m));
  if (out.tie && (m % 2 != 0)) --m;  // m - 1 is even and equally close
  out.m = m;
  out.d = abs(value - Rational(m));
  return out;
}

Real round_up_guard(const Real& value) { return value + abs(value) * ldexp2(Real(1), -64); }

Real ldexp2(const Real& value, long exp) {
  Real out(value);
  mpfr_mul_2si(out.backend().data(), value.backend().data(), exp, MPFR_RNDN);
  return out;
}

Threshold::Threshold(Rational scale, Rational root)
    : scale_(std::move(scale)), root_(std::move(root)) {
  if (scale_ <= 0 || root_ <= 0) throw ConfigError("threshold must be positive");
  // fold perfect square roots into the scale so rational thresholds
  // compare on the fast path
  const Integer rn = numerator(root_), rd = denominator(root_);
  if (mpz_perfect_square_p(rn.backend().data()) &&
      mpz_perfect_square_p(rd.backend().data())) {
    scale_ *= make_rational(sqrt(rn), sqrt(rd));
    root_ = 1;
  }
}

Real Threshold::to_real() const {
  if (is_rational()) return Real(scale_);
  return Real(scale_) * sqrt(Real(root_));
}

int Threshold::compare(const Rational& d) const {
  // sign(d - scale*sqrt(root)); all quantities here are nonnegative
  if (d <= 0) return (scale_ > 0) ? -1 : 0;
  const Rational lhs = d * d;
  const Rational rhs = scale_ * scale_ * root_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

int Threshold::compare(const Threshold& other) const {
  const Rational lhs = scale_ * scale_ * root_;
  const Rational rhs = other.scale_ * other.scale_ * other.root_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Threshold Threshold::scaled(const Rational& factor) const {
  if (factor <= 0) throw ConfigError("threshold scale factor must be positive");
  return Threshold(scale_ * factor, root_);
}

std::string Threshold::to_string() const {
  if (is_rational()) return rational_to_string(scale_);
  return "(" + rational_to_string(scale_) + ")*sqrt(" + rational_to_string(root_) + ")";
}

Threshold Threshold::parse(std::string_view text) {
  const auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return Threshold(parse_rational(text));
  std::string_view scale = text.substr(0, star);
  if (!scale.empty() && scale.front() == '(' && scale.back() == ')') {
    scale = scale.substr(1, scale.size() - 2);
  }
  std::string_view root = text.substr(star + 6);
  if (root.empty() || root.back() != ')') {
    throw ConfigError("cannot parse threshold '" + std::string(text) + "'");
  }
  root = root.substr(0, root.size() - 1);
  return Threshold(parse_rational(scale), parse_rational(root));
}

}  // namespace nearcurve
