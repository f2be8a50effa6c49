// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace nearcurve {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary precision real. The working precision is set through
/// ScopedPrecision; every public entry point that produces Real values
/// installs one, so results carry the precision of the call that made them.
using Real = boost::multiprecision::mpfr_float;

/// Precision is spoken in bits throughout the library.
unsigned bits_to_digits10(unsigned bits);

/// Sets the default MPFR precision (in bits) for the current scope and
/// restores the previous value on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Canonical rational from a possibly non-canonical numerator/denominator
/// pair: gcd 1, positive denominator. Rejects a zero denominator.
Rational make_rational(Integer num, Integer den);

/// Parses "p/q", a plain integer "p", or a decimal literal like "0.25"
/// (decimals are converted exactly). Throws ConfigError on bad syntax.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

Real to_real(const Rational& value);

// Constants at the current default precision.
Real const_e();
Real const_pi();

/// Nearest integer with ties to even, and the distance |v - m| in [0, 1/2].
struct NearestInteger {
  Integer m;
  Real d;
};
NearestInteger nearest_integer_distance(const Real& value);

/// Exact variant for rational inputs. `tie` marks an exact half integer
/// (d == 1/2), where the even neighbour is chosen.
struct NearestIntegerExact {
  Integer m;
  Rational d;
  bool tie;
};
NearestIntegerExact nearest_integer_distance(const Rational& value);

/// Multiplies by (1 + 2^-64). Reported bound values pass through this so
/// that rounding can never make them understate the closed form.
Real round_up_guard(const Real& value);

/// value * 2^exp without precision loss.
Real ldexp2(const Real& value, long exp);

/// A closeness threshold of the form scale * sqrt(root) with rational
/// scale > 0 and root > 0. Plain rational thresholds use root == 1.
/// Comparisons against rational distances are exact, which keeps the
/// enumeration free of guard flags whenever the curve itself is rational.
class Threshold {
 public:
  Threshold() : scale_(0), root_(1) {}
  explicit Threshold(Rational scale) : Threshold(std::move(scale), 1) {}
  Threshold(Rational scale, Rational root);

  const Rational& scale() const { return scale_; }
  const Rational& root() const { return root_; }
  bool is_rational() const { return root_ == 1; }

  Real to_real() const;

  /// Sign of (d - value), computed exactly.
  int compare(const Rational& d) const;
  /// Sign of (*this - other), computed exactly.
  int compare(const Threshold& other) const;

  /// this * factor for a positive rational factor.
  Threshold scaled(const Rational& factor) const;

  /// "p/q" for rational thresholds, "(p/q)*sqrt(r/s)" otherwise.
  std::string to_string() const;

  static Threshold parse(std::string_view text);

 private:
  Rational scale_;
  Rational root_;
};

}  // namespace nearcurve
