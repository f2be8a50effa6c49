// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearcurve/numeric.hpp"

namespace nearcurve {

enum class CurveFamily {
  kMonomialSum,       // sum of c * sqrt(r) * (x + s)^e terms
  kReciprocalSquare,  // x0 / (x + s)^2
  kSqrtReciprocal,    // sqrt(x0 / (x + s))
};

std::string family_name(CurveFamily family);

/// One summand c * sqrt(root) * (x + shift)^exponent. Every catalog family
/// reduces to a sum of these, and the falling factorial rule keeps all
/// derivative orders in the same closed form.
struct PowerTerm {
  Rational coefficient;
  Rational exponent;
  Rational shift = 0;
  Rational root = 1;  // multiplied in as sqrt(root); root > 0
};

/// An evaluable curve on the integer interval [lo, hi] (hi = 2*lo for
/// catalog records). Immutable after construction; all evaluation entry
/// points are const and safe to call concurrently.
class CurveSpec {
 public:
  CurveSpec(std::string name, CurveFamily family, std::vector<PowerTerm> terms,
            long long lo, long long hi, int max_order = kDefaultMaxOrder);

  static constexpr int kDefaultMaxOrder = 16;

  const std::string& name() const { return name_; }
  CurveFamily family() const { return family_; }
  long long lo() const { return lo_; }
  long long hi() const { return hi_; }
  /// Dyadic size parameter; equals lo(), the N of the interval [N, 2N].
  long long N() const { return lo_; }
  int max_order() const { return max_order_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }

  /// Terms of the order-th derivative (order 0 is the curve itself).
  const std::vector<PowerTerm>& derivative_terms(int order) const;

  /// True when every term of every derivative is rational at rational
  /// abscissas, so evaluation can be exact.
  bool exact_evaluable() const { return exact_evaluable_; }

  /// f^(order)(x) as an exact rational; disengaged unless exact_evaluable().
  std::optional<Rational> evaluate_exact(int order, const Rational& x) const;

  /// f^(order)(x) with relative error below 2^(1-precision).
  /// The evaluation widens its working precision when the term sum
  /// cancels, so the contract holds for difference curves too.
  Real evaluate(int order, const Rational& x, unsigned precision) const;
  Real evaluate(int order, long long x, unsigned precision) const;

 private:
  std::string name_;
  CurveFamily family_;
  std::vector<PowerTerm> terms_;
  long long lo_;
  long long hi_;
  int max_order_;
  bool exact_evaluable_;
  // derivative term lists for every order up to max_order_, precomputed so
  // the object is immutable afterwards
  std::vector<std::vector<PowerTerm>> derivatives_;
};

/// Two-sided magnitude certificate for f^(order):
/// lambda <= |f^(order)(x)| <= c * lambda on the curve interval.
struct DerivativeCertificate {
  int order = 0;
  Real lambda;
  Real c;
  /// True when the enclosure comes from endpoint values of a provably
  /// monotone derivative; false when it comes from dense sampling with a
  /// 1 percent safety margin.
  bool certified = false;
};

/// Certificate for f^(order) on the curve interval. Throws
/// CertificateError when the derivative vanishes or changes sign there.
DerivativeCertificate certify_bounds(const CurveSpec& curve, int order,
                                     unsigned precision = 128);

}  // namespace nearcurve
