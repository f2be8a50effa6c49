// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "nearcurve/curves.hpp"

#include <algorithm>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

std::string family_name(CurveFamily family) {
  switch (family) {
    case CurveFamily::kMonomialSum: return "monomial-sum";
    case CurveFamily::kReciprocalSquare: return "reciprocal-square";
    case CurveFamily::kSqrtReciprocal: return "sqrt-reciprocal";
  }
  return "?";
}

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Folds perfect square roots into the coefficient and drops zero terms.
std::vector<PowerTerm> normalize(std::vector<PowerTerm> terms) {
  std::vector<PowerTerm> out;
  for (PowerTerm& t : terms) {
    if (t.coefficient == 0) continue;
    if (t.root <= 0) throw ConfigError("term root factor must be positive");
    const Integer rn = numerator(t.root), rd = denominator(t.root);
    if (mpz_perfect_square_p(rn.backend().data()) &&
        mpz_perfect_square_p(rd.backend().data())) {
      t.coefficient *= make_rational(sqrt(rn), sqrt(rd));
      t.root = 1;
      if (t.coefficient == 0) continue;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<PowerTerm> differentiate(const std::vector<PowerTerm>& terms) {
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : terms) {
    if (t.exponent == 0) continue;  // constant term drops out
    PowerTerm d = t;
    d.coefficient *= t.exponent;
    d.exponent -= 1;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

CurveSpec::CurveSpec(std::string name, CurveFamily family,
                     std::vector<PowerTerm> terms, long long lo, long long hi,
                     int max_order)
    : name_(std::move(name)),
      family_(family),
      terms_(normalize(std::move(terms))),
      lo_(lo),
      hi_(hi),
      max_order_(max_order) {
  if (lo_ < 4) throw ConfigError("curve interval must start at N >= 4");
  if (hi_ <= lo_) throw ConfigError("curve interval is empty");
  if (max_order_ < 1) throw ConfigError("max_order must be at least 1");
  if (terms_.empty()) throw ConfigError("curve has no nonzero terms");
  for (const PowerTerm& t : terms_) {
    if (t.shift <= -lo_) {
      throw ConfigError("term shift " + rational_to_string(t.shift) +
                        " makes x + shift vanish on the interval");
    }
  }
  exact_evaluable_ = std::all_of(terms_.begin(), terms_.end(), [](const PowerTerm& t) {
    return t.root == 1 && is_integer(t.exponent);
  });
  derivatives_.reserve(static_cast<size_t>(max_order_) + 2);
  derivatives_.push_back(terms_);
  for (int k = 1; k <= max_order_ + 1; ++k) {
    derivatives_.push_back(differentiate(derivatives_.back()));
  }
}

const std::vector<PowerTerm>& CurveSpec::derivative_terms(int order) const {
  if (order < 0 || order > max_order_ + 1) {
    throw ConfigError("derivative order " + std::to_string(order) +
                      " outside supported range");
  }
  return derivatives_[static_cast<size_t>(order)];
}

std::optional<Rational> CurveSpec::evaluate_exact(int order, const Rational& x) const {
  if (!exact_evaluable_) return std::nullopt;
  const auto& terms = derivative_terms(order);
  Rational sum = 0;
  for (const PowerTerm& t : terms) {
    const Rational base = x + t.shift;
    const long e = numerator(t.exponent).convert_to<long>();
    Rational p;
    if (e >= 0) {
      p = pow(base, static_cast<unsigned>(e));
    } else {
      if (base == 0) throw ConfigError("pole inside evaluation");
      p = 1 / pow(base, static_cast<unsigned>(-e));
    }
    sum += t.coefficient * p;
  }
  return sum;
}

namespace {

// One pass of the term sum at the current default precision. Also returns
// the sum of absolute term values to measure cancellation.
std::pair<Real, Real> sum_terms(const std::vector<PowerTerm>& terms, const Rational& x) {
  Real sum = 0, absum = 0;
  for (const PowerTerm& t : terms) {
    Real v = Real(t.coefficient) * pow(Real(x + t.shift), Real(t.exponent));
    if (t.root != 1) v *= sqrt(Real(t.root));
    sum += v;
    absum += abs(v);
  }
  return {sum, absum};
}

}  // namespace

Real CurveSpec::evaluate(int order, const Rational& x, unsigned precision) const {
  if (order < 0 || order > max_order_) {
    throw ConfigError("unsupported derivative order " + std::to_string(order));
  }
  if (x < lo_ || x > hi_) {
    throw ConfigError("evaluation abscissa outside the curve interval");
  }
  if (precision < 64) throw ConfigError("precision must be at least 64 bits");
  const auto& terms = derivative_terms(order);
  if (terms.empty()) {
    ScopedPrecision guard(precision);
    return Real(0);
  }
  if (exact_evaluable_) {
    ScopedPrecision guard(precision + 8);
    return Real(*evaluate_exact(order, x));
  }
  // First pass with a fixed guard; if the terms cancel, rerun wide enough
  // to absorb the lost leading bits.
  unsigned work = precision + 32;
  {
    ScopedPrecision guard(work);
    auto [sum, absum] = sum_terms(terms, x);
    if (sum == 0 || absum == 0) return sum;
    const Real ratio = absum / abs(sum);
    if (ratio < ldexp2(Real(1), 16)) return sum;
    long lost = 1 + static_cast<long>(mpfr_get_exp(ratio.backend().data()));
    work = precision + 32 + static_cast<unsigned>(std::max(0L, lost));
  }
  ScopedPrecision guard(work);
  return sum_terms(terms, x).first;
}

Real CurveSpec::evaluate(int order, long long x, unsigned precision) const {
  return evaluate(order, Rational(x), precision);
}

namespace {

int sign_of(const Real& v) { return v.sign(); }

struct Enclosure {
  Real lo_mag, hi_mag;  // positive magnitudes
};

// Widens [lo, hi] outward by a relative 2^-80 so that honest evaluation
// error can never break the certificate inequality.
DerivativeCertificate finish(int order, Real min_mag, Real max_mag, bool certified,
                             const char* what) {
  if (min_mag <= 0) {
    throw CertificateError(std::string(what) + ": derivative magnitude reaches zero");
  }
  const Real eps = ldexp2(Real(1), -80);
  DerivativeCertificate cert;
  cert.order = order;
  cert.lambda = min_mag * (1 - eps);
  cert.c = (max_mag * (1 + eps)) / cert.lambda;
  if (cert.c < 1) cert.c = 1;
  cert.certified = certified;
  return cert;
}

}  // namespace

DerivativeCertificate certify_bounds(const CurveSpec& curve, int order,
                                     unsigned precision) {
  if (order < 1 || order > curve.max_order()) {
    throw ConfigError("certificate order outside supported range");
  }
  ScopedPrecision guard(std::max(precision, 128u));
  const auto& dterms = curve.derivative_terms(order);
  const std::string what = curve.name() + " order " + std::to_string(order);
  if (dterms.empty()) {
    throw CertificateError(what + ": derivative vanishes identically");
  }

  // sqrt(root) and (x+shift)^e are positive on the interval, so a
  // derivative one order up whose coefficients share a sign proves
  // monotonicity; an empty one means f^(order) is constant.
  const auto& next = curve.derivative_terms(order + 1);
  const bool monotone =
      next.empty() ||
      std::all_of(next.begin(), next.end(),
                  [&](const PowerTerm& t) {
                    return (t.coefficient > 0) == (next.front().coefficient > 0);
                  });

  if (monotone) {
    const Real at_lo = curve.evaluate(order, curve.lo(), precision);
    const Real at_hi = curve.evaluate(order, curve.hi(), precision);
    if (at_lo == 0 || at_hi == 0 || sign_of(at_lo) != sign_of(at_hi)) {
      throw CertificateError(what + ": derivative changes sign on the interval");
    }
    Real lo_mag = abs(at_lo), hi_mag = abs(at_hi);
    if (lo_mag > hi_mag) std::swap(lo_mag, hi_mag);
    return finish(order, lo_mag, hi_mag, /*certified=*/true, what.c_str());
  }

  // Sampled fallback: dense grid with a 1 percent margin, never certified.
  constexpr int kSamples = 10000;
  const Rational span = Rational(curve.hi()) - Rational(curve.lo());
  Real min_mag, max_mag;
  int sign = 0;
  for (int i = 0; i <= kSamples; ++i) {
    const Rational x = Rational(curve.lo()) + span * Rational(i, kSamples);
    const Real v = curve.evaluate(order, x, precision);
    if (v == 0) throw CertificateError(what + ": derivative reaches zero at a sample");
    if (sign == 0) {
      sign = sign_of(v);
      min_mag = max_mag = abs(v);
      continue;
    }
    if (sign_of(v) != sign) {
      throw CertificateError(what + ": derivative changes sign on the interval");
    }
    const Real mag = abs(v);
    if (mag < min_mag) min_mag = mag;
    if (mag > max_mag) max_mag = mag;
  }
  return finish(order, min_mag * Real(Rational(99, 100)),
                max_mag * Real(Rational(101, 100)),
                /*certified=*/false, what.c_str());
}

}  // namespace nearcurve
