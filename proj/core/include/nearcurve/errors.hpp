// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <stdexcept>
#include <string>

namespace nearcurve {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad grammar, parameter outside its documented domain,
/// unusable combination of options. CLI exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold for the given instance, so the
/// requested bound is withheld. CLI exit status 3.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// No valid two-sided derivative certificate exists (the derivative
/// vanishes or changes sign on the interval).
class CertificateError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// A point could not be classified: its distance to the threshold is
/// below the precision guard band. CLI exit status 4.
class GuardBandError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug. CLI exit status 5.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace nearcurve
