// Copyright 2026 the nearcurve developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nearcurve/curves.hpp"

namespace nearcurve {

// Curve records are one line of whitespace separated fields:
//
//   <name> <family> <key>=<value> ...
//
// with rationals written "p/q". Families and their keys:
//
//   monomial-sum       terms=<coef>:<exp>[:<shift>[:<root>]][,<term>...]
//                      each term reads coef * sqrt(root) * (x + shift)^exp
//   reciprocal-square  x0=<rational> [shift=<rational>]        x0/(x+shift)^2
//   sqrt-reciprocal    x0=<rational> [shift=<rational>]   sqrt(x0/(x+shift))
//
// Every record takes N=<integer> (the curve lives on [N, 2N]) and an
// optional max-order=<integer>.

/// Parses a single record line. Throws ConfigError with a position hint.
CurveSpec parse_curve_record(std::string_view line);

/// Parses a catalog file: one record per line, '#' comments, blank lines
/// ignored.
std::vector<CurveSpec> parse_catalog(std::string_view text);

/// Names of the built-in curve families used by the sweeps. Each builder
/// scales its parameters with N so instances stay comparable across the
/// dyadic grid.
const std::vector<std::string>& builtin_curve_names();

bool is_builtin_curve(std::string_view name);

/// Built-in curve by name on [N, 2N]. Throws ConfigError for unknown names.
CurveSpec builtin_curve(std::string_view name, long long N);

}  // namespace nearcurve
