#pragma once

#include <string>

#include "bq/algebra.hpp"
#include "bq/holoexpr.hpp"

namespace bq {

/// Coordinate system for expression text: Cartan text uses z1..z4,
/// Standard text uses t0..t3 (both map onto variable indices 1..4).
using Coords = Basis;

/// Parse expression text. Grammar, loosest to tightest binding:
///   sum     := product (('+' | '-') product)*
///   product := factor ('*' factor)*
///   factor  := '-' factor | power
///   power   := atom ['^' nonnegative-integer]
///   atom    := number | number 'i' | 'i' | variable
///            | 'exp' '(' sum ')' | '(' sum ')'
/// Numbers accept decimal and exponent notation; whitespace is ignored.
/// Throws SyntaxError with the byte offset of the problem, or
/// WrongCoordinateSystem when a variable of the other family appears.
HoloExpr parse_expr(const std::string& text, Coords coords);

/// Canonical text: print_expr(e) renders normalize(e), and
/// parse_expr(print_expr(e)) == normalize(e).
std::string print_expr(const HoloExpr& e, Coords coords);

}  // namespace bq
