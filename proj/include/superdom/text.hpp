#pragma once

#include <superdom/atlas.hpp>
#include <superdom/superfn.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace superdom {

// Expression grammar shared by every text format:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*      juxtaposed variables multiply
//   factor := ['-'] atom ['^' nat]
//   atom   := nat | x<nat> | t<nat> | g<nat> | '(' expr ')'
//
// x_i are even coordinates, t_j odd coordinates, g_k Grassmann generators.
// Errors are ParseError with 1-based line and column.

/// "p|q".
SuperSpace parse_space(std::string_view text);

/// Coordinates x1..xp, t1..tq. Without a space, the smallest one containing
/// every occurring coordinate is used. Division needs a divisor with a
/// nonzero J = {} part.
SuperFunction parse_superfunction(std::string_view text, std::optional<SuperSpace> space = std::nullopt,
                                  std::size_t line = 1, std::size_t column = 1);

/// Generators g1..gN; without a rank, the largest occurring label.
GrassmannElement parse_grassmann(std::string_view text, std::optional<unsigned> rank = std::nullopt,
                                 std::size_t line = 1, std::size_t column = 1);

/// Polynomial in x1..x_nvars.
Polynomial parse_polynomial(std::string_view text, unsigned nvars, std::size_t line = 1, std::size_t column = 1);

/// `c*g1g2` terms in (|I|, lex I) order; `0` for zero.
std::string format_grassmann(const GrassmannElement& a);
std::string format_polynomial(const Polynomial& p);
/// `x1^2 + 2*x1*t1*t2`; non-polynomial coefficients as `(num)/(den)^e*t..`.
std::string format_superfunction(const SuperFunction& f);
std::string format_domain(const DeWittDomain& domain, std::string_view prefix = "");

// Skeleton files:
//
//   source 1|2
//   target 1|1
//   box 0 inf          one open interval per even coordinate, unions by repetition
//   exclude x1 - 1
//   target-box ..., target-exclude ...
//   y1 = <expr>        one line per even target coordinate
//   h1 = <expr>        one line per odd target coordinate
//
// `#` starts a comment.
Skeleton parse_skeleton(std::string_view text);
std::string format_skeleton(const Skeleton& f);

// Point files: optional `rank N`, then `x1 = <grassmann expr>` and
// `t1 = <grassmann expr>` lines; missing coordinates are zero.
LambdaPoint parse_point(std::string_view text, std::optional<SuperSpace> space = std::nullopt);
std::string format_point(const LambdaPoint& x);

// Manifold files: sections `chart <id> <p|q>`, `overlap <i> <j>` (domain
// lines in chart i) and `transition <i> <j>` (y/h assignment lines).
GluingData parse_manifold(std::string_view text);
std::string format_manifold(const GluingData& g);

/// Whole file contents; throws Error when unreadable.
std::string read_file(const std::string& path);

}  // namespace superdom
