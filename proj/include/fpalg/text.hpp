#pragma once

// Text syntax for scalars, polynomials, automorphisms and presentations.
//
//   scalar        integers, t / t1..tk, + - * / ^ and parentheses: (t1^2 - 1)/(t1 - 1)
//   polynomial    same operators over generator names: x1*x1 + x2*x2 + (t)*x1*x2
//   automorphism  comma-separated clauses "t1 -> 2*t1 + 1, t2 -> t3"; unlisted
//                 generators are fixed; "identity" (or empty) is the identity
//   presentation  algebra NAME over Q | Q(t) | Q(t1,...,tk)
//                 generators x1 x2 ...
//                 relations { <poly> = 0; ... }
//
// '#' starts a comment that runs to the end of the line.

#include "fpalg/freealg.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/scalars.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpalg {

/// Parses a field element. With a field, generator names beyond it are an
/// error; without one, the smallest field containing the value is implied.
Scalar parse_scalar(std::string_view text, const std::optional<FieldSpec>& field = std::nullopt);

/// Parses a polynomial whose generators carry the given names.
NCPoly parse_polynomial(std::string_view text, const PolyContext& ctx,
                        const std::vector<std::string>& generator_names);
NCPoly parse_polynomial(std::string_view text, const Presentation& p);

/// Semicolon-separated list of polynomials.
std::vector<NCPoly> parse_polynomial_list(std::string_view text, const Presentation& p);

FieldAutomorphism parse_automorphism(std::string_view text, const FieldSpec& field);
/// Semicolon-separated list of automorphisms.
std::vector<FieldAutomorphism> parse_automorphism_list(std::string_view text, const FieldSpec& field);

Presentation parse_presentation(std::string_view text);

std::string format_word(const Word& w, const std::vector<std::string>& generator_names);
std::string format_polynomial(const NCPoly& f, const std::vector<std::string>& generator_names);
std::string format_presentation(const Presentation& p);

/// Machine-readable form: words as lists of 1-based generator indices,
/// coefficients as canonical strings.
nlohmann::ordered_json polynomial_data(const NCPoly& f);
nlohmann::ordered_json presentation_data(const Presentation& p);

} // namespace fpalg
