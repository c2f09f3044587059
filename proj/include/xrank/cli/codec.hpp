#pragma once

// JSON codecs for the command-line interface. Rationals are "num/den"
// strings; polynomials are {vars, terms: [{exps, coeff}]} with terms in the
// library's grevlex order; curves are {ambient, degree, components}.
// Decoders throw InvalidInput on anything that is not canonical.

#include <string>
#include <vector>

#include "xrank/core/certificate.hpp"
#include "xrank/curves/curve.hpp"

namespace xrank::cli {

Json encode_rational(const Rational& r);
Rational decode_rational(const Json& j);

Json encode_point(const std::vector<Rational>& p);
std::vector<Rational> decode_point(const Json& j);

Json encode_polynomial(const MPoly& p);
MPoly decode_polynomial(const Json& j);

Json encode_curve(const RationalCurve& c);
RationalCurve decode_curve(const Json& j);

/// Parses JSON text; syntax errors become InvalidInput naming the byte offset.
Json parse_json(const std::string& text);

}  // namespace xrank::cli
