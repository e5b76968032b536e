// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "qalg/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qalg
{

struct ParseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Grammar (whitespace insignificant):
//   poly := term ('+' term)*       term := '1' | '0' | var ('*' var)*
//   var  := ('x'|'y'|'z'|'t') index
// Indices outside 1..n or blocks missing from the ring are rejected.
Polynomial parsePolynomial(std::string_view text, PolyRing const& ring);

// Polynomials separated by ',', ';' or newlines. Blank entries are skipped,
// so an empty text yields an empty list (the zero ideal).
std::vector<Polynomial> parsePolynomialList(std::string_view text,
                                            PolyRing const& ring);

// Lexical scan of a polynomial list: the blocks mentioned (in X,Y,Z,T order)
// and the largest index seen (0 if none).
struct PolynomialTextInfo
{
    std::vector<Block> blocks;
    int maxIndex = 0;
};
PolynomialTextInfo scanPolynomialText(std::string_view text);

} // namespace qalg
