// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Polynomial encodings of set relations over P = {P_1..P_n}.
//
// Every relation polynomial below is built as a product over coordinates
// i = 1..n and is returned Boolean-reduced. Block arguments name the
// variable blocks of `ring` that play each role; all must be present in the
// ring and pairwise distinct (std::invalid_argument otherwise).

#include "qalg/polynomial.hpp"
#include "qalg/set_system.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qalg
{

// Point with block b set to phi(S); other coordinates untouched.
Point embed(PolyRing const& ring, Point base, Block b, ProcessSubset const& s);
Point embed(PolyRing const& ring,
            std::span<std::pair<Block, ProcessSubset> const> parts);
ProcessSubset project(PolyRing const& ring, Point p, Block b);

// Substitutes the 0/1 values of `values` for every variable in `vars`.
Polynomial specialize(Polynomial const& f, std::uint64_t vars, Point values);

// gamma(A, B) = prod (A_i B_i + B_i + 1) + 1; zero iff Supp(b) is a subset
// of Supp(a).
Polynomial gammaPoly(PolyRing const& ring, Block a, Block b);

// sigma(A, B) = prod (A_i B_i + 1); zero iff the supports intersect.
Polynomial sigmaPoly(PolyRing const& ring, Block a, Block b);

// prod (C_i M_i + M_i + 1) with M_i the product of the i-th variables of
// the `meet` blocks. Zero iff the intersection of the `meet` supports is not
// contained in the `cover` support. Two meet blocks give delta, three give
// the masking variant delta'.
Polynomial deltaPoly(PolyRing const& ring, std::span<Block const> meet,
                     Block cover);

// prod over F in F of gamma(phi(F), V). Zero locus: phi(F*).
Polynomial lambdaPoly(PolyRing const& ring, SetSystem const& failProne,
                      Block b);

// prod_i (1 + prod_b (1 + V_{b,i})): each factor is the OR of the i-th
// coordinates, so the value is 1 iff the supports jointly cover {1..n}.
// For three blocks the factor expands to XYT + XY + XT + YT + X + Y + T.
Polynomial omegaPoly(PolyRing const& ring, std::span<Block const> blocks);

// Characteristic polynomial xi_S in factored form. The factored form is
//   prod_{i in mono} V_i * prod_{i in ones} (1 + V_i)
// and is a characteristic polynomial exactly when mono and ones partition
// {1..n}; then S = mono and TM(xi_S) = prod_{i in S} V_i.
struct FactoredForm
{
    int n = 1;
    std::uint64_t mono = 0;
    std::uint64_t ones = 0;

    friend bool operator==(FactoredForm const&, FactoredForm const&) = default;
};

class CharPoly
{
  public:
    CharPoly(ProcessSubset support, Block b) : mSupport(support), mBlock(b)
    {
    }
    // Throws std::logic_error if the form is not a characteristic polynomial.
    static CharPoly fromFactored(FactoredForm const& form, Block b);

    ProcessSubset const&
    support() const
    {
        return mSupport;
    }
    Block
    block() const
    {
        return mBlock;
    }
    FactoredForm factored() const;
    // Trailing monomial prod_{i in S} V_i, as a variable mask
    // over {1..n}.
    std::uint64_t
    trailingMask() const
    {
        return mSupport.bits();
    }
    // xi_S / TM(xi_S) = prod_{i not in S} (1 + V_i), as its factor set.
    std::uint64_t
    cofactorMask() const
    {
        return mSupport.complement().bits();
    }

    friend bool operator==(CharPoly const&, CharPoly const&) = default;

  private:
    ProcessSubset mSupport;
    Block mBlock;
};

CharPoly charPoly(ProcessSubset const& s, Block b);

// "y3*y4*(1 + y1)*(1 + y2)"; "1" for the empty product.
std::string factoredString(FactoredForm const& form, Block b);

// prod_i (1 + V_i + phi(S)_i), multiplied out.
Polynomial expandCharPoly(PolyRing const& ring, ProcessSubset const& s,
                          Block b);
Polynomial expand(PolyRing const& ring, CharPoly const& xi);
// mono * prod_{ones} (1 + V_i), multiplied out; any factored form.
Polynomial expand(PolyRing const& ring, FactoredForm const& form, Block b);

// xi_{S^c}; structurally xi_empty * xi_P / xi_S.
CharPoly charComplement(CharPoly const& xi);

// prod over A in A of (xi_A(V) + 1). Zero locus: phi(A).
Polynomial systemCharPoly(PolyRing const& ring, SetSystem const& system,
                          Block b);

// mu = gcd(TM(xi_Q), TM(xi_R)), nu = product of the two cofactors.
CharPoly charIntersection(CharPoly const& q, CharPoly const& r);
// mu = TM(xi_Q) * TM(xi_R), nu = gcd of the two cofactors.
CharPoly charUnion(CharPoly const& q, CharPoly const& r);
// (Q cap R) \ F: mu = gcd(xi_P / TM(xi_F), TM(xi_Q), TM(xi_R)), nu = product
// of the cofactors of Q, R and F^c.
CharPoly charDifference(CharPoly const& q, CharPoly const& r,
                        CharPoly const& f);

// The Boolean ring on characteristic polynomials: xi_A * xi_B = xi_{A xor B}
// (star) and xi_A . xi_B = xi_{A cap B} (diamond).
CharPoly charRingAdd(CharPoly const& a, CharPoly const& b);
CharPoly charRingMul(CharPoly const& a, CharPoly const& b);

} // namespace qalg
