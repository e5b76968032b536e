// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "qalg/ring.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace qalg
{

// A power product over at most 64 variables. Exponents are stored as two
// bit-planes (lo + 2*hi), so each exponent lies in 0..3. Bit (63 - p) holds
// position p; with the ring's layout, lexicographic comparison of exponent
// vectors is a comparison at the most significant differing bit.
class Monomial
{
  public:
    constexpr Monomial() = default;
    constexpr Monomial(std::uint64_t lo, std::uint64_t hi) : mLo(lo), mHi(hi)
    {
    }

    static constexpr Monomial
    squarefree(std::uint64_t support)
    {
        return Monomial{support, 0};
    }

    constexpr std::uint64_t
    lo() const
    {
        return mLo;
    }
    constexpr std::uint64_t
    hi() const
    {
        return mHi;
    }
    constexpr std::uint64_t
    support() const
    {
        return mLo | mHi;
    }
    constexpr bool
    isOne() const
    {
        return (mLo | mHi) == 0;
    }
    constexpr bool
    isSquarefree() const
    {
        return mHi == 0;
    }
    constexpr int
    degree() const
    {
        return std::popcount(mLo) + 2 * std::popcount(mHi);
    }
    constexpr int
    exponentAtBit(int bit) const
    {
        return static_cast<int>((mLo >> bit) & 1U) +
               2 * static_cast<int>((mHi >> bit) & 1U);
    }
    int
    exponent(int position) const
    {
        return exponentAtBit(63 - position);
    }

    // Idempotent image: every exponent clamped to min(e, 1).
    constexpr Monomial
    booleanReduced() const
    {
        return squarefree(mLo | mHi);
    }

    friend constexpr bool operator==(Monomial const&,
                                     Monomial const&) = default;

    friend constexpr std::strong_ordering
    operator<=>(Monomial const& a, Monomial const& b)
    {
        std::uint64_t const d = (a.mLo ^ b.mLo) | (a.mHi ^ b.mHi);
        if (d == 0)
        {
            return std::strong_ordering::equal;
        }
        int const top = 63 - std::countl_zero(d);
        return a.exponentAtBit(top) <=> b.exponentAtBit(top);
    }

    // Ordinary-ring product; throws std::overflow_error past exponent 3.
    friend Monomial operator*(Monomial const& a, Monomial const& b);

  private:
    // Lanes where a's exponent exceeds b's.
    static constexpr std::uint64_t
    greaterLanes(Monomial const& a, Monomial const& b)
    {
        return (a.mHi & ~b.mHi) | (~(a.mHi ^ b.mHi) & a.mLo & ~b.mLo);
    }

    friend constexpr bool divides(Monomial const& d, Monomial const& m);
    friend constexpr Monomial lcm(Monomial const& a, Monomial const& b);
    friend constexpr Monomial gcd(Monomial const& a, Monomial const& b);
    friend constexpr Monomial quotient(Monomial const& m, Monomial const& d);

    std::uint64_t mLo = 0;
    std::uint64_t mHi = 0;
};

constexpr bool
divides(Monomial const& d, Monomial const& m)
{
    return Monomial::greaterLanes(d, m) == 0;
}

constexpr Monomial
lcm(Monomial const& a, Monomial const& b)
{
    std::uint64_t const g = Monomial::greaterLanes(a, b);
    return {(a.mLo & g) | (b.mLo & ~g), (a.mHi & g) | (b.mHi & ~g)};
}

constexpr Monomial
gcd(Monomial const& a, Monomial const& b)
{
    std::uint64_t const g = Monomial::greaterLanes(a, b);
    return {(b.mLo & g) | (a.mLo & ~g), (b.mHi & g) | (a.mHi & ~g)};
}

// m / d; requires divides(d, m).
constexpr Monomial
quotient(Monomial const& m, Monomial const& d)
{
    std::uint64_t const borrow = ~m.mLo & d.mLo;
    return {m.mLo ^ d.mLo, m.mHi ^ d.mHi ^ borrow};
}

constexpr bool
coprime(Monomial const& a, Monomial const& b)
{
    return (a.support() & b.support()) == 0;
}

Monomial variableMonomial(PolyRing const& ring, Variable v);

// "x1*y2^2", or "1".
std::string toString(Monomial const& m, PolyRing const& ring);

} // namespace qalg
