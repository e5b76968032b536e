// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/set_encoding.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qalg
{

namespace
{

void
requireDistinct(std::span<Block const> blocks)
{
    for (std::size_t a = 0; a < blocks.size(); ++a)
    {
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
        {
            if (blocks[a] == blocks[b])
            {
                throw std::invalid_argument(
                    std::string("block ") + blockLetter(blocks[a]) +
                    " used in two roles");
            }
        }
    }
}

Polynomial
var(PolyRing const& ring, Block b, int i)
{
    return Polynomial::variable(ring, {b, i});
}

Polynomial
mul(Polynomial const& f, Polynomial const& g)
{
    return polyMul(f, g, true);
}

std::uint64_t
groundMask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void
requireCompatible(CharPoly const& a, CharPoly const& b)
{
    if (a.block() != b.block())
    {
        throw std::invalid_argument(
            "characteristic polynomials over different blocks");
    }
    if (a.support().n() != b.support().n())
    {
        throw std::invalid_argument(
            "characteristic polynomials over different ground sets");
    }
}

} // namespace

Point
embed(PolyRing const& ring, Point base, Block b, ProcessSubset const& s)
{
    if (s.n() != ring.n())
    {
        throw std::invalid_argument("subset and ring disagree on n");
    }
    Point p = base;
    p.bits &= ~ring.blockMask(b);
    for (int i : phiInverse(s))
    {
        p.bits |= ring.bit({b, i});
    }
    return p;
}

Point
embed(PolyRing const& ring,
      std::span<std::pair<Block, ProcessSubset> const> parts)
{
    Point p;
    for (auto const& [b, s] : parts)
    {
        p = embed(ring, p, b, s);
    }
    return p;
}

ProcessSubset
project(PolyRing const& ring, Point p, Block b)
{
    std::uint64_t bits = 0;
    for (int i = 1; i <= ring.n(); ++i)
    {
        if ((p.bits & ring.bit({b, i})) != 0)
        {
            bits |= std::uint64_t{1} << (i - 1);
        }
    }
    return ProcessSubset(ring.n(), bits);
}

Polynomial
specialize(Polynomial const& f, std::uint64_t vars, Point values)
{
    std::vector<Monomial> terms;
    for (auto const& t : f.terms())
    {
        std::uint64_t const fixed = t.support() & vars;
        if ((fixed & ~values.bits) != 0)
        {
            continue; // a variable set to 0
        }
        terms.emplace_back(t.lo() & ~vars, t.hi() & ~vars);
    }
    return Polynomial(f.ring(), std::move(terms));
}

Polynomial
gammaPoly(PolyRing const& ring, Block a, Block b)
{
    Block const roles[] = {a, b};
    requireDistinct(roles);
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= ring.n(); ++i)
    {
        Polynomial const bi = var(ring, b, i);
        acc = mul(acc, mul(var(ring, a, i), bi) + bi + one);
    }
    return acc + one;
}

Polynomial
sigmaPoly(PolyRing const& ring, Block a, Block b)
{
    Block const roles[] = {a, b};
    requireDistinct(roles);
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= ring.n(); ++i)
    {
        acc = mul(acc, mul(var(ring, a, i), var(ring, b, i)) + one);
    }
    return acc;
}

Polynomial
deltaPoly(PolyRing const& ring, std::span<Block const> meet, Block cover)
{
    if (meet.size() < 2)
    {
        throw std::invalid_argument("delta needs at least two meet blocks");
    }
    std::vector<Block> roles(meet.begin(), meet.end());
    roles.push_back(cover);
    requireDistinct(roles);
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= ring.n(); ++i)
    {
        Polynomial m = one;
        for (auto b : meet)
        {
            m = mul(m, var(ring, b, i));
        }
        acc = mul(acc, mul(var(ring, cover, i), m) + m + one);
    }
    return acc;
}

Polynomial
lambdaPoly(PolyRing const& ring, SetSystem const& failProne, Block b)
{
    if (failProne.empty())
    {
        throw std::invalid_argument("lambda of an empty system");
    }
    if (failProne.n() != ring.n())
    {
        throw std::invalid_argument("system and ring disagree on n");
    }
    // gamma(phi(F), V) is built in a scratch ring holding the fixed block
    // and V, then specialised and moved back into `ring`.
    Block const fixed = b == Block::X ? Block::Y : Block::X;
    PolyRing const scratch(ring.n(), BlockLexOrder{fixed, b});
    Polynomial const gamma = gammaPoly(scratch, fixed, b);
    std::uint64_t const fixedVars = scratch.blockMask(fixed);

    Polynomial acc = Polynomial::one(ring);
    for (auto const& f : failProne.members())
    {
        Point const at = embed(scratch, Point{}, fixed, f);
        acc = mul(acc, reorder(specialize(gamma, fixedVars, at), ring));
    }
    return acc;
}

Polynomial
omegaPoly(PolyRing const& ring, std::span<Block const> blocks)
{
    if (blocks.size() != 3 && blocks.size() != 4)
    {
        throw std::invalid_argument("omega takes 3 or 4 blocks");
    }
    requireDistinct(blocks);
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= ring.n(); ++i)
    {
        Polynomial none = one;
        for (auto b : blocks)
        {
            none = mul(none, var(ring, b, i) + one);
        }
        acc = mul(acc, none + one);
    }
    return acc;
}

FactoredForm
CharPoly::factored() const
{
    return {mSupport.n(), mSupport.bits(), cofactorMask()};
}

CharPoly
CharPoly::fromFactored(FactoredForm const& form, Block b)
{
    std::uint64_t const ground = groundMask(form.n);
    if ((form.mono & form.ones) != 0 || (form.mono | form.ones) != ground)
    {
        throw std::logic_error(
            "factored form is not a characteristic polynomial");
    }
    return CharPoly(ProcessSubset(form.n, form.mono), b);
}

CharPoly
charPoly(ProcessSubset const& s, Block b)
{
    return CharPoly(s, b);
}

std::string
factoredString(FactoredForm const& form, Block b)
{
    std::string out;
    auto append = [&out](std::string const& factor) {
        out += out.empty() ? "" : "*";
        out += factor;
    };
    char const letter = blockLetter(b);
    for (int i = 1; i <= form.n; ++i)
    {
        if ((form.mono >> (i - 1)) & 1U)
        {
            append(letter + std::to_string(i));
        }
    }
    for (int i = 1; i <= form.n; ++i)
    {
        if ((form.ones >> (i - 1)) & 1U)
        {
            append("(1 + " + (letter + std::to_string(i)) + ")");
        }
    }
    return out.empty() ? "1" : out;
}

Polynomial
expandCharPoly(PolyRing const& ring, ProcessSubset const& s, Block b)
{
    if (s.n() != ring.n())
    {
        throw std::invalid_argument("subset and ring disagree on n");
    }
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= ring.n(); ++i)
    {
        Polynomial factor = one + var(ring, b, i);
        if (s.contains(i))
        {
            factor += one;
        }
        acc = mul(acc, factor);
    }
    return acc;
}

Polynomial
expand(PolyRing const& ring, CharPoly const& xi)
{
    return expandCharPoly(ring, xi.support(), xi.block());
}

Polynomial
expand(PolyRing const& ring, FactoredForm const& form, Block b)
{
    if (form.n != ring.n())
    {
        throw std::invalid_argument("factored form and ring disagree on n");
    }
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (int i = 1; i <= form.n; ++i)
    {
        std::uint64_t const bit = std::uint64_t{1} << (i - 1);
        if ((form.mono & bit) != 0)
        {
            acc = mul(acc, var(ring, b, i));
        }
        if ((form.ones & bit) != 0)
        {
            acc = mul(acc, one + var(ring, b, i));
        }
    }
    return acc;
}

CharPoly
charComplement(CharPoly const& xi)
{
    // xi_empty = prod (1 + V_i), xi_P = prod V_i; dividing their product by
    // xi_S = prod_{S} V_i prod_{S^c} (1 + V_i) leaves prod_{S^c} V_i
    // prod_{S} (1 + V_i).
    FactoredForm const whole{xi.support().n(), groundMask(xi.support().n()),
                             groundMask(xi.support().n())};
    FactoredForm const f = xi.factored();
    return CharPoly::fromFactored(
        {f.n, whole.mono & ~f.mono, whole.ones & ~f.ones}, xi.block());
}

Polynomial
systemCharPoly(PolyRing const& ring, SetSystem const& system, Block b)
{
    if (system.empty())
    {
        throw std::invalid_argument("characteristic polynomial of an empty "
                                    "system");
    }
    Polynomial const one = Polynomial::one(ring);
    Polynomial acc = one;
    for (auto const& a : system.members())
    {
        acc = mul(acc, expandCharPoly(ring, a, b) + one);
    }
    return acc;
}

CharPoly
charIntersection(CharPoly const& q, CharPoly const& r)
{
    requireCompatible(q, r);
    std::uint64_t const mu = q.trailingMask() & r.trailingMask();  // gcd
    std::uint64_t const nu = q.cofactorMask() | r.cofactorMask(); // (1+V)^2 = 1+V
    return CharPoly::fromFactored({q.support().n(), mu, nu}, q.block());
}

CharPoly
charUnion(CharPoly const& q, CharPoly const& r)
{
    requireCompatible(q, r);
    std::uint64_t const mu = q.trailingMask() | r.trailingMask();
    std::uint64_t const nu = q.cofactorMask() & r.cofactorMask();
    return CharPoly::fromFactored({q.support().n(), mu, nu}, q.block());
}

CharPoly
charDifference(CharPoly const& q, CharPoly const& r, CharPoly const& f)
{
    requireCompatible(q, r);
    requireCompatible(q, f);
    int const n = q.support().n();
    // xi_P / TM(xi_F) = prod_{i not in F} V_i = TM(xi_{F^c}).
    std::uint64_t const pOverF = groundMask(n) & ~f.trailingMask();
    CharPoly const fc = charComplement(f);
    std::uint64_t const mu = pOverF & q.trailingMask() & r.trailingMask();
    std::uint64_t const nu =
        q.cofactorMask() | r.cofactorMask() | fc.cofactorMask();
    return CharPoly::fromFactored({n, mu, nu}, q.block());
}

CharPoly
charRingAdd(CharPoly const& a, CharPoly const& b)
{
    // (A cup B) \ (A cap B) = (A cup B) cap (A cap B)^c
    return charIntersection(charUnion(a, b),
                            charComplement(charIntersection(a, b)));
}

CharPoly
charRingMul(CharPoly const& a, CharPoly const& b)
{
    return charIntersection(a, b);
}

} // namespace qalg
