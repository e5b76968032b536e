// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace qalg
{

Monomial
operator*(Monomial const& a, Monomial const& b)
{
    std::uint64_t const carry = a.mLo & b.mLo;
    std::uint64_t const overflow = (a.mHi & b.mHi) | ((a.mHi ^ b.mHi) & carry);
    if (overflow != 0)
    {
        throw std::overflow_error("monomial exponent exceeds 3");
    }
    return {a.mLo ^ b.mLo, a.mHi ^ b.mHi ^ carry};
}

Monomial
variableMonomial(PolyRing const& ring, Variable v)
{
    return Monomial::squarefree(ring.bit(v));
}

std::string
toString(Monomial const& m, PolyRing const& ring)
{
    if (m.isOne())
    {
        return "1";
    }
    std::string out;
    for (int pos = 0; pos < ring.numVariables(); ++pos)
    {
        int const e = m.exponent(pos);
        if (e == 0)
        {
            continue;
        }
        if (!out.empty())
        {
            out += '*';
        }
        out += toString(ring.variableAt(pos));
        if (e > 1)
        {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

namespace
{

// Sorts decreasing and cancels equal pairs.
void
normalise(std::vector<Monomial>& terms)
{
    std::sort(terms.begin(), terms.end(), std::greater<>{});
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size())
    {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
        {
            ++j;
        }
        if ((j - i) % 2 == 1)
        {
            terms[out++] = terms[i];
        }
        i = j;
    }
    terms.resize(out);
}

// Symmetric difference of two strictly decreasing sequences.
std::vector<Monomial>
mergeXor(std::span<Monomial const> a, std::span<Monomial const> b)
{
    std::vector<Monomial> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size())
    {
        if (a[i] > b[j])
        {
            out.push_back(a[i++]);
        }
        else if (b[j] > a[i])
        {
            out.push_back(b[j++]);
        }
        else
        {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

void
requireSameRing(Polynomial const& f, Polynomial const& g)
{
    if (!(f.ring() == g.ring()))
    {
        throw std::invalid_argument("polynomials live in different rings (" +
                                    f.ring().order().toString() + " n=" +
                                    std::to_string(f.ring().n()) + " vs " +
                                    g.ring().order().toString() + " n=" +
                                    std::to_string(g.ring().n()) + ")");
    }
}

} // namespace

Polynomial::Polynomial(PolyRing ring, std::vector<Monomial> terms)
    : mRing(ring), mTerms(std::move(terms))
{
    std::uint64_t const valid = mRing.allVariablesMask();
    for (auto const& t : mTerms)
    {
        if ((t.support() & ~valid) != 0)
        {
            throw std::out_of_range("monomial uses variables outside the ring");
        }
    }
    normalise(mTerms);
}

Polynomial
fromSortedTerms(PolyRing ring, std::vector<Monomial> terms)
{
    return Polynomial(ring, std::move(terms), Polynomial::Sorted{});
}

Polynomial
Polynomial::one(PolyRing ring)
{
    return fromSortedTerms(ring, {Monomial{}});
}

Polynomial
Polynomial::variable(PolyRing ring, Variable v)
{
    return fromSortedTerms(ring, {variableMonomial(ring, v)});
}

Polynomial
Polynomial::monomial(PolyRing ring, Monomial m)
{
    return Polynomial(ring, {m});
}

bool
Polynomial::contains(Monomial const& m) const
{
    return std::binary_search(mTerms.begin(), mTerms.end(), m,
                              std::greater<>{});
}

std::uint64_t
Polynomial::support() const
{
    std::uint64_t s = 0;
    for (auto const& t : mTerms)
    {
        s |= t.support();
    }
    return s;
}

bool
Polynomial::isSquarefree() const
{
    return std::all_of(mTerms.begin(), mTerms.end(),
                       [](Monomial const& t) { return t.isSquarefree(); });
}

Polynomial&
Polynomial::operator+=(Polynomial const& other)
{
    requireSameRing(*this, other);
    mTerms = mergeXor(mTerms, other.mTerms);
    return *this;
}

Polynomial
operator+(Polynomial a, Polynomial const& b)
{
    a += b;
    return a;
}

Polynomial
polyAdd(Polynomial const& f, Polynomial const& g)
{
    return f + g;
}

Polynomial
multiplyByMonomial(Polynomial const& f, Monomial const& m)
{
    // Monomial orders are multiplicative, so the order is preserved.
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (auto const& t : f.terms())
    {
        terms.push_back(t * m);
    }
    return fromSortedTerms(f.ring(), std::move(terms));
}

Polynomial
polyMul(Polynomial const& f, Polynomial const& g, bool boolean)
{
    requireSameRing(f, g);
    std::vector<Monomial> terms;
    terms.reserve(f.size() * g.size());
    for (auto const& a : f.terms())
    {
        for (auto const& b : g.terms())
        {
            if (boolean)
            {
                terms.push_back(Monomial::squarefree(a.support() | b.support()));
            }
            else
            {
                terms.push_back(a * b);
            }
        }
    }
    normalise(terms);
    return fromSortedTerms(f.ring(), std::move(terms));
}

Polynomial
booleanReduce(Polynomial const& f)
{
    if (f.isSquarefree())
    {
        return f;
    }
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (auto const& t : f.terms())
    {
        terms.push_back(t.booleanReduced());
    }
    normalise(terms);
    return fromSortedTerms(f.ring(), std::move(terms));
}

Monomial
leadingMonomial(Polynomial const& f)
{
    if (f.isZero())
    {
        throw std::domain_error("leading monomial of the zero polynomial");
    }
    return f.terms().front();
}

Monomial
trailingMonomial(Polynomial const& f)
{
    if (f.isZero())
    {
        throw std::domain_error("trailing monomial of the zero polynomial");
    }
    return f.terms().back();
}

Polynomial
reorder(Polynomial const& f, PolyRing const& target)
{
    PolyRing const& src = f.ring();
    if (src.n() != target.n())
    {
        throw std::invalid_argument("reorder needs rings of equal dimension");
    }
    // Source position -> target bit.
    std::vector<std::uint64_t> map(static_cast<std::size_t>(src.numVariables()));
    std::uint64_t const used = f.support();
    for (int pos = 0; pos < src.numVariables(); ++pos)
    {
        if ((used & PolyRing::bitOf(pos)) != 0)
        {
            map[static_cast<std::size_t>(pos)] =
                target.bit(src.variableAt(pos));
        }
    }
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (auto const& t : f.terms())
    {
        std::uint64_t lo = 0;
        std::uint64_t hi = 0;
        for (std::uint64_t s = t.support(); s != 0; s &= s - 1)
        {
            int const bit = std::countr_zero(s);
            std::uint64_t const to = map[static_cast<std::size_t>(63 - bit)];
            if ((t.lo() >> bit) & 1U)
            {
                lo |= to;
            }
            if ((t.hi() >> bit) & 1U)
            {
                hi |= to;
            }
        }
        terms.emplace_back(lo, hi);
    }
    return Polynomial(target, std::move(terms));
}

bool
evaluate(Polynomial const& f, Point p)
{
    bool value = false;
    for (auto const& t : f.terms())
    {
        if ((t.support() & ~p.bits) == 0)
        {
            value = !value;
        }
    }
    return value;
}

bool
evaluate(Polynomial const& f, std::map<Variable, bool> const& point)
{
    PolyRing const& ring = f.ring();
    Point p;
    for (std::uint64_t s = f.support(); s != 0; s &= s - 1)
    {
        int const bit = std::countr_zero(s);
        Variable const v = ring.variableAt(63 - bit);
        auto it = point.find(v);
        if (it == point.end())
        {
            throw std::invalid_argument("variable " + toString(v) +
                                        " is unassigned");
        }
        if (it->second)
        {
            p.bits |= std::uint64_t{1} << bit;
        }
    }
    return evaluate(f, p);
}

std::string
toString(Polynomial const& f)
{
    if (f.isZero())
    {
        return "0";
    }
    std::string out;
    for (auto const& t : f.terms())
    {
        if (!out.empty())
        {
            out += " + ";
        }
        out += toString(t, f.ring());
    }
    return out;
}

} // namespace qalg
