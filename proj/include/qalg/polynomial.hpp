// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "qalg/monomial.hpp"
#include "qalg/ring.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qalg
{

// Assignment of bits to ring variables, in monomial bit layout.
struct Point
{
    std::uint64_t bits = 0;

    friend bool operator==(Point const&, Point const&) = default;
    friend auto operator<=>(Point const&, Point const&) = default;
};

// Polynomial over F2. Terms are kept strictly decreasing under the ring's
// order, so the leading monomial is front() and the trailing one back().
// The zero polynomial has no terms; the constant 1 is the empty monomial.
class Polynomial
{
  public:
    Polynomial() = default;
    explicit Polynomial(PolyRing ring) : mRing(ring)
    {
    }
    // Terms may be unsorted and repeated; pairs cancel mod 2.
    Polynomial(PolyRing ring, std::vector<Monomial> terms);

    static Polynomial
    zero(PolyRing ring)
    {
        return Polynomial(ring);
    }
    static Polynomial one(PolyRing ring);
    static Polynomial variable(PolyRing ring, Variable v);
    static Polynomial monomial(PolyRing ring, Monomial m);

    PolyRing const&
    ring() const
    {
        return mRing;
    }
    std::span<Monomial const>
    terms() const
    {
        return mTerms;
    }
    std::size_t
    size() const
    {
        return mTerms.size();
    }
    bool
    isZero() const
    {
        return mTerms.empty();
    }
    bool
    isOne() const
    {
        return mTerms.size() == 1 && mTerms.front().isOne();
    }
    bool contains(Monomial const& m) const;
    // Union of variable bits over all terms.
    std::uint64_t support() const;
    bool isSquarefree() const;

    friend bool operator==(Polynomial const&, Polynomial const&) = default;

    Polynomial& operator+=(Polynomial const& other);
    friend Polynomial operator+(Polynomial a, Polynomial const& b);

  private:
    struct Sorted
    {
    };
    Polynomial(PolyRing ring, std::vector<Monomial> terms, Sorted)
        : mRing(ring), mTerms(std::move(terms))
    {
    }
    friend Polynomial fromSortedTerms(PolyRing ring,
                                      std::vector<Monomial> terms);

    PolyRing mRing;
    std::vector<Monomial> mTerms;
};

// Wraps terms already strictly decreasing; no normalisation is performed.
Polynomial fromSortedTerms(PolyRing ring, std::vector<Monomial> terms);

// Characteristic-2 sum (symmetric difference of terms). Throws
// std::invalid_argument if the rings differ.
Polynomial polyAdd(Polynomial const& f, Polynomial const& g);

// Product in F2[vars]; with `boolean` every exponent is clamped to 1 before
// merging, i.e. the product in the Boolean ring.
Polynomial polyMul(Polynomial const& f, Polynomial const& g, bool boolean);

Polynomial multiplyByMonomial(Polynomial const& f, Monomial const& m);

// Canonical representative modulo the field polynomials X_i^2 + X_i.
Polynomial booleanReduce(Polynomial const& f);

// Throws std::domain_error on the zero polynomial.
Monomial leadingMonomial(Polynomial const& f);
Monomial trailingMonomial(Polynomial const& f);

// Same polynomial expressed in `target` (another block order and/or block
// set of the same n). Throws std::out_of_range if a variable of f has no
// place in target.
Polynomial reorder(Polynomial const& f, PolyRing const& target);

// F2 value at a 0/1 point.
bool evaluate(Polynomial const& f, Point p);
// Throws std::invalid_argument if a variable occurring in f is unassigned.
bool evaluate(Polynomial const& f, std::map<Variable, bool> const& point);

// "x1*x2 + y2 + 1"; the zero polynomial prints as "0".
std::string toString(Polynomial const& f);

} // namespace qalg
