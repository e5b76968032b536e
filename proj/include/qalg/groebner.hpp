// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "qalg/polynomial.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qalg
{

// Generators of an ideal in the Boolean polynomial ring `ring`.
struct IdealBasis
{
    PolyRing ring;
    std::vector<Polynomial> generators;
};

struct BuchbergerOptions
{
    bool useCoprimeCriterion = true;
    bool useChainCriterion = true;
};

struct BuchbergerStats
{
    std::size_t pairsCreated = 0;
    std::size_t pairsReduced = 0;
    std::size_t skippedCoprime = 0;
    std::size_t skippedChain = 0;
    std::size_t zeroReductions = 0;
    std::size_t basisGrowth = 0;
};

struct EliminationCount
{
    std::vector<Block> keptBlocks;
    std::uint64_t smCount = 0;
};

// Reduced Boolean Groebner basis together with standard monomial counts.
//
// `basis` is the reduced GB of <generators, X_i^2 + X_i> with the field
// polynomials stripped (they are kept only when they are the whole basis).
// Every element of `basis` is squarefree. `eliminationCounts` has one entry
// per non-empty proper suffix of the block order.
struct GroebnerCertificate
{
    PolyRing ring;
    std::vector<Polynomial> basis;
    std::uint64_t smCount = 0;
    std::vector<EliminationCount> eliminationCounts;
    BuchbergerStats stats;

    bool isUnitIdeal() const;
    // basis plus every field polynomial not already present: a Groebner
    // basis of the ideal in the ordinary polynomial ring.
    std::vector<Polynomial> withFieldPolynomials() const;
};

struct BudgetExceeded : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// X_i^2 + X_i for every variable of the ring.
std::vector<Polynomial> fieldPolynomials(PolyRing const& ring);
bool isFieldPolynomial(Polynomial const& f);

// f + (LM(f)/LM(g)) * g. Throws std::invalid_argument unless LM(g) | LM(f).
Polynomial reduceOnce(Polynomial const& f, Polynomial const& g);

// Full reduction: no term of the result is divisible by any LM(s), s in S.
// When a term has an exponent >= 2, reducers whose leading monomial lowers a
// squared exponent (the field polynomials) are tried first.
Polynomial normalForm(Polynomial const& f, std::span<Polynomial const> S);

// Throws std::domain_error on zero inputs.
Polynomial spoly(Polynomial const& f, Polynomial const& g);

bool coprimeCriterion(Polynomial const& f, Polynomial const& g);

// Pair-processing state used by the chain criterion: processed(i, j) is true
// once the pair {i, j} has left the pending set.
class PairLedger
{
  public:
    explicit PairLedger(std::size_t size = 0);
    void grow(std::size_t size);
    void markProcessed(std::size_t i, std::size_t j);
    bool processed(std::size_t i, std::size_t j) const;
    std::size_t
    size() const
    {
        return mSize;
    }

  private:
    std::size_t mSize = 0;
    std::vector<std::vector<bool>> mDone;
};

// True iff some g = G[k], k != i, j, has LM(g) | lcm(LM(G[i]), LM(G[j])) and
// both pairs {i, k} and {j, k} are processed.
bool chainCriterion(std::size_t i, std::size_t j,
                    std::span<Polynomial const> G, PairLedger const& ledger);

// Raw Buchberger run over the generators plus field polynomials, without
// the final reduction. Exposed for tests of the pair loop.
std::vector<Polynomial> buchbergerRaw(IdealBasis const& basis,
                                      BuchbergerOptions const& options,
                                      BuchbergerStats* stats = nullptr);

// Minimal, inter-reduced basis of the same ideal (input must be a GB).
std::vector<Polynomial> reduceBasis(std::vector<Polynomial> G);

GroebnerCertificate buchberger(IdealBasis const& basis,
                               BuchbergerOptions const& options = {});

// Basis elements whose variables lie in `keepBlocks`. Throws
// std::invalid_argument unless keepBlocks is a suffix of the block order.
std::vector<Polynomial> eliminationSubbasis(GroebnerCertificate const& cert,
                                            std::span<Block const> keepBlocks);

// Number of squarefree monomials in `vars` (a bit mask) divisible by no
// leading monomial of G. Recursive splitting on variables.
std::uint64_t standardMonomialCount(std::span<Polynomial const> G,
                                    std::uint64_t vars);
// Reference path: enumerate all 2^|vars| squarefree monomials. |vars| <= 24.
std::uint64_t standardMonomialCountBruteForce(std::span<Polynomial const> G,
                                              std::uint64_t vars);

// Common zeros of the generators over all 0/1 assignments of `vars` (other
// variables fixed to 0). Throws BudgetExceeded past `maxVariables`.
std::vector<Point> varietyEnumerate(std::span<Polynomial const> generators,
                                    std::uint64_t vars, int maxVariables = 24);
std::vector<Point> varietyEnumerate(std::span<Polynomial const> generators,
                                    PolyRing const& ring,
                                    int maxVariables = 24);

// f is in the ideal generated by G (G must be a Groebner basis).
bool idealMember(Polynomial const& f, std::span<Polynomial const> G);

// Every s-polynomial of G reduces to zero modulo G.
bool isGroebnerBasis(std::span<Polynomial const> G);

} // namespace qalg
