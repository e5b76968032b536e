// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

namespace qalg
{

namespace
{

class Reducers
{
  public:
    explicit Reducers(std::span<Polynomial const> S)
    {
        std::uint64_t fieldVars = 0;
        bool otherSquares = false;
        for (std::size_t k = 0; k < S.size(); ++k)
        {
            if (S[k].isZero())
            {
                continue;
            }
            mPolys.push_back(&S[k]);
            mLeads.push_back(leadingMonomial(S[k]));
            if (isFieldPolynomial(S[k]))
            {
                fieldVars |= mLeads.back().hi();
            }
            else if (!mLeads.back().isSquarefree())
            {
                otherSquares = true;
            }
        }
        // With every X_i^2 + X_i present and no other squared leading
        // monomial, reducing a term by the field polynomials is the same as
        // Boolean-reducing it.
        mBooleanShortcut =
            !mPolys.empty() && !otherSquares &&
            fieldVars == mPolys.front()->ring().allVariablesMask();
    }

    // Index of a reducer whose leading monomial divides t, or -1.
    long
    find(Monomial const& t) const
    {
        if (!t.isSquarefree())
        {
            for (std::size_t k = 0; k < mLeads.size(); ++k)
            {
                if ((mLeads[k].hi() & t.hi()) != 0 && divides(mLeads[k], t))
                {
                    return static_cast<long>(k);
                }
            }
        }
        for (std::size_t k = 0; k < mLeads.size(); ++k)
        {
            if (divides(mLeads[k], t))
            {
                return static_cast<long>(k);
            }
        }
        return -1;
    }

    Polynomial const&
    poly(long k) const
    {
        return *mPolys[static_cast<std::size_t>(k)];
    }
    Monomial const&
    lead(long k) const
    {
        return mLeads[static_cast<std::size_t>(k)];
    }
    bool
    empty() const
    {
        return mLeads.empty();
    }
    bool
    booleanShortcut() const
    {
        return mBooleanShortcut;
    }

  private:
    std::vector<Polynomial const*> mPolys;
    std::vector<Monomial> mLeads;
    bool mBooleanShortcut = false;
};

// Pending terms live in a max-heap; equal terms are popped together and
// cancel in pairs.
Polynomial
normalFormWith(Polynomial const& f, Reducers const& reducers)
{
    if (reducers.empty() || f.isZero())
    {
        return f;
    }
    bool const shortcut = reducers.booleanShortcut();
    std::vector<Monomial> heap;
    heap.reserve(f.size());
    for (auto const& t : f.terms())
    {
        heap.push_back(shortcut ? t.booleanReduced() : t);
    }
    std::make_heap(heap.begin(), heap.end());
    std::vector<Monomial> remainder;
    auto pop = [&heap] {
        std::pop_heap(heap.begin(), heap.end());
        Monomial const t = heap.back();
        heap.pop_back();
        return t;
    };
    while (!heap.empty())
    {
        Monomial const t = pop();
        bool odd = true;
        while (!heap.empty() && heap.front() == t)
        {
            pop();
            odd = !odd;
        }
        if (!odd)
        {
            continue;
        }
        long const k = reducers.find(t);
        if (k < 0)
        {
            remainder.push_back(t);
            continue;
        }
        Monomial const cofactor = quotient(t, reducers.lead(k));
        auto const terms = reducers.poly(k).terms();
        // terms[0] * cofactor == t cancels.
        for (std::size_t i = 1; i < terms.size(); ++i)
        {
            Monomial const m = terms[i] * cofactor;
            heap.push_back(shortcut ? m.booleanReduced() : m);
            std::push_heap(heap.begin(), heap.end());
        }
    }
    return fromSortedTerms(f.ring(), std::move(remainder));
}

struct Pair
{
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int degree;
    std::size_t seq;
};

// Normal selection strategy: smallest lcm degree, then smallest lcm, then
// creation order.
struct PairOrder
{
    bool
    operator()(Pair const& a, Pair const& b) const
    {
        return std::tie(a.degree, a.lcm, a.seq) <
               std::tie(b.degree, b.lcm, b.seq);
    }
};

} // namespace

bool
GroebnerCertificate::isUnitIdeal() const
{
    return basis.size() == 1 && basis.front().isOne();
}

std::vector<Polynomial>
GroebnerCertificate::withFieldPolynomials() const
{
    std::vector<Polynomial> out = basis;
    for (auto& f : fieldPolynomials(ring))
    {
        if (std::find(out.begin(), out.end(), f) == out.end())
        {
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<Polynomial>
fieldPolynomials(PolyRing const& ring)
{
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(ring.numVariables()));
    for (int pos = 0; pos < ring.numVariables(); ++pos)
    {
        std::uint64_t const bit = PolyRing::bitOf(pos);
        out.push_back(fromSortedTerms(
            ring, {Monomial{0, bit}, Monomial::squarefree(bit)}));
    }
    return out;
}

bool
isFieldPolynomial(Polynomial const& f)
{
    if (f.size() != 2)
    {
        return false;
    }
    Monomial const a = f.terms()[0];
    Monomial const b = f.terms()[1];
    return a.lo() == 0 && std::popcount(a.hi()) == 1 && b.hi() == 0 &&
           b.lo() == a.hi();
}

Polynomial
reduceOnce(Polynomial const& f, Polynomial const& g)
{
    if (f.isZero() || g.isZero())
    {
        throw std::invalid_argument("reduceOnce needs nonzero polynomials");
    }
    Monomial const lf = leadingMonomial(f);
    Monomial const lg = leadingMonomial(g);
    if (!divides(lg, lf))
    {
        throw std::invalid_argument(
            "leading monomial of the reducer does not divide LM(f)");
    }
    return f + multiplyByMonomial(g, quotient(lf, lg));
}

Polynomial
normalForm(Polynomial const& f, std::span<Polynomial const> S)
{
    return normalFormWith(f, Reducers(S));
}

Polynomial
spoly(Polynomial const& f, Polynomial const& g)
{
    if (f.isZero() || g.isZero())
    {
        throw std::domain_error("s-polynomial of a zero polynomial");
    }
    Monomial const lf = leadingMonomial(f);
    Monomial const lg = leadingMonomial(g);
    Monomial const l = lcm(lf, lg);
    return multiplyByMonomial(f, quotient(l, lf)) +
           multiplyByMonomial(g, quotient(l, lg));
}

bool
coprimeCriterion(Polynomial const& f, Polynomial const& g)
{
    return coprime(leadingMonomial(f), leadingMonomial(g));
}

PairLedger::PairLedger(std::size_t size)
{
    grow(size);
}

void
PairLedger::grow(std::size_t size)
{
    if (size <= mSize)
    {
        return;
    }
    mDone.resize(size);
    for (auto& row : mDone)
    {
        row.resize(size, false);
    }
    mSize = size;
}

void
PairLedger::markProcessed(std::size_t i, std::size_t j)
{
    mDone[i][j] = true;
    mDone[j][i] = true;
}

bool
PairLedger::processed(std::size_t i, std::size_t j) const
{
    return mDone[i][j];
}

bool
chainCriterion(std::size_t i, std::size_t j, std::span<Polynomial const> G,
               PairLedger const& ledger)
{
    Monomial const l = lcm(leadingMonomial(G[i]), leadingMonomial(G[j]));
    for (std::size_t k = 0; k < G.size(); ++k)
    {
        if (k == i || k == j)
        {
            continue;
        }
        if (divides(leadingMonomial(G[k]), l) && ledger.processed(i, k) &&
            ledger.processed(j, k))
        {
            return true;
        }
    }
    return false;
}

std::vector<Polynomial>
buchbergerRaw(IdealBasis const& basis, BuchbergerOptions const& options,
              BuchbergerStats* stats)
{
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;
    PolyRing const& ring = basis.ring;

    std::vector<Polynomial> G;
    for (auto const& g : basis.generators)
    {
        if (!(g.ring() == ring))
        {
            throw std::invalid_argument("generator is not over the ideal's ring");
        }
        Polynomial r = booleanReduce(g);
        if (r.isZero() || std::find(G.begin(), G.end(), r) != G.end())
        {
            continue;
        }
        if (r.isOne())
        {
            return {r};
        }
        G.push_back(std::move(r));
    }
    for (auto& f : fieldPolynomials(ring))
    {
        G.push_back(std::move(f));
    }

    PairLedger ledger(G.size());
    std::set<Pair, PairOrder> pending;
    std::size_t seq = 0;
    auto addPair = [&](std::size_t i, std::size_t j) {
        Monomial const l = lcm(leadingMonomial(G[i]), leadingMonomial(G[j]));
        pending.insert(Pair{i, j, l, l.degree(), seq++});
        ++st.pairsCreated;
    };
    for (std::size_t j = 0; j < G.size(); ++j)
    {
        for (std::size_t i = 0; i < j; ++i)
        {
            addPair(i, j);
        }
    }

    while (!pending.empty())
    {
        Pair const p = *pending.begin();
        pending.erase(pending.begin());
        ledger.markProcessed(p.i, p.j);
        if (options.useCoprimeCriterion && coprimeCriterion(G[p.i], G[p.j]))
        {
            ++st.skippedCoprime;
            continue;
        }
        if (options.useChainCriterion && chainCriterion(p.i, p.j, G, ledger))
        {
            ++st.skippedChain;
            continue;
        }
        ++st.pairsReduced;
        Polynomial r = normalForm(spoly(G[p.i], G[p.j]), G);
        if (r.isZero())
        {
            ++st.zeroReductions;
            continue;
        }
        if (r.isOne())
        {
            ++st.basisGrowth;
            return {r};
        }
        std::size_t const k = G.size();
        G.push_back(std::move(r));
        ++st.basisGrowth;
        ledger.grow(G.size());
        for (std::size_t i = 0; i < k; ++i)
        {
            addPair(i, k);
        }
    }
    return G;
}

std::vector<Polynomial>
reduceBasis(std::vector<Polynomial> G)
{
    std::erase_if(G, [](Polynomial const& g) { return g.isZero(); });
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < G.size(); ++a)
    {
        Monomial const la = leadingMonomial(G[a]);
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b)
        {
            if (a == b)
            {
                continue;
            }
            Monomial const lb = leadingMonomial(G[b]);
            // Equal leading monomials: keep the earliest.
            redundant = divides(lb, la) && (lb != la || b < a);
        }
        if (!redundant)
        {
            minimal.push_back(G[a]);
        }
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a)
    {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t b = 0; b < minimal.size(); ++b)
        {
            if (a != b)
            {
                others.push_back(minimal[b]);
            }
        }
        Monomial const lead = leadingMonomial(minimal[a]);
        Polynomial const head = Polynomial::monomial(minimal[a].ring(), lead);
        Polynomial const tail = minimal[a] + head;
        reduced.push_back(head + normalForm(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](Polynomial const& a, Polynomial const& b) {
                  return leadingMonomial(a) > leadingMonomial(b);
              });
    return reduced;
}

GroebnerCertificate
buchberger(IdealBasis const& basis, BuchbergerOptions const& options)
{
    GroebnerCertificate cert;
    cert.ring = basis.ring;
    std::vector<Polynomial> reduced =
        reduceBasis(buchbergerRaw(basis, options, &cert.stats));
    bool const onlyFields =
        std::all_of(reduced.begin(), reduced.end(), isFieldPolynomial);
    if (!onlyFields)
    {
        std::erase_if(reduced, isFieldPolynomial);
    }
    cert.basis = std::move(reduced);
    cert.smCount =
        standardMonomialCount(cert.basis, cert.ring.allVariablesMask());

    auto const blocks = cert.ring.order().blocks();
    for (std::size_t start = 1; start < blocks.size(); ++start)
    {
        std::vector<Block> keep(blocks.begin() + static_cast<std::ptrdiff_t>(start),
                                blocks.end());
        auto const sub = eliminationSubbasis(cert, keep);
        cert.eliminationCounts.push_back(
            {keep, standardMonomialCount(sub, cert.ring.blocksMask(keep))});
    }
    return cert;
}

std::vector<Polynomial>
eliminationSubbasis(GroebnerCertificate const& cert,
                    std::span<Block const> keepBlocks)
{
    if (keepBlocks.empty() || !cert.ring.order().isSuffix(keepBlocks))
    {
        throw std::invalid_argument(
            "kept blocks must be a non-empty suffix of the block order " +
            cert.ring.order().toString());
    }
    std::uint64_t const keep = cert.ring.blocksMask(keepBlocks);
    std::vector<Polynomial> out;
    for (auto const& g : cert.basis)
    {
        if ((g.support() & ~keep) == 0)
        {
            out.push_back(g);
        }
    }
    return out;
}

namespace
{

std::uint64_t
countStandard(std::vector<std::uint64_t> leads, std::uint64_t vars)
{
    if (std::find(leads.begin(), leads.end(), 0) != leads.end())
    {
        return 0;
    }
    if (leads.empty())
    {
        int const k = std::popcount(vars);
        if (k >= 64)
        {
            throw std::overflow_error("standard monomial count exceeds 2^63");
        }
        return std::uint64_t{1} << k;
    }
    // Split on the variable occurring in the most leading monomials.
    std::uint64_t best = 0;
    int bestCount = -1;
    for (std::uint64_t s = vars; s != 0; s &= s - 1)
    {
        std::uint64_t const v = s & (~s + 1);
        int const c = static_cast<int>(std::count_if(
            leads.begin(), leads.end(),
            [v](std::uint64_t l) { return (l & v) != 0; }));
        if (c > bestCount)
        {
            bestCount = c;
            best = v;
        }
    }
    std::uint64_t const rest = vars & ~best;
    std::vector<std::uint64_t> without;
    std::vector<std::uint64_t> with;
    for (auto l : leads)
    {
        if ((l & best) == 0)
        {
            without.push_back(l);
        }
        with.push_back(l & ~best);
    }
    return countStandard(std::move(without), rest) +
           countStandard(std::move(with), rest);
}

std::vector<std::uint64_t>
relevantLeads(std::span<Polynomial const> G, std::uint64_t vars)
{
    std::vector<std::uint64_t> leads;
    for (auto const& g : G)
    {
        if (g.isZero())
        {
            continue;
        }
        Monomial const lm = leadingMonomial(g);
        // Non-squarefree leads never divide a squarefree monomial; leads with
        // variables outside `vars` never divide a monomial over `vars`.
        if (lm.isSquarefree() && (lm.support() & ~vars) == 0)
        {
            leads.push_back(lm.support());
        }
    }
    std::sort(leads.begin(), leads.end());
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    return leads;
}

} // namespace

std::uint64_t
standardMonomialCount(std::span<Polynomial const> G, std::uint64_t vars)
{
    return countStandard(relevantLeads(G, vars), vars);
}

std::uint64_t
standardMonomialCountBruteForce(std::span<Polynomial const> G,
                                std::uint64_t vars)
{
    if (std::popcount(vars) > 24)
    {
        throw BudgetExceeded("brute-force standard monomial count limited to "
                             "24 variables");
    }
    auto const leads = relevantLeads(G, vars);
    std::uint64_t count = 0;
    std::uint64_t m = 0;
    do
    {
        bool const standard =
            std::none_of(leads.begin(), leads.end(),
                         [m](std::uint64_t l) { return (l & ~m) == 0; });
        count += standard ? 1 : 0;
        m = (m - vars) & vars;
    } while (m != 0);
    return count;
}

std::vector<Point>
varietyEnumerate(std::span<Polynomial const> generators, std::uint64_t vars,
                 int maxVariables)
{
    if (std::popcount(vars) > maxVariables)
    {
        throw BudgetExceeded("variety enumeration over " +
                             std::to_string(std::popcount(vars)) +
                             " variables exceeds the budget of " +
                             std::to_string(maxVariables));
    }
    std::vector<std::vector<std::uint64_t>> supports;
    for (auto const& g : generators)
    {
        std::vector<std::uint64_t> s;
        for (auto const& t : g.terms())
        {
            s.push_back(t.support());
        }
        supports.push_back(std::move(s));
    }
    std::vector<Point> out;
    std::uint64_t p = 0;
    do
    {
        bool zero = true;
        for (auto const& s : supports)
        {
            bool value = false;
            for (auto t : s)
            {
                value ^= (t & ~p) == 0;
            }
            if (value)
            {
                zero = false;
                break;
            }
        }
        if (zero)
        {
            out.push_back(Point{p});
        }
        p = (p - vars) & vars;
    } while (p != 0);
    return out;
}

std::vector<Point>
varietyEnumerate(std::span<Polynomial const> generators, PolyRing const& ring,
                 int maxVariables)
{
    return varietyEnumerate(generators, ring.allVariablesMask(), maxVariables);
}

bool
idealMember(Polynomial const& f, std::span<Polynomial const> G)
{
    return normalForm(f, G).isZero();
}

bool
isGroebnerBasis(std::span<Polynomial const> G)
{
    Reducers const reducers(G);
    for (std::size_t j = 0; j < G.size(); ++j)
    {
        for (std::size_t i = 0; i < j; ++i)
        {
            if (G[i].isZero() || G[j].isZero())
            {
                continue;
            }
            if (!normalFormWith(spoly(G[i], G[j]), reducers).isZero())
            {
                return false;
            }
        }
    }
    return true;
}

} // namespace qalg
