// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/set_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalg
{

namespace
{

std::uint64_t
groundMask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

ProcessSubset::ProcessSubset(int n, std::uint64_t bits) : mN(n), mBits(bits)
{
    if (n < 1 || n > kMaxProcesses)
    {
        throw std::invalid_argument("number of processes must be in 1..64");
    }
    if ((bits & ~groundMask(n)) != 0)
    {
        throw std::invalid_argument("subset has elements beyond n = " +
                                    std::to_string(n));
    }
}

ProcessSubset
ProcessSubset::empty(int n)
{
    return ProcessSubset(n, 0);
}

ProcessSubset
ProcessSubset::full(int n)
{
    return ProcessSubset(n, groundMask(n));
}

ProcessSubset
ProcessSubset::complement() const
{
    return ProcessSubset(mN, ~mBits & groundMask(mN));
}

std::string
ProcessSubset::vectorString() const
{
    std::string out = "(";
    for (int i = 1; i <= mN; ++i)
    {
        if (i > 1)
        {
            out += ',';
        }
        out += contains(i) ? '1' : '0';
    }
    return out + ")";
}

std::string
ProcessSubset::setString() const
{
    std::string out = "{";
    bool first = true;
    for (int i : phiInverse(*this))
    {
        if (!first)
        {
            out += ',';
        }
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

ProcessSubset
phi(std::span<int const> indices, int n)
{
    std::uint64_t bits = 0;
    for (int i : indices)
    {
        if (i < 1 || i > n)
        {
            throw std::out_of_range("process index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n));
        }
        bits |= std::uint64_t{1} << (i - 1);
    }
    return ProcessSubset(n, bits);
}

ProcessSubset
phi(std::initializer_list<int> indices, int n)
{
    return phi(std::span<int const>(indices.begin(), indices.size()), n);
}

std::vector<int>
phiInverse(ProcessSubset const& v)
{
    std::vector<int> out;
    for (std::uint64_t s = v.bits(); s != 0; s &= s - 1)
    {
        out.push_back(std::countr_zero(s) + 1);
    }
    return out;
}

namespace
{

void
requireSameGround(ProcessSubset const& a, ProcessSubset const& b)
{
    if (a.n() != b.n())
    {
        throw std::invalid_argument("subsets of different ground sets");
    }
}

} // namespace

ProcessSubset
intersect(ProcessSubset const& a, ProcessSubset const& b)
{
    requireSameGround(a, b);
    return ProcessSubset(a.n(), a.bits() & b.bits());
}

ProcessSubset
unite(ProcessSubset const& a, ProcessSubset const& b)
{
    requireSameGround(a, b);
    return ProcessSubset(a.n(), a.bits() | b.bits());
}

ProcessSubset
difference(ProcessSubset const& a, ProcessSubset const& b)
{
    requireSameGround(a, b);
    return ProcessSubset(a.n(), a.bits() & ~b.bits());
}

SetSystem::SetSystem(int n, std::vector<ProcessSubset> members) : mN(n)
{
    for (auto& m : members)
    {
        add(m);
    }
}

SetSystem
SetSystem::fromIndexLists(int n, std::vector<std::vector<int>> const& lists)
{
    SetSystem out(n);
    for (auto const& l : lists)
    {
        out.add(phi(l, n));
    }
    return out;
}

bool
SetSystem::contains(ProcessSubset const& s) const
{
    return std::find(mMembers.begin(), mMembers.end(), s) != mMembers.end();
}

void
SetSystem::add(ProcessSubset s)
{
    if (s.n() != mN)
    {
        throw std::invalid_argument("member has n = " + std::to_string(s.n()) +
                                    ", system has n = " + std::to_string(mN));
    }
    if (contains(s))
    {
        throw std::invalid_argument("duplicate member " + s.setString());
    }
    for (auto const& m : mMembers)
    {
        if (m.isSubsetOf(s) || s.isSubsetOf(m))
        {
            mAntichain = false;
        }
    }
    mMembers.push_back(s);
}

std::string
SetSystem::toString() const
{
    std::string out;
    for (auto const& m : mMembers)
    {
        if (!out.empty())
        {
            out += ' ';
        }
        out += m.setString();
    }
    return out;
}

std::vector<ProcessSubset>
subsetsOfSize(int n, int k)
{
    std::vector<ProcessSubset> out;
    if (k < 0 || k > n)
    {
        return out;
    }
    std::uint64_t const ground = groundMask(n);
    for (std::uint64_t s = 0;; ++s)
    {
        if (std::popcount(s) == k)
        {
            out.emplace_back(n, s);
        }
        if (s == ground)
        {
            break;
        }
    }
    return out;
}

} // namespace qalg
