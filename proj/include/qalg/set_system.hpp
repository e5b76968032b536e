// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qalg
{

inline constexpr int kMaxProcesses = 64;

// A subset of P = {P_1, ..., P_n} as its image under phi: bit (i-1) is the
// i-th coordinate.
class ProcessSubset
{
  public:
    ProcessSubset() = default;
    // Throws std::invalid_argument unless 1 <= n <= 64 and bits fit in n.
    ProcessSubset(int n, std::uint64_t bits);

    static ProcessSubset empty(int n);
    static ProcessSubset full(int n);

    int
    n() const
    {
        return mN;
    }
    std::uint64_t
    bits() const
    {
        return mBits;
    }
    bool
    contains(int index) const
    {
        return index >= 1 && index <= mN && ((mBits >> (index - 1)) & 1U);
    }
    int
    size() const
    {
        return std::popcount(mBits);
    }
    bool
    isEmpty() const
    {
        return mBits == 0;
    }
    bool
    isSubsetOf(ProcessSubset const& other) const
    {
        return (mBits & ~other.mBits) == 0;
    }

    ProcessSubset complement() const;

    // (1,0,1,1,0)
    std::string vectorString() const;
    // {1,3,4}
    std::string setString() const;

    friend bool operator==(ProcessSubset const&, ProcessSubset const&) = default;
    friend auto operator<=>(ProcessSubset const&, ProcessSubset const&) = default;

  private:
    int mN = 1;
    std::uint64_t mBits = 0;
};

// phi: S (1-based indices) -> bit vector. Throws std::out_of_range for an
// index outside 1..n.
ProcessSubset phi(std::span<int const> indices, int n);
ProcessSubset phi(std::initializer_list<int> indices, int n);
// phi^{-1}: sorted indices of the set bits.
std::vector<int> phiInverse(ProcessSubset const& v);

ProcessSubset intersect(ProcessSubset const& a, ProcessSubset const& b);
ProcessSubset unite(ProcessSubset const& a, ProcessSubset const& b);
ProcessSubset difference(ProcessSubset const& a, ProcessSubset const& b);

// An ordered collection of distinct subsets of the same ground set. Used for
// both quorum systems and fail-prone systems. Whether the members form an
// antichain is recorded, not enforced.
class SetSystem
{
  public:
    explicit SetSystem(int n = 1) : mN(n)
    {
    }
    // Throws std::invalid_argument on duplicates or mismatched n.
    SetSystem(int n, std::vector<ProcessSubset> members);
    static SetSystem fromIndexLists(int n,
                                    std::vector<std::vector<int>> const& lists);

    int
    n() const
    {
        return mN;
    }
    std::span<ProcessSubset const>
    members() const
    {
        return mMembers;
    }
    std::size_t
    size() const
    {
        return mMembers.size();
    }
    bool
    empty() const
    {
        return mMembers.empty();
    }
    bool
    isAntichain() const
    {
        return mAntichain;
    }
    bool contains(ProcessSubset const& s) const;

    void add(ProcessSubset s);

    // "{1,2} {2,3}"
    std::string toString() const;

    friend bool operator==(SetSystem const&, SetSystem const&) = default;

  private:
    int mN;
    std::vector<ProcessSubset> mMembers;
    bool mAntichain = true;
};

// All subsets of {1..n} of exactly k elements, in increasing bit order.
std::vector<ProcessSubset> subsetsOfSize(int n, int k);

} // namespace qalg
