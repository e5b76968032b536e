// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qalg
{

char
blockLetter(Block b)
{
    switch (b)
    {
    case Block::X:
        return 'x';
    case Block::Y:
        return 'y';
    case Block::Z:
        return 'z';
    case Block::T:
        return 't';
    }
    return '?';
}

Block
blockFromLetter(char c)
{
    switch (std::tolower(static_cast<unsigned char>(c)))
    {
    case 'x':
        return Block::X;
    case 'y':
        return Block::Y;
    case 'z':
        return Block::Z;
    case 't':
        return Block::T;
    default:
        throw std::invalid_argument(std::string("unknown block letter '") +
                                    c + "'");
    }
}

std::string
toString(Variable v)
{
    return blockLetter(v.block) + std::to_string(v.index);
}

BlockLexOrder::BlockLexOrder(std::span<Block const> sequence)
{
    if (sequence.empty() || sequence.size() > mSeq.size())
    {
        throw std::invalid_argument("block order needs 1 to 4 blocks");
    }
    for (auto b : sequence)
    {
        if (contains(b))
        {
            throw std::invalid_argument(
                std::string("block order repeats block ") + blockLetter(b));
        }
        mSeq[mSize++] = b;
    }
}

BlockLexOrder::BlockLexOrder(std::initializer_list<Block> sequence)
    : BlockLexOrder(std::span<Block const>(sequence.begin(), sequence.size()))
{
}

BlockLexOrder
BlockLexOrder::parse(std::string_view text)
{
    std::vector<Block> seq;
    for (char c : text)
    {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
        {
            continue;
        }
        seq.push_back(blockFromLetter(c));
    }
    return BlockLexOrder(seq);
}

bool
BlockLexOrder::contains(Block b) const
{
    auto bs = blocks();
    return std::find(bs.begin(), bs.end(), b) != bs.end();
}

std::size_t
BlockLexOrder::rank(Block b) const
{
    for (std::size_t i = 0; i < mSize; ++i)
    {
        if (mSeq[i] == b)
        {
            return i;
        }
    }
    throw std::out_of_range(std::string("block ") + blockLetter(b) +
                            " is not part of the order " + toString());
}

bool
BlockLexOrder::isSuffix(std::span<Block const> keep) const
{
    if (keep.size() > mSize)
    {
        return false;
    }
    auto tail = blocks().subspan(mSize - keep.size());
    return std::all_of(keep.begin(), keep.end(), [&](Block b) {
        return std::find(tail.begin(), tail.end(), b) != tail.end();
    }) && std::all_of(tail.begin(), tail.end(), [&](Block b) {
        return std::find(keep.begin(), keep.end(), b) != keep.end();
    });
}

std::string
BlockLexOrder::toString() const
{
    std::string out;
    for (std::size_t i = 0; i < mSize; ++i)
    {
        if (i != 0)
        {
            out += ',';
        }
        out += blockLetter(mSeq[i]);
    }
    return out;
}

PolyRing::PolyRing(int n, BlockLexOrder order) : mN(n), mOrder(order)
{
    if (n < 1)
    {
        throw std::invalid_argument("ring dimension n must be at least 1");
    }
    if (order.size() == 0)
    {
        throw std::invalid_argument("ring needs at least one block");
    }
    if (numVariables() > kMaxVariables)
    {
        throw std::invalid_argument(
            "ring has " + std::to_string(numVariables()) +
            " variables; at most " + std::to_string(kMaxVariables) +
            " are supported");
    }
}

int
PolyRing::position(Variable v) const
{
    if (v.index < 1 || v.index > mN)
    {
        throw std::out_of_range("variable " + qalg::toString(v) +
                                " has index outside 1.." + std::to_string(mN));
    }
    return static_cast<int>(mOrder.rank(v.block)) * mN + (v.index - 1);
}

Variable
PolyRing::variableAt(int position) const
{
    if (position < 0 || position >= numVariables())
    {
        throw std::out_of_range("variable position out of range");
    }
    return {mOrder.blocks()[static_cast<std::size_t>(position / mN)],
            position % mN + 1};
}

std::uint64_t
PolyRing::bit(Variable v) const
{
    return bitOf(position(v));
}

std::uint64_t
PolyRing::blockMask(Block b) const
{
    int const base = static_cast<int>(mOrder.rank(b)) * mN;
    std::uint64_t mask = 0;
    for (int i = 0; i < mN; ++i)
    {
        mask |= bitOf(base + i);
    }
    return mask;
}

std::uint64_t
PolyRing::blocksMask(std::span<Block const> blocks) const
{
    std::uint64_t mask = 0;
    for (auto b : blocks)
    {
        mask |= blockMask(b);
    }
    return mask;
}

std::uint64_t
PolyRing::allVariablesMask() const
{
    return blocksMask(mOrder.blocks());
}

} // namespace qalg
