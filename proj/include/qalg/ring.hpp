// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qalg
{

/// Maximum number of ring variables a monomial can address.
inline constexpr int kMaxVariables = 64;

enum class Block : std::uint8_t
{
    X,
    Y,
    Z,
    T
};

char blockLetter(Block b);
Block blockFromLetter(char c);

struct Variable
{
    Block block = Block::X;
    int index = 1; // 1-based, P_1..P_n

    friend bool operator==(Variable const&, Variable const&) = default;
    friend auto operator<=>(Variable const&, Variable const&) = default;
};

std::string toString(Variable v);

// Block-lexicographic order: blocks compared most-significant first, and
// inside a block X_1 > X_2 > ... > X_n.
class BlockLexOrder
{
  public:
    BlockLexOrder() = default;
    explicit BlockLexOrder(std::span<Block const> sequence);
    BlockLexOrder(std::initializer_list<Block> sequence);

    // "y,x" -> [Y, X]
    static BlockLexOrder parse(std::string_view text);

    std::span<Block const>
    blocks() const
    {
        return {mSeq.data(), mSize};
    }
    std::size_t
    size() const
    {
        return mSize;
    }
    bool contains(Block b) const;
    // Position of b in the sequence (0 = most significant); throws if absent.
    std::size_t rank(Block b) const;

    // True iff `keep` (as a set) equals the trailing |keep| blocks.
    bool isSuffix(std::span<Block const> keep) const;

    std::string toString() const;

    friend bool operator==(BlockLexOrder const&, BlockLexOrder const&) =
        default;

  private:
    std::array<Block, 4> mSeq{};
    std::size_t mSize = 0;
};

// The ambient Boolean polynomial ring: n variables per block, blocks laid
// out in order significance. Variable position 0 is the most significant.
class PolyRing
{
  public:
    PolyRing() = default;
    PolyRing(int n, BlockLexOrder order);

    int
    n() const
    {
        return mN;
    }
    BlockLexOrder const&
    order() const
    {
        return mOrder;
    }
    int
    numVariables() const
    {
        return mN * static_cast<int>(mOrder.size());
    }

    // Throws std::out_of_range for an inactive block or index outside 1..n.
    int position(Variable v) const;
    Variable variableAt(int position) const;

    // Monomial bit of a variable position.
    static std::uint64_t
    bitOf(int position)
    {
        return std::uint64_t{1} << (63 - position);
    }
    std::uint64_t bit(Variable v) const;

    std::uint64_t blockMask(Block b) const;
    std::uint64_t blocksMask(std::span<Block const> blocks) const;
    std::uint64_t allVariablesMask() const;

    friend bool operator==(PolyRing const&, PolyRing const&) = default;

  private:
    int mN = 1;
    BlockLexOrder mOrder{Block::X};
};

} // namespace qalg
