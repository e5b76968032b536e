// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/polynomial_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qalg
{

namespace
{

bool
isSpace(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool
isBlockLetter(char c)
{
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return c == 'x' || c == 'y' || c == 'z' || c == 't';
}

class Parser
{
  public:
    Parser(std::string_view text, PolyRing const& ring)
        : mText(text), mRing(ring)
    {
    }

    Polynomial
    parse()
    {
        std::vector<Monomial> terms;
        skipSpace();
        if (mPos == mText.size())
        {
            fail("empty polynomial");
        }
        terms.push_back(parseTerm());
        skipSpace();
        while (mPos < mText.size())
        {
            expect('+');
            terms.push_back(parseTerm());
            skipSpace();
        }
        // Drop explicit zero terms, encoded as an all-ones sentinel.
        std::erase_if(terms, [](Monomial const& m) { return m == kZeroTerm; });
        return Polynomial(mRing, std::move(terms));
    }

  private:
    static constexpr Monomial kZeroTerm{~std::uint64_t{0}, ~std::uint64_t{0}};

    Monomial
    parseTerm()
    {
        skipSpace();
        if (peek() == '1' || peek() == '0')
        {
            char const c = mText[mPos++];
            return c == '1' ? Monomial{} : kZeroTerm;
        }
        Monomial m = parseVariable();
        skipSpace();
        while (peek() == '*')
        {
            ++mPos;
            Monomial const v = parseVariable();
            try
            {
                m = m * v;
            }
            catch (std::overflow_error const&)
            {
                fail("exponent above 3");
            }
            skipSpace();
        }
        return m;
    }

    Monomial
    parseVariable()
    {
        skipSpace();
        if (!isBlockLetter(peek()))
        {
            fail("expected a variable (x|y|z|t followed by an index)");
        }
        Block const b = blockFromLetter(mText[mPos++]);
        std::size_t const start = mPos;
        long index = 0;
        while (mPos < mText.size() &&
               std::isdigit(static_cast<unsigned char>(mText[mPos])))
        {
            index = index * 10 + (mText[mPos] - '0');
            if (index > 1'000'000)
            {
                fail("index too large");
            }
            ++mPos;
        }
        if (mPos == start)
        {
            fail("variable is missing its index");
        }
        if (index < 1 || index > mRing.n())
        {
            fail("index " + std::to_string(index) + " outside 1.." +
                 std::to_string(mRing.n()));
        }
        if (!mRing.order().contains(b))
        {
            fail(std::string("block ") + blockLetter(b) +
                 " is not in the order " + mRing.order().toString());
        }
        return variableMonomial(mRing, {b, static_cast<int>(index)});
    }

    void
    expect(char c)
    {
        skipSpace();
        if (peek() != c)
        {
            fail(std::string("expected '") + c + "'");
        }
        ++mPos;
    }

    char
    peek() const
    {
        return mPos < mText.size() ? mText[mPos] : '\0';
    }

    void
    skipSpace()
    {
        while (mPos < mText.size() && isSpace(mText[mPos]))
        {
            ++mPos;
        }
    }

    [[noreturn]] void
    fail(std::string const& what) const
    {
        throw ParseError("parse error at offset " + std::to_string(mPos) +
                         " in '" + std::string(mText) + "': " + what);
    }

    std::string_view mText;
    PolyRing const& mRing;
    std::size_t mPos = 0;
};

std::vector<std::string_view>
splitList(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
    {
        if (i == text.size() || text[i] == ',' || text[i] == ';' ||
            text[i] == '\n')
        {
            auto piece = text.substr(start, i - start);
            if (std::any_of(piece.begin(), piece.end(),
                            [](char c) { return !isSpace(c); }))
            {
                out.push_back(piece);
            }
            start = i + 1;
        }
    }
    return out;
}

} // namespace

Polynomial
parsePolynomial(std::string_view text, PolyRing const& ring)
{
    return Parser(text, ring).parse();
}

std::vector<Polynomial>
parsePolynomialList(std::string_view text, PolyRing const& ring)
{
    std::vector<Polynomial> out;
    for (auto piece : splitList(text))
    {
        out.push_back(parsePolynomial(piece, ring));
    }
    return out;
}

PolynomialTextInfo
scanPolynomialText(std::string_view text)
{
    PolynomialTextInfo info;
    bool seen[4] = {false, false, false, false};
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        if (!isBlockLetter(text[i]))
        {
            continue;
        }
        seen[static_cast<int>(blockFromLetter(text[i]))] = true;
        int index = 0;
        std::size_t j = i + 1;
        while (j < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[j])) && index < 1'000'000)
        {
            index = index * 10 + (text[j] - '0');
            ++j;
        }
        info.maxIndex = std::max(info.maxIndex, index);
    }
    for (int b = 0; b < 4; ++b)
    {
        if (seen[b])
        {
            info.blocks.push_back(static_cast<Block>(b));
        }
    }
    return info;
}

} // namespace qalg
