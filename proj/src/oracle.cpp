// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qalg
{

std::string
toString(Property p)
{
    switch (p)
    {
    case Property::ClassicalConsistency:
        return "consistency";
    case Property::Availability:
        return "availability";
    case Property::DisseminationConsistency:
        return "dissemination";
    case Property::MaskingConsistency:
        return "masking";
    case Property::Q3:
        return "q3";
    case Property::Q4:
        return "q4";
    }
    return "?";
}

namespace oracle
{

namespace
{

void
requireNonEmpty(SetSystem const& s, char const* what)
{
    if (s.empty())
    {
        throw std::invalid_argument(std::string(what) + " must be nonempty");
    }
}

OracleReport
fail(Property p, std::vector<ProcessSubset> witness)
{
    return {p, false, std::move(witness)};
}

bool
coversAll(std::vector<ProcessSubset> const& sets)
{
    ProcessSubset acc = ProcessSubset::empty(sets.front().n());
    for (auto const& s : sets)
    {
        acc = unite(acc, s);
    }
    return acc == ProcessSubset::full(acc.n());
}

} // namespace

OracleReport
consistencyClassical(SetSystem const& quorums)
{
    requireNonEmpty(quorums, "quorum system");
    for (auto const& a : quorums.members())
    {
        for (auto const& b : quorums.members())
        {
            if (intersect(a, b).isEmpty())
            {
                return fail(Property::ClassicalConsistency, {a, b});
            }
        }
    }
    return {Property::ClassicalConsistency, true, std::nullopt};
}

OracleReport
availability(SetSystem const& quorums, SetSystem const& failProne)
{
    requireNonEmpty(quorums, "quorum system");
    requireNonEmpty(failProne, "fail-prone system");
    for (auto const& f : failProne.members())
    {
        bool found = false;
        for (auto const& q : quorums.members())
        {
            if (intersect(f, q).isEmpty())
            {
                found = true;
            }
        }
        if (!found)
        {
            return fail(Property::Availability, {f});
        }
    }
    return {Property::Availability, true, std::nullopt};
}

OracleReport
consistencyDissemination(SetSystem const& quorums, SetSystem const& failProne)
{
    requireNonEmpty(quorums, "quorum system");
    requireNonEmpty(failProne, "fail-prone system");
    for (auto const& a : quorums.members())
    {
        for (auto const& b : quorums.members())
        {
            for (auto const& f : failProne.members())
            {
                if (intersect(a, b).isSubsetOf(f))
                {
                    return fail(Property::DisseminationConsistency, {a, b, f});
                }
            }
        }
    }
    return {Property::DisseminationConsistency, true, std::nullopt};
}

OracleReport
consistencyMasking(SetSystem const& quorums, SetSystem const& failProne)
{
    requireNonEmpty(quorums, "quorum system");
    requireNonEmpty(failProne, "fail-prone system");
    for (auto const& a : quorums.members())
    {
        for (auto const& b : quorums.members())
        {
            for (auto const& f1 : failProne.members())
            {
                for (auto const& f2 : failProne.members())
                {
                    if (difference(intersect(a, b), f1).isSubsetOf(f2))
                    {
                        return fail(Property::MaskingConsistency,
                                    {a, b, f1, f2});
                    }
                }
            }
        }
    }
    return {Property::MaskingConsistency, true, std::nullopt};
}

OracleReport
q3(SetSystem const& failProne)
{
    requireNonEmpty(failProne, "fail-prone system");
    for (auto const& a : failProne.members())
    {
        for (auto const& b : failProne.members())
        {
            for (auto const& c : failProne.members())
            {
                if (coversAll({a, b, c}))
                {
                    return fail(Property::Q3, {a, b, c});
                }
            }
        }
    }
    return {Property::Q3, true, std::nullopt};
}

OracleReport
q4(SetSystem const& failProne)
{
    requireNonEmpty(failProne, "fail-prone system");
    for (auto const& a : failProne.members())
    {
        for (auto const& b : failProne.members())
        {
            for (auto const& c : failProne.members())
            {
                for (auto const& d : failProne.members())
                {
                    if (coversAll({a, b, c, d}))
                    {
                        return fail(Property::Q4, {a, b, c, d});
                    }
                }
            }
        }
    }
    return {Property::Q4, true, std::nullopt};
}

bool
witnessViolates(Property p, std::vector<ProcessSubset> const& w,
                SetSystem const* quorums)
{
    switch (p)
    {
    case Property::ClassicalConsistency:
        return w.size() == 2 && intersect(w[0], w[1]).isEmpty();
    case Property::Availability:
        if (w.size() != 1 || quorums == nullptr)
        {
            return false;
        }
        for (auto const& q : quorums->members())
        {
            if (intersect(q, w[0]).isEmpty())
            {
                return false;
            }
        }
        return true;
    case Property::DisseminationConsistency:
        return w.size() == 3 && intersect(w[0], w[1]).isSubsetOf(w[2]);
    case Property::MaskingConsistency:
        return w.size() == 4 &&
               difference(intersect(w[0], w[1]), w[2]).isSubsetOf(w[3]);
    case Property::Q3:
        return w.size() == 3 && coversAll(w);
    case Property::Q4:
        return w.size() == 4 && coversAll(w);
    }
    return false;
}

SetSystem
fstarEnumerate(SetSystem const& system)
{
    requireNonEmpty(system, "system");
    std::set<std::uint64_t> seen;
    for (auto const& a : system.members())
    {
        // Every submask of a.
        std::uint64_t const full = a.bits();
        std::uint64_t sub = full;
        while (true)
        {
            seen.insert(sub);
            if (sub == 0)
            {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    SetSystem out(system.n());
    for (auto bits : seen)
    {
        out.add(ProcessSubset(system.n(), bits));
    }
    return out;
}

bool
antichainCheck(SetSystem const& system)
{
    auto const m = system.members();
    for (std::size_t a = 0; a < m.size(); ++a)
    {
        for (std::size_t b = 0; b < m.size(); ++b)
        {
            if (a != b && m[a].isSubsetOf(m[b]))
            {
                return false;
            }
        }
    }
    return true;
}

} // namespace oracle

} // namespace qalg
