// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Brute-force set-theoretic reference implementations. No algebra, no
// pruning; these exist to be obviously right.

#include "qalg/set_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qalg
{

enum class Property
{
    ClassicalConsistency,
    Availability,
    DisseminationConsistency,
    MaskingConsistency,
    Q3,
    Q4
};

std::string toString(Property p);

struct OracleReport
{
    Property property;
    bool holds = true;
    // The violating sets, in quantifier order (e.g. Q1, Q2, F for
    // dissemination consistency). Present iff holds is false.
    std::optional<std::vector<ProcessSubset>> witness;
};

namespace oracle
{

OracleReport consistencyClassical(SetSystem const& quorums);
OracleReport availability(SetSystem const& quorums,
                          SetSystem const& failProne);
OracleReport consistencyDissemination(SetSystem const& quorums,
                                      SetSystem const& failProne);
OracleReport consistencyMasking(SetSystem const& quorums,
                                SetSystem const& failProne);
OracleReport q3(SetSystem const& failProne);
OracleReport q4(SetSystem const& failProne);

// Re-checks that a witness genuinely violates its property. Availability
// witnesses need the quorum system they were found against.
bool witnessViolates(Property p, std::vector<ProcessSubset> const& witness,
                     SetSystem const* quorums = nullptr);

// A* = all subsets of members, deduplicated, in increasing bit order.
SetSystem fstarEnumerate(SetSystem const& system);

bool antichainCheck(SetSystem const& system);

} // namespace oracle

} // namespace qalg
