// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

// Algebraic property checks. Each check builds an ideal whose variety is,
// by construction, contained in a product of encoded set systems, computes
// a reduced Boolean Groebner basis, and compares the number of standard
// monomials (= size of the variety) with the size of that product. Equality
// means no point was filtered out by the relation polynomial, i.e. the
// property holds.
//
// Block orders: availability uses Y > X and counts over the X elimination
// sub-basis; everything else uses X > Y > Z > T.

#include "qalg/groebner.hpp"
#include "qalg/oracle.hpp"
#include "qalg/set_system.hpp"

#include <cstdint>
#include <optional>

namespace qalg
{

enum class CheckMethod
{
    SmCount,
    TrivialIdeal
};

std::string toString(CheckMethod m);

struct Verdict
{
    Property property;
    bool holds = false;
    std::uint64_t expectedCount = 0;
    // Empty for the trivial-ideal method.
    std::optional<std::uint64_t> observedCount;
    GroebnerCertificate certificate;
    CheckMethod method = CheckMethod::SmCount;
};

inline constexpr int kDefaultVariableBudget = 24;

struct CheckOptions
{
    int variableBudget = kDefaultVariableBudget;
    BuchbergerOptions buchberger;

    // Defaults, with QA_VAR_BUDGET overriding the variable budget. Throws
    // std::invalid_argument if the variable is set but not a positive int.
    static CheckOptions fromEnvironment();
};

// Ideal builders, exposed so tests can inspect the varieties.
IdealBasis classicalConsistencyIdeal(SetSystem const& quorums,
                                     CheckMethod method);
IdealBasis availabilityIdeal(SetSystem const& quorums,
                             SetSystem const& failProne);
IdealBasis disseminationConsistencyIdeal(SetSystem const& quorums,
                                         SetSystem const& failProne);
IdealBasis maskingConsistencyIdeal(SetSystem const& quorums,
                                   SetSystem const& failProne);
IdealBasis q3Ideal(SetSystem const& failProne);
IdealBasis q4Ideal(SetSystem const& failProne);

// All checks throw std::invalid_argument on empty systems or mismatched n,
// and BudgetExceeded when the ring would exceed options.variableBudget.
Verdict checkConsistencyClassical(SetSystem const& quorums, CheckMethod method,
                                  CheckOptions const& options = {});
Verdict checkAvailability(SetSystem const& quorums, SetSystem const& failProne,
                          CheckOptions const& options = {});
Verdict checkConsistencyDissemination(SetSystem const& quorums,
                                      SetSystem const& failProne,
                                      CheckOptions const& options = {});
Verdict checkConsistencyMasking(SetSystem const& quorums,
                                SetSystem const& failProne,
                                CheckOptions const& options = {});
Verdict checkQ3(SetSystem const& failProne, CheckOptions const& options = {});
Verdict checkQ4(SetSystem const& failProne, CheckOptions const& options = {});

enum class SystemKind
{
    Classical,
    Dissemination,
    Masking
};

SystemKind systemKindFromString(std::string_view s);
std::string toString(SystemKind k);

struct ThresholdSystem
{
    SetSystem quorums;
    SetSystem failProne;
};

// ceil((n+f+1)/2) for classical and dissemination, ceil((n+2f+1)/2) for
// masking.
int thresholdQuorumSize(int n, int f, SystemKind kind);

// Threshold systems for n processes and up to f faults. By default the
// quorums are all sets of exactly the threshold size and F is all f-subsets.
// With `literal`, quorums are all sets of at least the threshold size and F
// is all sets of at most f elements (not an antichain for f >= 1).
// Throws std::invalid_argument unless 0 <= f < n, and std::domain_error if
// the quorum size exceeds n.
ThresholdSystem thresholdSystem(int n, int f, SystemKind kind,
                                bool literal = false);

} // namespace qalg
