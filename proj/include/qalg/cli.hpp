// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "qalg/set_system.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qalg
{

namespace exit_code
{
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDisagreement = 3;
} // namespace exit_code

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// {"n": 4, "quorums": [[1,2,3], ...], "fail_prone": [[1], ...]}
// Indices are 1-based. Both lists are optional at this level; commands
// check for the ones they need.
struct SystemSpec
{
    int n = 1;
    std::optional<SetSystem> quorums;
    std::optional<SetSystem> failProne;
};

// Throws InputError on malformed JSON, out-of-range indices, duplicates.
SystemSpec parseSystemSpec(std::string_view text);
std::string writeSystemSpec(SystemSpec const& spec);

// args excludes the program name.
int runCli(std::vector<std::string> const& args, std::ostream& out,
           std::ostream& err);

} // namespace qalg
