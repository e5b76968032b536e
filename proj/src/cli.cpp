// Copyright 2026 The qalg Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "qalg/cli.hpp"

#include "qalg/checkers.hpp"
#include "qalg/groebner.hpp"
#include "qalg/oracle.hpp"
#include "qalg/polynomial_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qalg
{

using Json = nlohmann::ordered_json;

namespace
{

SetSystem
readSetList(Json const& list, int n, char const* key)
{
    if (!list.is_array())
    {
        throw InputError(std::string("'") + key + "' must be a list of lists");
    }
    SetSystem out(n);
    for (auto const& entry : list)
    {
        if (!entry.is_array())
        {
            throw InputError(std::string("'") + key +
                             "' must be a list of lists");
        }
        std::uint64_t bits = 0;
        for (auto const& idx : entry)
        {
            if (!idx.is_number_integer())
            {
                throw InputError(std::string("non-integer index in '") + key +
                                 "'");
            }
            auto const i = idx.get<long long>();
            if (i < 1 || i > n)
            {
                throw InputError("index " + std::to_string(i) + " in '" + key +
                                 "' is outside 1.." + std::to_string(n));
            }
            std::uint64_t const bit = std::uint64_t{1} << (i - 1);
            if ((bits & bit) != 0)
            {
                throw InputError("index " + std::to_string(i) +
                                 " repeated within a set in '" + key + "'");
            }
            bits |= bit;
        }
        ProcessSubset const s(n, bits);
        if (out.contains(s))
        {
            throw InputError("duplicate set " + s.setString() + " in '" + key +
                             "'");
        }
        out.add(s);
    }
    return out;
}

Json
setListJson(SetSystem const& s)
{
    Json arr = Json::array();
    for (auto const& m : s.members())
    {
        arr.push_back(phiInverse(m));
    }
    return arr;
}

Json
witnessJson(std::vector<ProcessSubset> const& w)
{
    Json arr = Json::array();
    for (auto const& m : w)
    {
        arr.push_back(phiInverse(m));
    }
    return arr;
}

std::string
witnessString(std::vector<ProcessSubset> const& w)
{
    std::string out;
    for (auto const& m : w)
    {
        if (!out.empty())
        {
            out += ' ';
        }
        out += m.setString();
    }
    return out;
}

std::string
readFile(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Property
propertyFromString(std::string const& s)
{
    static std::pair<char const*, Property> const kNames[] = {
        {"consistency", Property::ClassicalConsistency},
        {"availability", Property::Availability},
        {"dissemination", Property::DisseminationConsistency},
        {"masking", Property::MaskingConsistency},
        {"q3", Property::Q3},
        {"q4", Property::Q4}};
    for (auto const& [name, p] : kNames)
    {
        if (s == name)
        {
            return p;
        }
    }
    throw InputError("unknown property '" + s + "'");
}

bool
needsQuorums(Property p)
{
    return p != Property::Q3 && p != Property::Q4;
}

bool
needsFailProne(Property p)
{
    return p != Property::ClassicalConsistency;
}

struct AlgebraicResult
{
    Verdict verdict;
    double millis = 0;
};

AlgebraicResult
runAlgebraic(Property p, SystemSpec const& spec, CheckMethod method,
             CheckOptions const& opts)
{
    auto const start = std::chrono::steady_clock::now();
    AlgebraicResult r;
    switch (p)
    {
    case Property::ClassicalConsistency:
        r.verdict = checkConsistencyClassical(*spec.quorums, method, opts);
        break;
    case Property::Availability:
        r.verdict = checkAvailability(*spec.quorums, *spec.failProne, opts);
        break;
    case Property::DisseminationConsistency:
        r.verdict =
            checkConsistencyDissemination(*spec.quorums, *spec.failProne, opts);
        break;
    case Property::MaskingConsistency:
        r.verdict =
            checkConsistencyMasking(*spec.quorums, *spec.failProne, opts);
        break;
    case Property::Q3:
        r.verdict = checkQ3(*spec.failProne, opts);
        break;
    case Property::Q4:
        r.verdict = checkQ4(*spec.failProne, opts);
        break;
    }
    r.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

OracleReport
runOracle(Property p, SystemSpec const& spec)
{
    switch (p)
    {
    case Property::ClassicalConsistency:
        return oracle::consistencyClassical(*spec.quorums);
    case Property::Availability:
        return oracle::availability(*spec.quorums, *spec.failProne);
    case Property::DisseminationConsistency:
        return oracle::consistencyDissemination(*spec.quorums,
                                                *spec.failProne);
    case Property::MaskingConsistency:
        return oracle::consistencyMasking(*spec.quorums, *spec.failProne);
    case Property::Q3:
        return oracle::q3(*spec.failProne);
    case Property::Q4:
        return oracle::q4(*spec.failProne);
    }
    throw std::logic_error("unhandled property");
}

std::string
holdsWord(bool holds)
{
    return holds ? "holds" : "fails";
}

std::string
algebraicLine(Verdict const& v)
{
    std::string out = holdsWord(v.holds);
    if (v.method == CheckMethod::SmCount)
    {
        out += " (" + std::to_string(*v.observedCount) +
               (v.holds ? " = " : " != ") + std::to_string(v.expectedCount) +
               ")";
    }
    else
    {
        out += v.holds ? " (G = {1})"
                       : " (G != {1}, " +
                             std::to_string(v.certificate.basis.size()) +
                             " basis elements)";
    }
    return out;
}

Json
algebraicJson(AlgebraicResult const& r, bool timing)
{
    Verdict const& v = r.verdict;
    Json j;
    j["method"] = toString(v.method);
    j["holds"] = v.holds;
    j["expected"] = v.expectedCount;
    if (v.observedCount)
    {
        j["observed"] = *v.observedCount;
    }
    else
    {
        j["observed"] = nullptr;
    }
    j["basis_size"] = v.certificate.basis.size();
    j["unit_ideal"] = v.certificate.isUnitIdeal();
    if (timing)
    {
        j["time_ms"] = r.millis;
    }
    return j;
}

struct CheckArgs
{
    std::string property;
    std::string input;
    std::string method = "both";
    std::string format = "text";
    bool timing = false;
};

int
cmdCheck(CheckArgs const& a, std::ostream& out, std::ostream& err)
{
    Property const p = propertyFromString(a.property);
    SystemSpec const spec = parseSystemSpec(readFile(a.input));
    if (needsQuorums(p) && (!spec.quorums || spec.quorums->empty()))
    {
        throw InputError("'" + a.property + "' needs a nonempty 'quorums'");
    }
    if (needsFailProne(p) && (!spec.failProne || spec.failProne->empty()))
    {
        throw InputError("'" + a.property + "' needs a nonempty 'fail_prone'");
    }
    bool const algebraic = a.method != "oracle";
    bool const useOracle = a.method != "algebraic";

    std::vector<AlgebraicResult> alg;
    if (algebraic)
    {
        CheckOptions const opts = CheckOptions::fromEnvironment();
        alg.push_back(runAlgebraic(p, spec, CheckMethod::SmCount, opts));
        if (p == Property::ClassicalConsistency)
        {
            alg.push_back(
                runAlgebraic(p, spec, CheckMethod::TrivialIdeal, opts));
        }
    }
    std::optional<OracleReport> orc;
    double oracleMillis = 0;
    if (useOracle)
    {
        auto const start = std::chrono::steady_clock::now();
        orc = runOracle(p, spec);
        oracleMillis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }

    std::vector<bool> verdicts;
    for (auto const& r : alg)
    {
        verdicts.push_back(r.verdict.holds);
    }
    if (orc)
    {
        verdicts.push_back(orc->holds);
    }
    bool const agree =
        std::adjacent_find(verdicts.begin(), verdicts.end(),
                           std::not_equal_to<>()) == verdicts.end();
    bool const holds = verdicts.front();
    std::string const verdictWord = agree ? holdsWord(holds) : "disagreement";

    if (a.format == "json-like")
    {
        Json j;
        j["property"] = toString(p);
        j["n"] = spec.n;
        j["quorums"] = spec.quorums ? setListJson(*spec.quorums) : Json();
        j["fail_prone"] =
            spec.failProne ? setListJson(*spec.failProne) : Json();
        Json algJson = Json::array();
        for (auto const& r : alg)
        {
            algJson.push_back(algebraicJson(r, a.timing));
        }
        j["algebraic"] = algJson;
        if (orc)
        {
            Json o;
            o["holds"] = orc->holds;
            o["witness"] = orc->witness ? witnessJson(*orc->witness) : Json();
            if (a.timing)
            {
                o["time_ms"] = oracleMillis;
            }
            j["oracle"] = o;
        }
        else
        {
            j["oracle"] = nullptr;
        }
        j["verdict"] = verdictWord;
        out << j.dump(2) << '\n';
    }
    else
    {
        out << "property: " << toString(p) << '\n';
        out << "n: " << spec.n << '\n';
        if (spec.quorums)
        {
            out << "quorums: " << spec.quorums->toString() << '\n';
        }
        if (spec.failProne)
        {
            out << "fail_prone: " << spec.failProne->toString() << '\n';
        }
        for (auto const& r : alg)
        {
            out << (r.verdict.method == CheckMethod::SmCount
                        ? "algebraic: "
                        : "algebraic (trivial-ideal): ")
                << algebraicLine(r.verdict);
            if (a.timing)
            {
                out << " [" << r.millis << " ms]";
            }
            out << '\n';
        }
        if (orc)
        {
            out << "oracle: " << holdsWord(orc->holds);
            if (a.timing)
            {
                out << " [" << oracleMillis << " ms]";
            }
            out << '\n';
            if (orc->witness)
            {
                out << "witness: " << witnessString(*orc->witness) << '\n';
            }
        }
        out << "verdict: " << verdictWord << '\n';
    }
    if (!agree)
    {
        err << "error: algebraic and oracle verdicts disagree\n";
        return exit_code::kDisagreement;
    }
    return holds ? exit_code::kHolds : exit_code::kFails;
}

struct GroebnerArgs
{
    std::string polys;
    std::string order;
    int n = 0;
};

int
cmdGroebner(GroebnerArgs const& a, std::ostream& out)
{
    std::string text = a.polys;
    std::error_code ec;
    if (!text.empty() && std::filesystem::is_regular_file(text, ec))
    {
        text = readFile(text);
    }
    PolynomialTextInfo const info = scanPolynomialText(text);
    BlockLexOrder const order =
        !a.order.empty() ? BlockLexOrder::parse(a.order)
        : info.blocks.empty()
            ? BlockLexOrder{Block::X}
            : BlockLexOrder(std::span<Block const>(info.blocks));
    int const n = a.n > 0 ? a.n : std::max(1, info.maxIndex);
    PolyRing const ring(n, order);
    IdealBasis const ideal{ring, parsePolynomialList(text, ring)};
    GroebnerCertificate const cert = buchberger(ideal);

    out << "order: " << order.toString() << '\n';
    out << "n: " << n << '\n';
    out << "basis:\n";
    for (auto const& g : cert.basis)
    {
        out << "  " << toString(g) << '\n';
    }
    out << "sm: " << cert.smCount << '\n';
    for (auto const& e : cert.eliminationCounts)
    {
        std::string blocks;
        for (auto b : e.keptBlocks)
        {
            blocks += blocks.empty() ? "" : ",";
            blocks += blockLetter(b);
        }
        out << "sm[" << blocks << "]: " << e.smCount << '\n';
    }
    return exit_code::kHolds;
}

struct GenArgs
{
    int n = 0;
    int f = 0;
    std::string kind;
    std::string out;
    bool literal = false;
};

int
cmdGenThreshold(GenArgs const& a, std::ostream& out, std::ostream& err)
{
    SystemKind const kind = systemKindFromString(a.kind);
    ThresholdSystem sys;
    try
    {
        sys = thresholdSystem(a.n, a.f, kind, a.literal);
    }
    catch (std::domain_error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_code::kFails;
    }
    std::string const text =
        writeSystemSpec({a.n, sys.quorums, sys.failProne});
    if (a.out == "-")
    {
        out << text;
    }
    else
    {
        std::ofstream file(a.out, std::ios::binary);
        if (!file || !(file << text))
        {
            throw InputError("cannot write '" + a.out + "'");
        }
    }

    // Validation warnings only; generation itself succeeded.
    std::vector<OracleReport> reports;
    switch (kind)
    {
    case SystemKind::Classical:
        reports.push_back(oracle::consistencyClassical(sys.quorums));
        break;
    case SystemKind::Dissemination:
        reports.push_back(oracle::q3(sys.failProne));
        reports.push_back(
            oracle::consistencyDissemination(sys.quorums, sys.failProne));
        break;
    case SystemKind::Masking:
        reports.push_back(oracle::q4(sys.failProne));
        reports.push_back(
            oracle::consistencyMasking(sys.quorums, sys.failProne));
        break;
    }
    reports.push_back(oracle::availability(sys.quorums, sys.failProne));
    for (auto const& r : reports)
    {
        if (!r.holds)
        {
            err << "warning: " << toString(r.property)
                << " fails for the generated system (witness "
                << witnessString(*r.witness) << ")\n";
        }
    }
    return exit_code::kHolds;
}

} // namespace

SystemSpec
parseSystemSpec(std::string_view text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (Json::parse_error const& e)
    {
        throw InputError(std::string("malformed input: ") + e.what());
    }
    if (!j.is_object())
    {
        throw InputError("input must be an object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
    {
        throw InputError("input needs an integer 'n'");
    }
    auto const n = j["n"].get<long long>();
    if (n < 1 || n > kMaxProcesses)
    {
        throw InputError("'n' must be in 1..64");
    }
    SystemSpec spec;
    spec.n = static_cast<int>(n);
    for (auto const& [key, value] : j.items())
    {
        if (key == "n")
        {
            continue;
        }
        if (key == "quorums")
        {
            spec.quorums = readSetList(value, spec.n, "quorums");
        }
        else if (key == "fail_prone")
        {
            spec.failProne = readSetList(value, spec.n, "fail_prone");
        }
        else
        {
            throw InputError("unknown key '" + key + "'");
        }
    }
    return spec;
}

std::string
writeSystemSpec(SystemSpec const& spec)
{
    Json j;
    j["n"] = spec.n;
    if (spec.quorums)
    {
        j["quorums"] = setListJson(*spec.quorums);
    }
    if (spec.failProne)
    {
        j["fail_prone"] = setListJson(*spec.failProne);
    }
    return j.dump() + '\n';
}

int
runCli(std::vector<std::string> const& args, std::ostream& out,
       std::ostream& err)
{
    CLI::App app{"Quorum system checks via Boolean Groebner bases", "qalg"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* checkCmd = app.add_subcommand("check", "Decide a property of a "
                                                 "quorum/fail-prone system");
    checkCmd->add_option("property", check.property,
                         "consistency|availability|dissemination|masking|"
                         "q3|q4")
        ->required()
        ->check(CLI::IsMember({"consistency", "availability", "dissemination",
                               "masking", "q3", "q4"}));
    checkCmd->add_option("--input", check.input, "System file (JSON)")
        ->required();
    checkCmd->add_option("--method", check.method, "algebraic|oracle|both")
        ->check(CLI::IsMember({"algebraic", "oracle", "both"}));
    checkCmd->add_option("--format", check.format, "text|json-like")
        ->check(CLI::IsMember({"text", "json-like"}));
    checkCmd->add_flag("--timing", check.timing, "Report wall-clock times");

    GroebnerArgs gb;
    auto* gbCmd = app.add_subcommand("groebner", "Reduced Boolean Groebner "
                                                 "basis and standard "
                                                 "monomial count");
    gbCmd->add_option("--polys", gb.polys, "Polynomial list or file")
        ->required();
    gbCmd->add_option("--order", gb.order,
                      "Block order, most significant first, e.g. y,x");
    gbCmd->add_option("--n", gb.n, "Variables per block")
        ->check(CLI::Range(1, kMaxVariables));

    GenArgs gen;
    auto* genCmd = app.add_subcommand("gen-threshold",
                                      "Write a threshold system file");
    genCmd->add_option("--n", gen.n, "Number of processes")
        ->required()
        ->check(CLI::Range(1, kMaxProcesses));
    genCmd->add_option("--f", gen.f, "Fault threshold")->required();
    genCmd->add_option("--kind", gen.kind, "classical|dissemination|masking")
        ->required()
        ->check(CLI::IsMember({"classical", "dissemination", "masking"}));
    genCmd->add_option("--out", gen.out, "Output file, or - for stdout")
        ->required();
    genCmd->add_flag("--literal", gen.literal,
                     "All quorums of at least the threshold size, all "
                     "fail-prone sets of at most f elements");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_code::kHolds : exit_code::kUsage;
    }

    try
    {
        if (checkCmd->parsed())
        {
            return cmdCheck(check, out, err);
        }
        if (gbCmd->parsed())
        {
            return cmdGroebner(gb, out);
        }
        return cmdGenThreshold(gen, out, err);
    }
    catch (BudgetExceeded const& e)
    {
        err << "error: " << e.what()
            << "; raise QA_VAR_BUDGET or use --method oracle\n";
        return exit_code::kUsage;
    }
    catch (std::exception const& e)
    {
        // Input, parse and argument errors.
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

} // namespace qalg
