#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace subword::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kParseFailure = 2, kOverflow = 3, kIoFailure = 4 };

/// Runs `body`, mapping exceptions to exit codes: parse, arity, domain,
/// index and capacity errors give 2, overflow 3, stream failures 4. The
/// message goes to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

/// "1000", "2^20" or "2^20-1". Throws ParseError.
std::uint64_t parse_count(const std::string& text);

int cmd_analyze(const std::string& word, const std::optional<std::string>& u, const RunConfig& cfg, std::ostream& out);

enum class Stride { Geometric, Arithmetic };

struct SumsOptions {
    std::string word;
    std::uint64_t to = 1024;
    Stride stride = Stride::Geometric;
    std::uint64_t step = 1;
    unsigned per_octave = 8;
    bool json = false;
};

/// "n,S_n" rows, or a JSON array of {n, S_n} objects.
int cmd_sums(const SumsOptions& o, const RunConfig& cfg, std::ostream& out);

int cmd_orbit(const std::string& word, const std::optional<std::string>& u, std::ostream& out);
int cmd_matrix(const std::string& word, const std::optional<std::string>& u, const RunConfig& cfg, std::ostream& out);

struct SweepOptions {
    unsigned maxlen = 8;
    std::optional<std::string> out_path;
};

struct SweepSummary {
    std::size_t counts[4] = {0, 0, 0, 0};  // indexed by Verdict
    std::size_t total = 0;
    std::size_t violations = 0;
};

/// Classifies every w with 2 <= |w| <= maxlen against 0^{l-1}1, in
/// (length, value) order, on cfg.sweep_parallelism threads. One record per
/// line, then a summary line.
SweepSummary run_sweep(const SweepOptions& o, const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const SweepOptions& o, const RunConfig& cfg, std::ostream& out);

struct FixtureResult {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<std::string> reference_fixture_names();
/// When `mutate` names a fixture, its expected value is perturbed so that
/// the fixture must fail.
std::vector<FixtureResult> run_reference_suite(const std::optional<std::string>& mutate = std::nullopt);
int cmd_verify(const std::string& suite, const std::optional<std::string>& mutate, std::ostream& out);

}  // namespace subword::cli
