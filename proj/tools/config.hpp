#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace subword::cli {

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

struct RunConfig {
    unsigned max_word_length = 20;
    std::size_t dense_limit = 4096;
    std::size_t det_limit = 256;
    std::uint64_t direct_sum_limit = std::uint64_t{1} << 26;
    double gelfand_tol = 1e-4;
    unsigned sweep_parallelism = default_parallelism();
    OutputFormat output_format = OutputFormat::Json;

    static unsigned default_parallelism();
    /// Throws ParseError on a non-positive limit.
    void validate() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// key = value lines; '#' starts a comment; unknown keys are errors.
RunConfig parse_config(const std::string& text);
/// Throws std::ios_base::failure when the file cannot be read.
RunConfig load_config(const std::string& path);
/// Every key, one per line; parse_config(save_config(c)) == c.
std::string save_config(const RunConfig& c);

}  // namespace subword::cli
