#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace subword::cli;

int main(int argc, char** argv) {
    CLI::App app{"Partial sums of (-1)^{s_w(n)}: orbits, matrices, spectra and certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string format;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--format", format, "output format: json, csv or text (overrides the config)");

    std::string word;
    std::string u;
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("word", word, "binary word")->required();
        sub->add_option("u", u, "base word, default 0^{l-1}1");
    };

    auto* analyze = app.add_subcommand("analyze", "classify a word and print the report");
    add_word(analyze);

    auto* sums = app.add_subcommand("sums", "partial sums S_n at sampled n");
    std::string to = "2^10";
    std::string stride = "geometric";
    std::string step = "1";
    unsigned per_octave = 8;
    bool csv = false;
    bool json = false;
    sums->add_option("word", word, "binary word")->required();
    sums->add_option("--to", to, "largest n, e.g. 1000 or 2^20");
    sums->add_option("--stride", stride, "geometric or arithmetic")->check(CLI::IsMember({"geometric", "arithmetic"}));
    sums->add_option("--step", step, "arithmetic step");
    sums->add_option("--per-octave", per_octave, "geometric points per doubling");
    sums->add_flag("--csv", csv, "CSV output (the default)");
    sums->add_flag("--json", json, "JSON output");

    auto* orbit_cmd = app.add_subcommand("orbit", "dump the orbit with successors and signs");
    add_word(orbit_cmd);
    auto* matrix = app.add_subcommand("matrix", "dump M_0, M_1, M and c");
    add_word(matrix);

    auto* sweep = app.add_subcommand("sweep", "classify every word up to a length");
    unsigned maxlen = 8;
    std::string out_path;
    sweep->add_option("--maxlen", maxlen, "largest word length")->required();
    sweep->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the fixture suite");
    std::string suite = "paper";
    std::string mutate;
    verify->add_option("--suite", suite, "suite name");
    verify->add_option("--mutate", mutate, "perturb one fixture's expected value (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParseFailure;
    }

    return guarded(
        [&]() -> int {
            RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
            if (!format.empty()) cfg.output_format = parse_format(format);
            auto opt_u = [&]() -> std::optional<std::string> { return u.empty() ? std::nullopt : std::optional(u); };

            if (*analyze) return cmd_analyze(word, opt_u(), cfg, std::cout);
            if (*sums) {
                SumsOptions o;
                o.word = word;
                o.to = parse_count(to);
                o.stride = stride == "arithmetic" ? Stride::Arithmetic : Stride::Geometric;
                o.step = parse_count(step);
                o.per_octave = per_octave;
                o.json = json && !csv;
                return cmd_sums(o, cfg, std::cout);
            }
            if (*orbit_cmd) return cmd_orbit(word, opt_u(), std::cout);
            if (*matrix) return cmd_matrix(word, opt_u(), cfg, std::cout);
            if (*sweep) {
                SweepOptions o;
                o.maxlen = maxlen;
                if (!out_path.empty()) o.out_path = out_path;
                return cmd_sweep(o, cfg, std::cout);
            }
            if (*verify) return cmd_verify(suite, mutate.empty() ? std::nullopt : std::optional(mutate), std::cout);
            return kParseFailure;
        },
        std::cerr);
}
