#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "subword/errors.hpp"

using namespace subword::cli;

TEST_CASE("config round trip and validation") {
    RunConfig c;
    c.max_word_length = 12;
    c.gelfand_tol = 3.3e-7;
    c.sweep_parallelism = 3;
    c.output_format = OutputFormat::Csv;
    c.det_limit = 99;
    CHECK(parse_config(save_config(c)) == c);
    CHECK(parse_config(save_config(RunConfig{})) == RunConfig{});
    CHECK(parse_config("# comment\n\n dense_limit = 7 # trailing\n").dense_limit == 7);
    CHECK_THROWS_AS(parse_config("dense_limit = 0\n"), subword::ParseError);
    CHECK_THROWS_AS(parse_config("nonsense = 1\n"), subword::ParseError);
    CHECK_THROWS_AS(parse_config("dense_limit 4\n"), subword::ParseError);
    CHECK_THROWS_AS(parse_config("gelfand_tol = abc\n"), subword::ParseError);
    CHECK_THROWS_AS(parse_config("output_format = xml\n"), subword::ParseError);
    CHECK_THROWS_AS(load_config("/nonexistent/cfg"), std::ios_base::failure);
}

TEST_CASE("counts") {
    CHECK(parse_count("1000") == 1000);
    CHECK(parse_count("2^20") == (1u << 20));
    CHECK(parse_count("2^20-1") == (1u << 20) - 1);
    CHECK_THROWS_AS(parse_count("2^64"), subword::ParseError);
    CHECK_THROWS_AS(parse_count("x"), subword::ParseError);
    CHECK_THROWS_AS(parse_count(""), subword::ParseError);
}

TEST_CASE("sums output") {
    std::ostringstream out;
    SumsOptions o;
    o.word = "01";
    o.to = 3;
    o.stride = Stride::Arithmetic;
    CHECK(cmd_sums(o, {}, out) == kOk);
    CHECK(out.str() == "n,S_n\n0,1\n1,2\n2,3\n3,4\n");
    std::ostringstream geo;
    o.stride = Stride::Geometric;
    o.to = 3;
    cmd_sums(o, {}, geo);
    CHECK(geo.str().substr(geo.str().rfind('\n', geo.str().size() - 2) + 1) == "3,4\n");
    o.to = (std::uint64_t{1} << 62) + 1;
    std::ostringstream err;
    CHECK(guarded([&] { return cmd_sums(o, {}, out); }, err) == kParseFailure);
}

TEST_CASE("csv rows parse back to the evaluator's integers") {
    std::ostringstream out;
    SumsOptions o;
    o.word = "111";
    o.to = std::uint64_t{1} << 20;
    cmd_sums(o, {}, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,S_n");
    const subword::PartialSumEvaluator e(subword::OrbitTable(subword::BinaryWord::parse("111"), subword::unit_suffix(3)));
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(e.base_sum(std::stoull(line.substr(0, comma))) == std::stoll(line.substr(comma + 1)));
        ++rows;
    }
    CHECK(rows > 20);
}

TEST_CASE("analyze is deterministic and maps errors to exit codes") {
    std::ostringstream a, b, err;
    CHECK(cmd_analyze("011", std::nullopt, {}, a) == kOk);
    cmd_analyze("011", std::nullopt, {}, b);
    CHECK(a.str() == b.str());
    const auto j = nlohmann::json::parse(a.str());
    for (const char* key : {"word", "u", "orbit_size", "cycle_lengths", "certificate", "det_2I_minus_M", "modulus_two",
                            "spectral_radius", "exponent_certified", "exponent_empirical", "verdict", "family_matches"})
        CHECK(j.contains(key));
    CHECK(j["verdict"] == "PROVED_P");
    CHECK(j["det_2I_minus_M"] == "8");
    CHECK(std::abs(j["spectral_radius"]["estimate"].get<double>() - 1.4142) < 1e-3);
    std::ostringstream c;
    cmd_analyze("111", std::nullopt, {}, c);
    CHECK(nlohmann::json::parse(c.str())["verdict"] == "PROVED_NOT_P");
    CHECK(guarded([&] { return cmd_analyze("01x", std::nullopt, {}, a); }, err) == kParseFailure);
    CHECK(guarded([&] { return cmd_analyze("011", "01", {}, a); }, err) == kParseFailure);
    CHECK(guarded([]() -> int { throw subword::OverflowError("x"); }, err) == kOverflow);
    CHECK(guarded([]() -> int { throw std::ios_base::failure("x"); }, err) == kIoFailure);
}

TEST_CASE("orbit and matrix dumps") {
    std::ostringstream o, m;
    cmd_orbit("011", std::nullopt, o);
    CHECK(o.str() ==
          "0 001 s0=0 t0=0 s1=1 t1=0\n1 011 s0=1 t0=0 s1=2 t1=0\n2 101 s0=2 t0=1 s1=3 t1=0\n3 111 s0=3 t0=1 s1=0 t1=0\n");
    cmd_matrix("011", std::nullopt, {}, m);
    CHECK(m.str().find("M:\n1 1 0 0\n0 1 1 0\n0 0 -1 1\n1 0 0 -1\n") != std::string::npos);
    std::ostringstream ten;
    cmd_orbit("10", std::nullopt, ten);
    const std::string dump = ten.str();
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 2);
}

TEST_CASE("sweep ordering, summary and threads") {
    RunConfig cfg;
    cfg.output_format = OutputFormat::Text;
    std::ostringstream one, many;
    cfg.sweep_parallelism = 1;
    const SweepSummary s1 = run_sweep({5, std::nullopt}, cfg, one);
    cfg.sweep_parallelism = 4;
    const SweepSummary s4 = run_sweep({5, std::nullopt}, cfg, many);
    CHECK(one.str() == many.str());
    CHECK(s1.total == 4 + 8 + 16 + 32);
    CHECK(s1.counts[0] + s1.counts[1] + s1.counts[2] + s1.counts[3] == s1.total);
    CHECK(s4.violations == 0);
    CHECK(one.str().find("word 11  u 01  orbit 2  verdict PROVED_P") != std::string::npos);
    CHECK(one.str().find("family one-run (a=0,l=4): P") != std::string::npos);
    CHECK(one.str().find("word 00  ") < one.str().find("word 01  "));
    CHECK(one.str().find("word 11  ") < one.str().find("word 000  "));

    cfg.max_word_length = 4;
    std::ostringstream err;
    CHECK(guarded([&] { return cmd_sweep({5, std::nullopt}, cfg, one); }, err) == kParseFailure);
    CHECK(guarded([&] { return cmd_sweep({3, std::string("/nonexistent/dir/x")}, cfg, one); }, err) == kIoFailure);

    const auto path = std::filesystem::temp_directory_path() / "subword_sweep_test.jsonl";
    cfg.output_format = OutputFormat::Json;
    CHECK(cmd_sweep({3, path.string()}, cfg, one) == kOk);
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);
}

TEST_CASE("fixture suite passes and every mutation is caught") {
    std::ostringstream out;
    CHECK(cmd_verify("paper", std::nullopt, out) == kOk);
    for (const std::string& name : reference_fixture_names()) {
        std::ostringstream m;
        CHECK_MESSAGE(cmd_verify("paper", name, m) == kVerifyFailed, name);
    }
    std::ostringstream err;
    CHECK(guarded([&] { return cmd_verify("other", std::nullopt, out); }, err) == kParseFailure);
    CHECK(guarded([&] { return cmd_verify("paper", std::string("no such"), out); }, err) == kParseFailure);
}
