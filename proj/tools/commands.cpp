#include "commands.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "report.hpp"
#include "subword/certify.hpp"
#include "subword/counting.hpp"

namespace subword::cli {

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::invalid_argument& e) {  // ArityError
        err << "bad argument: " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::domain_error& e) {
        err << "bad argument: " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::length_error& e) {  // CapacityError
        err << "too large: " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::out_of_range& e) {
        err << "bad argument: " << e.what() << '\n';
        return kParseFailure;
    }
}

std::uint64_t parse_count(const std::string& text) {
    auto num = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) throw ParseError("bad count '" + text + "'");
        return v;
    };
    std::string_view s = text;
    std::uint64_t minus = 0;
    if (auto m = s.find('-'); m != std::string_view::npos) {
        minus = num(s.substr(m + 1));
        s = s.substr(0, m);
    }
    std::uint64_t v;
    if (auto c = s.find('^'); c != std::string_view::npos) {
        const std::uint64_t base = num(s.substr(0, c));
        const std::uint64_t e = num(s.substr(c + 1));
        v = 1;
        for (std::uint64_t i = 0; i < e; ++i)
            if (__builtin_mul_overflow(v, base, &v)) throw ParseError("count '" + text + "' does not fit 64 bits");
    } else {
        v = num(s);
    }
    if (minus > v) throw ParseError("count '" + text + "' is negative");
    return v - minus;
}

namespace {

BinaryWord base_or_default(const BinaryWord& w, const std::optional<std::string>& u) {
    if (!u) return unit_suffix(w.length());
    BinaryWord b = BinaryWord::parse(*u);
    if (b.length() != w.length()) throw ParseError("|u| must equal |w|");
    return b;
}

}  // namespace

int cmd_analyze(const std::string& word, const std::optional<std::string>& u, const RunConfig& cfg, std::ostream& out) {
    const BinaryWord w = BinaryWord::parse(word);
    std::optional<BinaryWord> base;
    if (u) base = base_or_default(w, u);
    const AnalysisReport r = classify(w, base, classify_options(cfg));
    switch (cfg.output_format) {
        case OutputFormat::Json: out << report_json(r).dump(2) << '\n'; break;
        case OutputFormat::Csv: out << csv_header() << '\n' << csv_row(r) << '\n'; break;
        case OutputFormat::Text: out << text_report(r) << '\n'; break;
    }
    return kOk;
}

int cmd_sums(const SumsOptions& o, const RunConfig&, std::ostream& out) {
    const BinaryWord w = BinaryWord::parse(o.word);
    if (w.empty()) throw ParseError("word must be nonempty");
    if (o.to > (std::uint64_t{1} << 62)) throw ParseError("N must not exceed 2^62");
    const OrbitTable orb(w, unit_suffix(w.length()));
    const PartialSumEvaluator eval(orb);
    const std::vector<std::uint64_t> ns =
        o.stride == Stride::Geometric ? geometric_samples(o.to, o.per_octave) : arithmetic_samples(o.to, o.step);
    // evaluate everything first so an overflow leaves no partial output
    std::vector<std::int64_t> sums;
    sums.reserve(ns.size());
    for (std::uint64_t n : ns) sums.push_back(eval.base_sum(n));
    if (o.json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({{"n", ns[i]}, {"S_n", sums[i]}});
        out << rows.dump() << '\n';
    } else {
        out << "n,S_n\n";
        for (std::size_t i = 0; i < ns.size(); ++i) out << ns[i] << ',' << sums[i] << '\n';
    }
    return kOk;
}

int cmd_orbit(const std::string& word, const std::optional<std::string>& u, std::ostream& out) {
    const BinaryWord w = BinaryWord::parse(word);
    out << dump_orbit(OrbitTable(w, base_or_default(w, u)));
    return kOk;
}

int cmd_matrix(const std::string& word, const std::optional<std::string>& u, const RunConfig& cfg, std::ostream& out) {
    const BinaryWord w = BinaryWord::parse(word);
    const OrbitTable orb(w, base_or_default(w, u));
    if (orb.size() > cfg.dense_limit)
        throw CapacityError("orbit of size " + std::to_string(orb.size()) + " exceeds dense_limit");
    const PartialSumEvaluator eval(orb);
    out << "order:";
    for (const auto& x : orb.elements()) out << ' ' << x.str();
    out << "\nM0:\n" << dump_matrix(eval.matrices().m0.dense());
    out << "M1:\n" << dump_matrix(eval.matrices().m1.dense());
    out << "M:\n" << dump_matrix(dense_sum(eval.matrices()));
    out << "c: " << dump_vector(eval.c()) << '\n';
    return kOk;
}

SweepSummary run_sweep(const SweepOptions& o, const RunConfig& cfg, std::ostream& out) {
    if (o.maxlen < 2) throw ParseError("--maxlen must be at least 2");
    if (o.maxlen > cfg.max_word_length) throw ParseError("--maxlen exceeds max_word_length");
    std::vector<BinaryWord> words;
    for (unsigned l = 2; l <= o.maxlen; ++l)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << l); ++b) words.push_back(BinaryWord::from_bits(b, l));

    const ClassifyOptions copt = classify_options(cfg);
    std::vector<std::string> lines(words.size());
    std::vector<int> verdicts(words.size());
    std::vector<std::size_t> viol(words.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < words.size();) {
            try {
                const AnalysisReport r = classify(words[i], std::nullopt, copt);
                lines[i] = render(r, cfg.output_format);
                verdicts[i] = static_cast<int>(r.verdict);
                viol[i] = r.consistency_violations.size();
            } catch (...) {
                std::lock_guard lk(failure_mu);
                if (!failure) failure = std::current_exception();
                next = words.size();
            }
        }
    };
    const unsigned nthreads = std::max(1u, std::min<unsigned>(cfg.sweep_parallelism, static_cast<unsigned>(words.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SweepSummary s;
    if (cfg.output_format == OutputFormat::Csv) out << csv_header() << '\n';
    for (std::size_t i = 0; i < words.size(); ++i) {
        out << lines[i] << '\n';
        ++s.counts[verdicts[i]];
        s.violations += viol[i];
    }
    s.total = words.size();
    const Verdict all[] = {Verdict::ProvedP, Verdict::ProvedNotP, Verdict::SpectralObstruction, Verdict::Inconclusive};
    if (cfg.output_format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        for (Verdict v : all) j[to_string(v)] = s.counts[static_cast<int>(v)];
        j["total"] = s.total;
        j["consistency_violations"] = s.violations;
        out << nlohmann::ordered_json{{"summary", j}}.dump() << '\n';
    } else {
        out << "summary";
        for (Verdict v : all) out << (cfg.output_format == OutputFormat::Csv ? ',' : ' ') << to_string(v) << '=' << s.counts[static_cast<int>(v)];
        const char sep = cfg.output_format == OutputFormat::Csv ? ',' : ' ';
        out << sep << "total=" << s.total << sep << "consistency_violations=" << s.violations << '\n';
    }
    return s;
}

int cmd_sweep(const SweepOptions& o, const RunConfig& cfg, std::ostream& out) {
    if (!o.out_path) {
        run_sweep(o, cfg, out);
        return kOk;
    }
    std::ofstream f;
    f.exceptions(std::ios::failbit | std::ios::badbit);
    try {
        f.open(*o.out_path);
    } catch (const std::ios_base::failure&) {
        throw std::ios_base::failure("cannot open " + *o.out_path + " for writing");
    }
    run_sweep(o, cfg, f);
    f.close();
    return kOk;
}

// ---- reference fixtures ----

namespace {

using Check = std::function<FixtureResult(bool perturb)>;

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

FixtureResult result(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

std::vector<std::pair<std::string, Check>> fixtures() {
    std::vector<std::pair<std::string, Check>> f;

    f.emplace_back("s_10(26)", [](bool p) {
        const long want = p ? 6 : 5;
        const auto got = count_subword(W("10"), 26);
        return result("s_10(26)", got == want, "got " + got.str() + ", want " + std::to_string(want));
    });
    f.emplace_back("e_10(26)", [](bool p) {
        const long want = p ? 3 : 2;
        const auto got = count_factor(W("10"), 26);
        return result("e_10(26)", got == want, "got " + got.str() + ", want " + std::to_string(want));
    });
    f.emplace_back("orbit(011,001)", [](bool p) {
        std::vector<BinaryWord> want{W("001"), W("011"), W("101"), W("111")};
        if (p) want[3] = W("110");
        const OrbitTable o(W("011"), W("001"));
        std::vector<BinaryWord> got = o.elements();
        std::sort(got.begin(), got.end());
        return result("orbit(011,001)", got == want);
    });
    f.emplace_back("M(011,001)", [](bool p) {
        DenseIntMatrix want{4, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, -1, 1, 1, 0, 0, -1}};
        if (p) want(2, 2) = 1;
        const OrbitTable o(W("011"), W("001"));
        const DenseIntMatrix got = dense_sum(build_matrices(o));
        bool order = o.element(0) == W("001") && o.element(1) == W("011") && o.element(2) == W("101") && o.element(3) == W("111");
        return result("M(011,001)", order && got == want, "got\n" + dump_matrix(got));
    });
    f.emplace_back("c(011,001)", [](bool p) {
        SumVector want{0, 2, 0, -2};
        if (p) want[1] = -2;
        const SumVector got = constant_c(OrbitTable(W("011"), W("001")));
        return result("c(011,001)", got == want, "got " + dump_vector(got));
    });
    f.emplace_back("spectrum M(011)", [](bool p) {
        std::vector<double> want{0, 0, std::sqrt(2.0), std::sqrt(2.0)};
        if (p) want[0] = 1;
        const auto got = eigenvalue_magnitudes(dense_sum(build_matrices(OrbitTable(W("011"), W("001")))));
        bool ok = got.size() == want.size();
        std::string d;
        for (std::size_t i = 0; ok && i < got.size(); ++i) {
            ok = std::abs(got[i] - want[i]) <= 1e-6;
            d += std::to_string(got[i]) + " ";
        }
        return result("spectrum M(011)", ok, d);
    });
    f.emplace_back("rho M(011)", [](bool p) {
        const double want = p ? 1.5 : std::sqrt(2.0);
        const auto r = spectral_radius_estimate(dense_sum(build_matrices(OrbitTable(W("011"), W("001")))));
        return result("rho M(011)", std::abs(r.estimate - want) <= 1e-4, "got " + std::to_string(r.estimate));
    });
    f.emplace_back("S_{4N+3} = 2 + 2 S_N for 01", [](bool p) {
        const PartialSumEvaluator e(OrbitTable(W("01"), W("01")));
        const std::int64_t k = p ? 3 : 2;
        for (std::uint64_t N = 0; N <= 1000; ++N)
            if (e.base_sum(4 * N + 3) != k + 2 * e.base_sum(N))
                return result("S_{4N+3} = 2 + 2 S_N for 01", false, "fails at N = " + std::to_string(N));
        return result("S_{4N+3} = 2 + 2 S_N for 01", true);
    });
    f.emplace_back("step examples", [](bool p) {
        bool ok = step(W("011"), 1, W("001")) == StepResult{0, W("011")} &&
                  step(W("011"), 0, W("111")) == StepResult{p ? 0 : 1, W("111")} &&
                  step_inverse(W("011"), 1, W("011")) == W("001") && step_inverse(W("011"), 0, W("111")) == W("111");
        return result("step examples", ok);
    });
    f.emplace_back("one-run cycle lengths", [](bool p) {
        for (unsigned l = 2; l <= 10; ++l) {
            const std::size_t want = (std::size_t{1} << ceil_log2(l)) + (p && l == 5 ? 1 : 0);
            for (int a = 0; a < 2; ++a) {
                const BinaryWord w = a ? BinaryWord::ones(l) : BinaryWord::zeros(l);
                if (cycle_length(w, a, unit_suffix(l)) != want)
                    return result("one-run cycle lengths", false, "l = " + std::to_string(l));
            }
        }
        return result("one-run cycle lengths", true);
    });
    f.emplace_back("one-run table", [](bool p) {
        for (unsigned l = 2; l <= 12; ++l) {
            const bool want = is_power_of_two(l) != (p && l == 6);
            const AnalysisReport r = classify(BinaryWord::ones(l));
            if ((r.verdict == Verdict::ProvedP) != want ||
                (!want && r.verdict != Verdict::ProvedNotP))
                return result("one-run table", false, "l = " + std::to_string(l) + " gave " + to_string(r.verdict));
        }
        return result("one-run table", true);
    });
    f.emplace_back("one-run obstruction", [](bool p) {
        for (unsigned l : {3u, 5u, 6u, 7u}) {
            const OneRunResult r = check_one_run(1, l, {10, 12});
            if (r.verdict != OneRunVerdict::ProvedNotP || (r.inner_product == 0) != p)
                return result("one-run obstruction", false, "l = " + std::to_string(l));
        }
        return result("one-run obstruction", true);
    });
    f.emplace_back("modulus-two examples", [](bool p) {
        auto has = [](const char* w, const char* u) {
            const MatrixPair m = build_matrices(OrbitTable(W(w), W(u)));
            return detect_modulus_two(m.m0, m.m1);
        };
        const bool ok = !has("011", "001").present && has("111", "001").has_eigenvalue_two() &&
                        has("11", "01").present == p;
        return result("modulus-two examples", ok);
    });
    f.emplace_back("certificate examples", [](bool p) {
        const bool ok = find_certificate(W("011"), W("001")).has_value() &&
                        find_certificate(W("111"), W("001")).has_value() == p &&
                        find_certificate(W("11"), W("01")).has_value();
        return result("certificate examples", ok);
    });
    f.emplace_back("simple family", [](bool p) {
        const Certificate c1 = check_simple_family(1, W("0"), 2, 2);
        const Certificate c2 = check_simple_family(0, BinaryWord{}, 4, 3);
        const int want_a = p ? 1 : 0;
        return result("simple family", c1.a == want_a && replay(c1) && replay(c2));
    });
    f.emplace_back("long prefix", [](bool p) {
        const Certificate c1 = check_long_prefix(1, 2, W("010"), 1, W("101"));
        const Certificate c2 = check_long_prefix(0, 2, W("11"));
        bool rejected = false;
        try {
            check_long_prefix(1, 2, W("110"), 0, W("001"));
        } catch (const DomainError&) {
            rejected = true;
        }
        const BinaryWord want = p ? W("00110") : W("00111");
        return result("long prefix", replay(c1) && c2.w == want && c2.u == unit_suffix(5) && rejected);
    });
    f.emplace_back("two runs", [](bool p) {
        bool ok = replay(check_two_runs(1, 1, 1, W("1"))) && replay(check_two_runs(0, 3, 2, W("01")));
        for (unsigned j = 1; ok && j <= 6; ++j)
            for (unsigned k = 1; ok && k <= 6; ++k)
                for (int a = 0; ok && a < 2; ++a) ok = replay(check_two_runs(a, j, k, unit_suffix(k)));
        if (p) ok = ok && check_two_runs(1, 1, 1, W("1")).w == W("01");
        return result("two runs", ok);
    });
    f.emplace_back("classify examples", [](bool p) {
        const bool ok = classify(W("11")).verdict == Verdict::ProvedP &&
                        classify(W("11111")).verdict == (p ? Verdict::ProvedP : Verdict::ProvedNotP) &&
                        classify(W("011")).verdict == Verdict::ProvedP && classify(W("111")).verdict == Verdict::ProvedNotP;
        return result("classify examples", ok);
    });
    return f;
}

}  // namespace

std::vector<std::string> reference_fixture_names() {
    std::vector<std::string> names;
    for (const auto& [n, _] : fixtures()) names.push_back(n);
    return names;
}

std::vector<FixtureResult> run_reference_suite(const std::optional<std::string>& mutate) {
    std::vector<FixtureResult> out;
    bool matched = !mutate;
    for (const auto& [name, check] : fixtures()) {
        const bool p = mutate && *mutate == name;
        matched = matched || p;
        try {
            out.push_back(check(p));
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("threw: ") + e.what()});
        }
    }
    if (!matched) throw ParseError("no fixture named '" + *mutate + "'");
    return out;
}

int cmd_verify(const std::string& suite, const std::optional<std::string>& mutate, std::ostream& out) {
    if (suite != "paper") throw ParseError("unknown suite '" + suite + "' (only 'paper')");
    const auto results = run_reference_suite(mutate);
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed && !r.detail.empty()) out << "  [" << r.detail << "]";
        out << '\n';
        failed += !r.passed;
    }
    out << results.size() - failed << '/' << results.size() << " fixtures passed\n";
    return failed ? kVerifyFailed : kOk;
}

}  // namespace subword::cli
