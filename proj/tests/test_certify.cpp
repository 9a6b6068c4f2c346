#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subword/certify.hpp"

using namespace subword;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }
BinaryWord run_of(int a, unsigned n) { return a ? BinaryWord::ones(n) : BinaryWord::zeros(n); }

std::string domain_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("find_certificate examples") {
    CHECK(find_certificate(W("011"), W("001")).has_value());
    CHECK_FALSE(find_certificate(W("111"), W("001")).has_value());
    CHECK(find_certificate(W("11"), W("01")).has_value());
}

TEST_CASE("first-letter parity alone is not a sound witness") {
    // w = 01, letter 1: some S_1-cycle has an odd number of words starting
    // with 1 but M_1 carries no -1 at all
    bool odd_first = false;
    for (std::uint64_t ub = 0; ub < 4; ++ub) {
        const BinaryWord u = BinaryWord::from_bits(ub, 2);
        odd_first = odd_first || cycle_first_letter_parity(W("01"), 1, u) == 1;
        CHECK(cycle_sign_parity(W("01"), 1, u) == 0);
    }
    CHECK(odd_first);
}

TEST_CASE("certificates replay and never coexist with a modulus-2 eigenvalue") {
    for (unsigned l = 2; l <= 8; ++l)
        for (std::uint64_t wb = 0; wb < (1u << l); ++wb) {
            const BinaryWord w = BinaryWord::from_bits(wb, l);
            const auto c = find_certificate(w, unit_suffix(l));
            if (!c) continue;
            REQUIRE(replay(*c));
            REQUIRE(c->b == w.first());
            const MatrixPair m = build_matrices(OrbitTable(w, unit_suffix(l)));
            REQUIRE_FALSE(detect_modulus_two(m.m0, m.m1).present);
        }
}

TEST_CASE("replay rejects tampered certificates") {
    Certificate c = *find_certificate(W("011"), W("001"));
    Certificate bad = c;
    bad.a ^= 1;
    CHECK_FALSE(replay(bad));
    bad = c;
    bad.b ^= 1;
    CHECK_FALSE(replay(bad));
    bad = c;
    bad.cycle_rep = W("000");
    CHECK_FALSE(replay(bad));
}

TEST_CASE("simple family") {
    const Certificate c = check_simple_family(1, W("0"), 2, 2);
    CHECK(c.a == 0);
    CHECK(c.w == W("11001"));
    CHECK(c.u == W("01001"));
    CHECK(replay(check_simple_family(0, BinaryWord{}, 4, 3)));
    for (int a = 0; a < 2; ++a)
        for (unsigned k : {2u, 4u, 8u})
            for (unsigned j = 2; j <= k; ++j)
                for (unsigned lw = 0; lw <= 3; ++lw)
                    for (std::uint64_t b = 0; b < (1u << lw); ++b) {
                        const Certificate s = check_simple_family(a, BinaryWord::from_bits(b, lw), k, j);
                        REQUIRE(replay(s));
                        REQUIRE(cycle_length(s.w, a, s.u) == oracle::cycle_length(std::string(k, char('0' + a)), char('0' + a),
                                                                                   oracle::zeros_one(k)));
                    }
    CHECK_THROWS_AS(check_simple_family(0, W("1"), 3, 2), DomainError);
    CHECK_THROWS_AS(check_simple_family(0, W("1"), 1, 1), DomainError);
    CHECK_THROWS_AS(check_simple_family(0, W("1"), 4, 1), DomainError);
    CHECK_THROWS_AS(check_simple_family(0, W("1"), 2, 3), DomainError);
    CHECK_THROWS_AS(check_simple_family(0, BinaryWord::zeros(60), 2, 2), DomainError);
}

TEST_CASE("one-run characterization") {
    for (unsigned l = 2; l <= 12; ++l)
        for (int a = 0; a < 2; ++a) {
            const OneRunResult r = check_one_run(a, l, {10, 12});
            REQUIRE((r.verdict == OneRunVerdict::ProvedP) == oracle::is_pow2(l));
            if (r.verdict == OneRunVerdict::ProvedP) {
                REQUIRE(r.certificate.has_value());
                REQUIRE(replay(*r.certificate));
                continue;
            }
            // independent check of M_a x = x: x(u) = sign * x(S_a u)
            const OrbitTable o(run_of(a, l), unit_suffix(l));
            REQUIRE(r.eigenvector.size() == o.size());
            for (std::size_t i = 0; i < o.size(); ++i) {
                REQUIRE((r.eigenvector[i] == 1 || r.eigenvector[i] == -1));
                const int s = o.sign(a, i) ? -1 : 1;
                REQUIRE(r.eigenvector[i] == s * r.eigenvector[o.succ(a, i)]);
            }
            REQUIRE(r.inner_product != 0);
        }
    CHECK_THROWS_AS(check_one_run(1, 1), DomainError);
    CHECK_THROWS_AS(check_one_run(1, 21), DomainError);
}

TEST_CASE("one-run failure grows linearly along 2^n - 1") {
    const OneRunResult r = check_one_run(1, 3);
    CHECK(r.delta > 0);
    CHECK(r.empirical_stable);
    CHECK(r.samples.size() == 13);
    for (const auto& p : r.samples) CHECK(p.ratio >= r.delta / 2);
}

TEST_CASE("long prefix") {
    const Certificate c = check_long_prefix(1, 2, W("010"), 1, W("101"));
    CHECK(c.w == W("110010"));
    CHECK(replay(c));
    const Certificate d = check_long_prefix(0, 2, W("11"));
    CHECK(d.w == W("00111"));
    CHECK(d.u == W("00001"));
    CHECK(replay(d));
    CHECK(domain_message([] { check_long_prefix(1, 2, W("110"), 0, W("001")); }) == "a^k must not be a factor of w");
    CHECK(domain_message([] { check_long_prefix(1, 3, W("010"), 1, W("101")); }) == "k must be a power of 2");
    CHECK(domain_message([] { check_long_prefix(1, 2, W("010"), 1, W("000")); }) == "u must differ from 0^|w|");
    CHECK(domain_message([] { check_long_prefix(1, 2, W("010"), 1, W("10")); }) == "|u| must equal |w|");
    CHECK(domain_message([] { check_long_prefix(1, 2, W("010"), 0, W("101")); }).find("S_b(w)") == 0);
}

TEST_CASE("long prefix on random valid tuples") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 200) {
        const int a = static_cast<int>(rng() % 2);
        const unsigned k = 1u << (rng() % 3);
        const unsigned l = 1 + rng() % 8;
        const BinaryWord w = BinaryWord::from_bits(rng() & BinaryWord::mask_for(l), l);
        const BinaryWord u = BinaryWord::from_bits(rng() & BinaryWord::mask_for(l), l);
        const int b = static_cast<int>(rng() % 2);
        if (contains_factor(w, run_of(a, k)) || u.bits() == 0 || step(w, b, u) != StepResult{0, u}) {
            CHECK_THROWS_AS(check_long_prefix(a, k, w, b, u), DomainError);
            continue;
        }
        REQUIRE(replay(check_long_prefix(a, k, w, b, u)));
        ++done;
    }
}

TEST_CASE("two runs") {
    CHECK(check_two_runs(1, 1, 1, W("1")).w == W("10"));
    CHECK(replay(check_two_runs(0, 3, 2, W("01"))));
    for (int a = 0; a < 2; ++a)
        for (unsigned j = 1; j <= 6; ++j)
            for (unsigned k = 1; k <= 6; ++k)
                for (std::uint64_t ub = 1; ub < (1u << k); ++ub) {
                    const Certificate c = check_two_runs(a, j, k, BinaryWord::from_bits(ub, k));
                    REQUIRE(replay(c));
                    REQUIRE(step(c.w, a, c.cycle_rep) == StepResult{1, c.cycle_rep});
                }
    CHECK_THROWS_AS(check_two_runs(0, 0, 2, W("01")), DomainError);
    CHECK_THROWS_AS(check_two_runs(0, 2, 2, W("00")), DomainError);
    CHECK_THROWS_AS(check_two_runs(0, 2, 2, W("001")), DomainError);
    CHECK_THROWS_AS(check_two_runs(0, 15, 6, W("000001")), DomainError);
}

TEST_CASE("classify examples") {
    CHECK(classify(W("11")).verdict == Verdict::ProvedP);
    CHECK(classify(W("11111")).verdict == Verdict::ProvedNotP);
    const AnalysisReport r = classify(W("0110"));
    CHECK(r.consistency_violations.empty());
    const AnalysisReport q = classify(W("011"));
    CHECK(q.verdict == Verdict::ProvedP);
    CHECK(std::abs(q.spectrum.radius_estimate - std::sqrt(2.0)) < 1e-4);
    REQUIRE(q.exponent_certified.has_value());
    CHECK(q.det_two_minus_m == 8);
    CHECK_THROWS_AS(classify(W("1")), ArityError);
    ClassifyOptions small;
    small.max_word_length = 4;
    CHECK_THROWS_AS(classify(W("01010"), std::nullopt, small), CapacityError);
}

TEST_CASE("family coverage up to length 8") {
    for (unsigned l = 2; l <= 8; ++l)
        for (std::uint64_t wb = 0; wb < (1u << l); ++wb) {
            const BinaryWord w = BinaryWord::from_bits(wb, l);
            const AnalysisReport r = classify(w, std::nullopt, {8, 4096, 256, 1e-4, 6, 8});
            REQUIRE(r.consistency_violations.empty());
            const auto runs = run_decomposition(w);
            if (runs.size() == 1) {
                REQUIRE(r.verdict == (oracle::is_pow2(l) ? Verdict::ProvedP : Verdict::ProvedNotP));
                REQUIRE(r.family_matches.front().theorem == "one-run");
            } else if (runs.size() == 2) {
                REQUIRE(r.verdict == Verdict::ProvedP);
                REQUIRE(r.family_matches.front().theorem == "two-runs");
            }
            if (!r.family_matches.empty() && r.verdict == Verdict::ProvedP) REQUIRE_FALSE(r.spectrum.has_modulus_two);
            if (r.verdict == Verdict::SpectralObstruction) REQUIRE(r.spectrum.has_modulus_two);
        }
}

TEST_CASE("non-default base and the simple family matcher") {
    const AnalysisReport r = classify(W("11001"), W("01001"));
    bool simple = false;
    for (const auto& f : r.family_matches) simple = simple || f.theorem == "simple";
    CHECK(simple);
    CHECK(r.verdict == Verdict::ProvedP);
    CHECK_THROWS_AS(classify(W("011"), W("01")), ArityError);
}

TEST_CASE("empirical growth of 01 and 011") {
    for (const char* w : {"01", "011"}) {
        const BinaryWord bw = W(w);
        const EmpiricalGrowth g = empirical_growth(PartialSumEvaluator(OrbitTable(bw, unit_suffix(bw.length()))), 10, 18);
        CHECK(g.slope > 0.35);
        CHECK(g.slope < 0.6);
        CHECK(g.max_ratio_sqrt <= 10);
    }
}
