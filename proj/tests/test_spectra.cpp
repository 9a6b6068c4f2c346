#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subword/spectra.hpp"

using namespace subword;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }

MatrixPair pair_of(const BinaryWord& w, const BinaryWord& u) { return build_matrices(OrbitTable(w, u)); }

std::vector<std::vector<long long>> two_minus(const DenseIntMatrix& m) {
    std::vector<std::vector<long long>> r(m.n, std::vector<long long>(m.n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) r[i][j] = (i == j ? 2 : 0) - m(i, j);
    return r;
}
}  // namespace

TEST_CASE("modulus-two examples") {
    auto det = [](const char* w, const char* u) {
        const MatrixPair m = pair_of(W(w), W(u));
        return detect_modulus_two(m.m0, m.m1);
    };
    CHECK_FALSE(det("011", "001").present);
    CHECK_FALSE(det("11", "01").present);
    const ModulusTwoResult r = det("111", "001");
    CHECK(r.present);
    CHECK(r.has_eigenvalue_two());
    REQUIRE(r.witness.has_value());
    CHECK(verify_phase_witness(pair_of(W("111"), W("001")), r.root_order, r.phases.front(), *r.witness));
}

TEST_CASE("phase decider agrees with numerical eigenvalues, witnesses verify") {
    std::mt19937_64 rng(1);
    for (unsigned l = 1; l <= 7; ++l)
        for (std::uint64_t wb = 0; wb < (1u << l); ++wb)
            for (int variant = 0; variant < 2; ++variant) {
                const BinaryWord w = BinaryWord::from_bits(wb, l);
                const BinaryWord u = variant ? BinaryWord::from_bits(rng() & w.full_mask(), l) : unit_suffix(l);
                const MatrixPair m = pair_of(w, u);
                const ModulusTwoResult r = detect_modulus_two(m.m0, m.m1);
                const auto mags = eigenvalue_magnitudes(dense_sum(m));
                const bool numeric = !mags.empty() && mags.back() > 2 - 1e-6;
                REQUIRE(r.present == numeric);
                REQUIRE(r.present == !r.phases.empty());
                if (r.present) {
                    REQUIRE(r.witness.has_value());
                    REQUIRE(verify_phase_witness(m, r.root_order, r.phases.front(), *r.witness));
                }
            }
}

TEST_CASE("Bareiss determinant equals cofactor expansion") {
    for (unsigned l = 1; l <= 8; ++l)
        for (std::uint64_t wb = 0; wb < (1u << l); ++wb) {
            const BinaryWord w = BinaryWord::from_bits(wb, l);
            for (const BinaryWord& u : {unit_suffix(l), complement(w)}) {
                const MatrixPair m = pair_of(w, u);
                if (m.size() > 8) continue;
                const DenseIntMatrix d = dense_sum(m);
                const long long want = oracle::det(two_minus(d));
                REQUIRE(det_two_minus(d) == want);
                const ModulusTwoResult r = detect_modulus_two(m.m0, m.m1);
                REQUIRE((want == 0) == r.has_eigenvalue_two());
                REQUIRE(eigenvalue_two_by_determinant(d) == (want == 0));
            }
        }
    const MatrixPair big = pair_of(W("0110110110"), unit_suffix(10));
    CHECK_THROWS_AS(det_two_minus(dense_sum(big), 4), CapacityError);
}

TEST_CASE("sign cycles") {
    const SignedPermutation cyc({1, 2, 3, 0}, {1, 1, -1, 1});
    CHECK_FALSE(sign_cycle_eigenvalue_one(cyc).all_even);
    const SignedPermutation even({1, 0, 2}, {-1, -1, 1});
    const SignCycleReport r = sign_cycle_eigenvalue_one(even);
    CHECK(r.all_even);
    CHECK(r.cycles.size() == 2);
    const OrbitTable o(W("1111"), W("0001"));
    const SignCycleReport m1 = sign_cycle_eigenvalue_one(build_matrices(o).m1);
    CHECK_FALSE(m1.cycles.front().even());
}

TEST_CASE("spectral radius") {
    const MatrixPair m = pair_of(W("011"), W("001"));
    const RadiusEstimate r = spectral_radius_estimate(dense_sum(m));
    CHECK(r.converged);
    CHECK(std::abs(r.estimate - std::sqrt(2.0)) <= 1e-4);
    const SpectralVerdict v = analyze_spectrum(m);
    CHECK(std::abs(growth_exponent(v) - 0.5) <= 1e-3);
    CHECK(std::abs(growth_exponent(analyze_spectrum(pair_of(W("01"), W("01")))) - 0.5) <= 1e-3);

    // against Eigen on random small words, away from defective cases
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        const unsigned l = 2 + rng() % 7;
        const BinaryWord w = BinaryWord::from_bits(rng() & BinaryWord::mask_for(l), l);
        const DenseIntMatrix d = dense_sum(pair_of(w, unit_suffix(l)));
        const double want = eigenvalue_magnitudes(d).back();
        const RadiusEstimate e = spectral_radius_estimate(d);
        REQUIRE(e.estimate <= 2 + 1e-9);
        REQUIRE(std::abs(e.estimate - want) <= 2e-2);
    }
}

TEST_CASE("sparse estimate tracks the dense one") {
    for (const char* w : {"011", "0110", "1011", "001011", "111"}) {
        const BinaryWord bw = W(w);
        const MatrixPair m = pair_of(bw, unit_suffix(bw.length()));
        const double dense = spectral_radius_estimate(dense_sum(m)).estimate;
        const RadiusEstimate sparse = spectral_radius_sparse(m);
        CHECK(std::abs(sparse.estimate - dense) <= 5e-2);
    }
    SpectraOptions o;
    o.dense_limit = 2;
    const SpectralVerdict v = analyze_spectrum(pair_of(W("011"), W("001")), o);
    CHECK(std::abs(v.radius_estimate - std::sqrt(2.0)) <= 5e-2);
}
