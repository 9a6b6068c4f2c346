#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/dynamics.hpp"
#include "subword/linrep.hpp"
#include "subword/spectra.hpp"

namespace subword {

enum class CertificateKind { Search, Simple, OneRun, LongPrefix, TwoRuns };

std::string to_string(CertificateKind kind);

/// Witness for the cycle-parity sufficient condition on a pair (w, u):
///   S_a(w)(u) = u and T_a(w)(u) = 0, and the S_b(w)-cycle through cycle_rep
///   (an element of the orbit of u) carries an odd number of -1 entries of M_b.
/// Then M has no eigenvalue of modulus 2 and (w, u) has Property Q.
///
/// The -1 entries of M_b on a cycle are the cycle words with first letter 1
/// when b is the first letter of w, and there are none otherwise, so a valid
/// certificate always has b = w_1.
struct Certificate {
    BinaryWord w;
    BinaryWord u;
    int a = 0;
    int b = 0;
    BinaryWord cycle_rep;
    CertificateKind kind = CertificateKind::Search;
};

/// Re-checks all three conditions against the dynamics.
bool replay(const Certificate& cert);

/// First certificate in the order a = 0,1; b = 0,1; cycles by smallest orbit position.
std::optional<Certificate> find_certificate(const BinaryWord& w, const BinaryWord& u);

/// The pair (a^k w abar a^{j-1}, 0^{k-1} 1 0^{|w|+j-1} 1) for k > 1 a power of
/// two and 1 < j <= k: builds it, checks that abar fixes u' with sign 0, that
/// the S_a-cycle through u' has odd sign parity and the length of the cycle of
/// 0^{k-1}1 under S_a(a^k). Throws DomainError on bad parameters.
Certificate check_simple_family(int a, const BinaryWord& w, unsigned k, unsigned j);

enum class OneRunVerdict { ProvedP, ProvedNotP };

struct EmpiricalPoint {
    unsigned exponent;  // N = 2^exponent - 1
    std::int64_t sum;
    double ratio;  // |S_N| / 2^exponent
};

struct OneRunOptions {
    unsigned min_exponent = 10;
    unsigned max_exponent = 22;
};

struct OneRunResult {
    OneRunVerdict verdict = OneRunVerdict::ProvedP;
    std::optional<Certificate> certificate;
    /// +-1 eigenvector of M_a(a^l) for eigenvalue 1, by orbit position (failure direction only).
    std::vector<int> eigenvector;
    std::int64_t inner_product = 0;  // <v(w)(1), x>
    std::vector<EmpiricalPoint> samples;
    /// min of the first three ratios; heuristic, not a proved constant.
    double delta = 0.0;
    /// every sampled ratio lies within a factor 2 of delta
    bool empirical_stable = false;
};

/// a^l has Property P iff l is a power of two. For the failure direction this
/// builds the +-1 eigenvector x of M_a with eigenvalue 1 by the sign-prefix rule
/// along the single S_a-cycle, verifies M_a x = x, M_abar = I and
/// <v(1), x> != 0, and samples |S_{2^n - 1}| / 2^n.
OneRunResult check_one_run(int a, unsigned length, const OneRunOptions& options = {});

/// The pair (a^k abar w, 0^{k+1} u), given k a power of two, a^k not a factor
/// of w, u != 0^{|w|}, S_b(w)(u) = u and T_b(w)(u) = 0. Throws DomainError
/// naming the first failed hypothesis.
Certificate check_long_prefix(int a, unsigned k, const BinaryWord& w, int b, const BinaryWord& u);

/// Same with u = 0^{|w|-1}1 and b the complement of the last letter of w, so
/// that the certified pair is (a^k abar w, 0^{k+|w|}1) and Property P follows.
Certificate check_long_prefix(int a, unsigned k, const BinaryWord& w);

/// The pair (a^j abar^k, 0^j u), u != 0^k: a fixes 0^j u with sign 0, and the
/// orbit contains a word with prefix 1 0^{j-1}, which S_a fixes with sign 1.
Certificate check_two_runs(int a, unsigned j, unsigned k, const BinaryWord& u);

enum class Verdict { ProvedP, ProvedNotP, SpectralObstruction, Inconclusive };

std::string to_string(Verdict v);

struct FamilyMatch {
    std::string theorem;
    std::string parameters;
    std::string outcome;
};

struct EmpiricalGrowth {
    double slope = 0.0;            // log-log slope of the running max of |S_n|
    double max_ratio_sqrt = 0.0;   // max |S_n| / sqrt(n) over the samples
    std::size_t samples = 0;
};

/// Samples n geometrically in [2^lo, 2^hi] (with every 2^i - 1 included) and
/// regresses log(max_{m <= n sampled} |S_m|) on log n, S being entry 0 of V(n).
EmpiricalGrowth empirical_growth(const PartialSumEvaluator& eval, unsigned lo, unsigned hi, unsigned per_octave = 8);

struct ClassifyOptions {
    unsigned max_word_length = 20;
    std::size_t dense_limit = kDefaultDenseLimit;
    std::size_t det_limit = kDefaultDetLimit;
    double gelfand_tol = kDefaultGelfandTol;
    unsigned empirical_lo = 10;
    unsigned empirical_hi = 22;
};

struct AnalysisReport {
    BinaryWord word;
    BinaryWord u;
    std::size_t orbit_size = 0;
    std::vector<std::size_t> cycle_lengths[2];
    std::optional<Certificate> certificate;
    std::optional<boost::multiprecision::cpp_int> det_two_minus_m;
    SpectralVerdict spectrum;
    std::optional<double> exponent_certified;
    std::optional<double> exponent_empirical;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<FamilyMatch> family_matches;
    std::vector<std::string> warnings;
    std::vector<std::string> consistency_violations;
};

/// Full analysis of (w, u), u defaulting to 0^{l-1}1.
///
/// PROVED_P when some theorem applies, including the absence of modulus-2
/// eigenvalues; PROVED_NOT_P only for a^l with l not a
/// power of two; SPECTRAL_OBSTRUCTION when M has a modulus-2 eigenvalue
/// otherwise (this does not refute Property P). For a base other than
/// 0^{l-1}1, PROVED_P refers to Property Q of the pair.
AnalysisReport classify(const BinaryWord& w, const std::optional<BinaryWord>& u = std::nullopt,
                        const ClassifyOptions& options = {});

}  // namespace subword
