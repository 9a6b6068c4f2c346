#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/linrep.hpp"

namespace subword {

inline constexpr std::size_t kDefaultDenseLimit = 4096;
inline constexpr std::size_t kDefaultDetLimit = 256;
inline constexpr double kDefaultGelfandTol = 1e-4;
inline constexpr int kGelfandMaxSquarings = 60;

/// Outcome of the exact search for eigenvalues of modulus 2 of M = M_0 + M_1.
///
/// Such an eigenvalue is lambda = 2 * mu with M_0 x = M_1 x = mu x for a
/// vector x with no zero entry. Every cycle length is a power of two, so mu
/// is a power of omega = exp(2 pi i / root_order). Each solution exponent q
/// gives lambda = 2 omega^q. The witness stores x for the smallest q as
/// exponents: x[i] = omega^{witness[i]}.
struct ModulusTwoResult {
    bool present = false;
    std::uint64_t root_order = 2;
    std::vector<std::uint64_t> phases;
    std::optional<std::vector<std::uint64_t>> witness;

    bool has_eigenvalue_two() const;
};

/// Exact decision by phase propagation over the orbit graph. `m0`, `m1` must
/// come from one orbit (connected from position 0 by forward edges).
ModulusTwoResult detect_modulus_two(const SignedPermutation& m0, const SignedPermutation& m1);

/// Checks M_a x = omega^q x exactly, in exponent arithmetic mod root_order.
bool verify_phase_witness(const MatrixPair& m, std::uint64_t root_order, std::uint64_t q,
                          const std::vector<std::uint64_t>& witness);

/// det(2I - M) by fraction-free (Bareiss) elimination over the integers.
/// Throws CapacityError above `limit`.
boost::multiprecision::cpp_int det_two_minus(const DenseIntMatrix& m, std::size_t limit = kDefaultDetLimit);

/// det(2I - M) == 0. When some letter a fixes the base word with sign bit 0
/// (always true for base 0^{l-1}1) this is equivalent to a modulus-2 eigenvalue.
bool eigenvalue_two_by_determinant(const DenseIntMatrix& m, std::size_t limit = kDefaultDetLimit);

struct CycleParity {
    std::uint32_t start;
    std::size_t length;
    std::size_t minus_ones;
    bool even() const noexcept { return minus_ones % 2 == 0; }
};

struct SignCycleReport {
    std::vector<CycleParity> cycles;
    /// Every cycle has an even number of -1 entries, equivalently M has an
    /// eigenvector with eigenvalue 1 and no zero entry.
    bool all_even = true;
};

SignCycleReport sign_cycle_eigenvalue_one(const SignedPermutation& m);

struct RadiusEstimate {
    double estimate = 0.0;
    /// Change between the last two estimates; an estimate of the remaining error.
    double tolerance = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// rho(M) from Gelfand's formula on repeated squares, ||M^{2^k}||^{1/2^k} in
/// the max-row-sum norm, renormalizing every square. The norm bound
/// ||M||_inf <= 2 keeps every estimate <= 2 for matrices built from two
/// signed permutations.
RadiusEstimate spectral_radius_estimate(const DenseIntMatrix& m, double tol = kDefaultGelfandTol,
                                        int max_squarings = kGelfandMaxSquarings);

/// Sparse fallback above the dense limit: growth rate of ||M^k x|| for a fixed
/// pseudo-random x, with k doubling until successive rates agree within tol
/// or the work budget runs out.
RadiusEstimate spectral_radius_sparse(const MatrixPair& m, double tol = kDefaultGelfandTol,
                                      std::uint64_t work_budget = std::uint64_t{1} << 28);

/// |eigenvalues| of a small dense matrix, ascending.
std::vector<double> eigenvalue_magnitudes(const DenseIntMatrix& m);

struct SpectralVerdict {
    bool has_modulus_two = false;
    std::uint64_t root_order = 2;
    std::vector<std::uint64_t> phase_exponents;
    std::optional<std::vector<std::uint64_t>> witness;
    double radius_estimate = 0.0;
    double radius_tolerance = 0.0;
    bool radius_converged = false;
};

struct SpectraOptions {
    std::size_t dense_limit = kDefaultDenseLimit;
    double gelfand_tol = kDefaultGelfandTol;
};

SpectralVerdict analyze_spectrum(const MatrixPair& m, const SpectraOptions& options = {});

/// log2 of the radius estimate. When no modulus-2 eigenvalue exists, every
/// exponent above this one bounds ||V(N)|| = O(N^exponent).
double growth_exponent(const SpectralVerdict& verdict);

}  // namespace subword
