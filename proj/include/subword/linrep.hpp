#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subword/dynamics.hpp"

namespace subword {

/// Integer vector indexed by orbit position: a state vector v(w,u)(n) (entries
/// +-1), a partial-sum vector V(w,u)(N), or the constant c(w,u).
using SumVector = std::vector<std::int64_t>;

/// Row-major dense integer matrix, used only for dumps and for the dense
/// spectral routines.
struct DenseIntMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> data;

    std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;
};

/// A matrix with exactly one nonzero entry, +1 or -1, in every row and column.
/// Row i holds sign(i) in column column(i).
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws ArityError unless `perm` is a permutation of 0..n-1 and signs are +-1.
    SignedPermutation(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs);

    std::size_t size() const noexcept { return perm_.size(); }
    std::uint32_t column(std::size_t row) const { return perm_[row]; }
    int sign(std::size_t row) const { return signs_[row]; }
    std::span<const std::uint32_t> permutation() const noexcept { return perm_; }

    /// y = P x, i.e. y[i] = sign(i) * x[column(i)].
    SumVector apply(std::span<const std::int64_t> x) const;
    std::vector<double> apply(std::span<const double> x) const;

    DenseIntMatrix dense() const;

private:
    std::vector<std::uint32_t> perm_;
    std::vector<std::int8_t> signs_;
};

/// M_0(w,u) and M_1(w,u); their sum is M(w,u).
struct MatrixPair {
    SignedPermutation m0;
    SignedPermutation m1;

    const SignedPermutation& operator[](int a) const { return a ? m1 : m0; }
    std::size_t size() const noexcept { return m0.size(); }
};

/// M_a[u', u''] = (-1)^{T_a(w)(u')} when S_a(w)(u') = u''.
MatrixPair build_matrices(const OrbitTable& orbit);

/// M = M_0 + M_1 as a dense integer matrix.
DenseIntMatrix dense_sum(const MatrixPair& m);

/// Entry u' is (-1)^{[w;u'](n)}.
SumVector state_vector(const OrbitTable& orbit, std::uint64_t n);

/// c(w,u) = (I - M) v(0) + v(1).
SumVector constant_c(const OrbitTable& orbit);

inline constexpr std::uint64_t kDefaultDirectSumLimit = std::uint64_t{1} << 26;

/// V(w,u)(N) = sum of v(n) for n = 0..N, by plain summation. Entry 0 (the
/// base word) is the scalar partial sum for that bracket; for base 0^{l-1}1
/// it is sum_{n <= N} (-1)^{s_w(n)}. Throws CapacityError when N > limit.
SumVector partial_sum_direct(const OrbitTable& orbit, std::uint64_t N, std::uint64_t limit = kDefaultDirectSumLimit);

/// V(w,u)(N) in O(|orbit| log N) from the doubling recurrence. Precomputes
/// the matrices and base vectors once; evaluation is const and thread-safe.
///
///   V(2K+1) = M V(K) + c                     (K >= 0)
///   V(2K)   = M V(K) + c - M_1 v(K)          (K >= 1), since V(2K) = V(2K+1) - v(2K+1)
///   v(2K+i) = M_i v(K)                       (K >= 1)
///
/// V(0), V(1), V(2) are tabulated directly. All arithmetic is checked and
/// throws OverflowError rather than wrapping.
class PartialSumEvaluator {
public:
    explicit PartialSumEvaluator(const OrbitTable& orbit);

    SumVector operator()(std::uint64_t N) const;
    /// Entry 0 of V(N).
    std::int64_t base_sum(std::uint64_t N) const { return (*this)(N)[0]; }

    const MatrixPair& matrices() const noexcept { return m_; }
    const SumVector& c() const noexcept { return c_; }
    const SumVector& v0() const noexcept { return v0_; }
    const SumVector& v1() const noexcept { return v1_; }

private:
    MatrixPair m_;
    SumVector v0_, v1_, c_;
    SumVector small_[3];  // V(0), V(1), V(2)
};

SumVector partial_sum_fast(const OrbitTable& orbit, std::uint64_t N);

/// "[r0c0 r0c1 ...]" rows, one per line, in orbit order.
std::string dump_matrix(const DenseIntMatrix& m);
/// "(x0, x1, ...)".
std::string dump_vector(std::span<const std::int64_t> v);

/// Sample points in [1, N]: every 2^i - 1, about `per_octave` points per
/// doubling, and N itself. Ascending, no duplicates.
std::vector<std::uint64_t> geometric_samples(std::uint64_t N, unsigned per_octave = 8);
/// 0, step, 2 step, ... and N.
std::vector<std::uint64_t> arithmetic_samples(std::uint64_t N, std::uint64_t step);

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);

}  // namespace subword
