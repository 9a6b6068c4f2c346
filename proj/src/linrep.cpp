#include "subword/linrep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "subword/counting.hpp"

namespace subword {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("64-bit overflow in partial-sum arithmetic");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("64-bit overflow in partial-sum arithmetic");
    return r;
}

SignedPermutation::SignedPermutation(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw ArityError("permutation and sign vector differ in size");
    std::vector<bool> hit(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (perm_[i] >= perm_.size() || hit[perm_[i]]) throw ArityError("not a permutation");
        hit[perm_[i]] = true;
        if (signs_[i] != 1 && signs_[i] != -1) throw ArityError("signs must be +1 or -1");
    }
}

SumVector SignedPermutation::apply(std::span<const std::int64_t> x) const {
    SumVector y(size());
    for (std::size_t i = 0; i < size(); ++i) y[i] = signs_[i] < 0 ? -x[perm_[i]] : x[perm_[i]];
    return y;
}

std::vector<double> SignedPermutation::apply(std::span<const double> x) const {
    std::vector<double> y(size());
    for (std::size_t i = 0; i < size(); ++i) y[i] = signs_[i] * x[perm_[i]];
    return y;
}

DenseIntMatrix SignedPermutation::dense() const {
    DenseIntMatrix d{size(), std::vector<std::int64_t>(size() * size(), 0)};
    for (std::size_t i = 0; i < size(); ++i) d(i, perm_[i]) = signs_[i];
    return d;
}

MatrixPair build_matrices(const OrbitTable& orbit) {
    auto make = [&](int a) {
        std::vector<std::uint32_t> perm(orbit.successors(a).begin(), orbit.successors(a).end());
        std::vector<std::int8_t> signs(orbit.size());
        for (std::size_t i = 0; i < orbit.size(); ++i) signs[i] = orbit.sign(a, i) ? -1 : 1;
        return SignedPermutation(std::move(perm), std::move(signs));
    };
    return {make(0), make(1)};
}

DenseIntMatrix dense_sum(const MatrixPair& m) {
    DenseIntMatrix d = m.m0.dense();
    for (std::size_t i = 0; i < m.size(); ++i) d(i, m.m1.column(i)) += m.m1.sign(i);
    return d;
}

SumVector state_vector(const OrbitTable& orbit, std::uint64_t n) {
    const std::uint64_t p = prefix_parities(orbit.word(), n).bits();
    SumVector v(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) v[i] = (std::popcount(p & orbit.element(i).bits()) & 1) ? -1 : 1;
    return v;
}

namespace {

SumVector add(const SumVector& x, const SumVector& y) {
    SumVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], y[i]);
    return r;
}

SumVector sub(const SumVector& x, const SumVector& y) {
    SumVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_sub(x[i], y[i]);
    return r;
}

SumVector mul_sum(const MatrixPair& m, const SumVector& x) { return add(m.m0.apply(x), m.m1.apply(x)); }

}  // namespace

SumVector constant_c(const OrbitTable& orbit) {
    const MatrixPair m = build_matrices(orbit);
    const SumVector v0 = state_vector(orbit, 0);
    const SumVector v1 = state_vector(orbit, 1);
    return add(sub(v0, mul_sum(m, v0)), v1);
}

SumVector partial_sum_direct(const OrbitTable& orbit, std::uint64_t N, std::uint64_t limit) {
    if (N > limit)
        throw CapacityError("direct summation to N = " + std::to_string(N) + " exceeds the limit " + std::to_string(limit));
    SumVector V(orbit.size(), 0);
    for (std::uint64_t n = 0;; ++n) {
        const SumVector v = state_vector(orbit, n);
        for (std::size_t i = 0; i < V.size(); ++i) V[i] += v[i];
        if (n == N) break;
    }
    return V;
}

PartialSumEvaluator::PartialSumEvaluator(const OrbitTable& orbit)
    : m_(build_matrices(orbit)), v0_(state_vector(orbit, 0)), v1_(state_vector(orbit, 1)) {
    c_ = add(sub(v0_, mul_sum(m_, v0_)), v1_);
    small_[0] = v0_;
    small_[1] = add(v0_, v1_);
    small_[2] = add(small_[1], state_vector(orbit, 2));
}

SumVector PartialSumEvaluator::operator()(std::uint64_t N) const {
    if (N <= 2) return small_[N];
    // Peel N down to K <= 2 along its binary expansion, then climb back up,
    // carrying v(K) alongside V(K).
    const unsigned levels = static_cast<unsigned>(std::bit_width(N)) - 2;  // N >> levels is 2 or 3
    const std::uint64_t K = N >> levels;
    SumVector V;
    SumVector v;
    if (K == 2) {
        V = small_[2];
        v = m_.m0.apply(v1_);  // v(2) = M_0 v(1)
    } else {
        // K == 3: V(3) = M V(1) + c, v(3) = M_1 v(1)
        V = add(mul_sum(m_, small_[1]), c_);
        v = m_.m1.apply(v1_);
    }
    for (unsigned level = levels; level-- > 0;) {
        const int bit = static_cast<int>((N >> level) & 1u);
        SumVector next = add(mul_sum(m_, V), c_);  // V(2K+1)
        if (bit == 0) next = sub(next, m_.m1.apply(v));
        V = std::move(next);
        v = m_[bit].apply(v);
    }
    return V;
}

SumVector partial_sum_fast(const OrbitTable& orbit, std::uint64_t N) { return PartialSumEvaluator(orbit)(N); }

std::string dump_matrix(const DenseIntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

std::string dump_vector(std::span<const std::int64_t> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<std::uint64_t> geometric_samples(std::uint64_t N, unsigned per_octave) {
    if (per_octave == 0) per_octave = 1;
    std::vector<std::uint64_t> out;
    for (unsigned i = 0; i < 64; ++i) {
        const std::uint64_t p = std::uint64_t{1} << i;
        if (p - 1 > N) break;
        if (p > 1) out.push_back(p - 1);
        for (unsigned f = 0; f < per_octave; ++f) {
            const long double x = std::ldexp(std::exp2(static_cast<long double>(f) / per_octave), static_cast<int>(i));
            if (x > static_cast<long double>(N)) break;
            out.push_back(static_cast<std::uint64_t>(x));
        }
    }
    if (N >= 1) out.push_back(N);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> arithmetic_samples(std::uint64_t N, std::uint64_t step) {
    if (step == 0) throw ArityError("stride must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0;; n += step) {
        out.push_back(n);
        if (N - n < step) break;
    }
    if (out.back() != N) out.push_back(N);
    return out;
}

}  // namespace subword
