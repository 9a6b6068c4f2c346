#include "subword/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "subword/dynamics.hpp"

namespace subword {

using boost::multiprecision::cpp_int;

bool ModulusTwoResult::has_eigenvalue_two() const {
    return present && std::find(phases.begin(), phases.end(), 0) != phases.end();
}

namespace {

// Solution set {q : q = residue (mod modulus)} of a congruence system modulo
// a power of two; modulus is itself a power of two.
struct Congruence {
    std::uint64_t residue;
    std::uint64_t modulus;
};

std::uint64_t inverse_odd(std::uint64_t x) {
    std::uint64_t inv = x;  // correct to 3 bits; each Newton step doubles that
    for (int i = 0; i < 6; ++i) inv *= 2 - x * inv;
    return inv;
}

// e q = f (mod order), order a power of two, 0 <= e, f < order.
std::optional<Congruence> solve_linear(std::uint64_t e, std::uint64_t f, std::uint64_t order) {
    if (e == 0) {
        if (f != 0) return std::nullopt;
        return Congruence{0, 1};
    }
    const std::uint64_t g = e & (~e + 1);
    if (f % g != 0) return std::nullopt;
    const std::uint64_t m = order / g;
    return Congruence{((f / g) * inverse_odd(e / g)) & (m - 1), m};
}

std::optional<Congruence> intersect(Congruence x, Congruence y) {
    if (x.modulus < y.modulus) std::swap(x, y);
    if ((x.residue & (y.modulus - 1)) != y.residue) return std::nullopt;
    return x;
}

std::size_t max_cycle_length(const SignedPermutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t best = 1;
    for (std::size_t s = 0; s < p.size(); ++s) {
        std::size_t len = 0;
        for (std::size_t i = s; !seen[i]; i = p.column(i)) {
            seen[i] = true;
            ++len;
        }
        best = std::max(best, len);
    }
    return best;
}

}  // namespace

ModulusTwoResult detect_modulus_two(const SignedPermutation& m0, const SignedPermutation& m1) {
    const std::size_t n = m0.size();
    if (m1.size() != n || n == 0) throw ArityError("M_0 and M_1 must be nonempty and of equal size");
    const std::size_t longest = std::max(max_cycle_length(m0), max_cycle_length(m1));
    if (!is_power_of_two(longest)) throw std::logic_error("cycle length " + std::to_string(longest) + " is not a power of two");
    const std::uint64_t order = 2 * static_cast<std::uint64_t>(longest);
    const std::uint64_t half = order / 2;

    // Potentials along a BFS tree: x[i] = mu^depth[i] * (-1)^parity[i].
    const SignedPermutation* mats[2] = {&m0, &m1};
    std::vector<std::int64_t> depth(n, -1);
    std::vector<std::uint8_t> parity(n, 0);
    std::vector<std::uint32_t> queue{0};
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t i = queue[head];
        for (const SignedPermutation* m : mats) {
            const std::uint32_t j = m->column(i);
            if (depth[j] >= 0) continue;
            depth[j] = depth[i] + 1;
            parity[j] = static_cast<std::uint8_t>(parity[i] ^ (m->sign(i) < 0));
            queue.push_back(j);
        }
    }
    if (queue.size() != n) throw std::logic_error("orbit constraint graph is disconnected");

    // Every edge i -> j with sign s requires x[j] = mu s x[i], i.e.
    //   (depth[j] - depth[i] - 1) q = (order/2)(parity[i] + t + parity[j])  (mod order).
    ModulusTwoResult result;
    result.root_order = order;
    Congruence acc{0, 1};
    for (std::size_t i = 0; i < n; ++i) {
        for (const SignedPermutation* m : mats) {
            const std::uint32_t j = m->column(i);
            const std::int64_t e_signed = depth[j] - depth[i] - 1;
            const auto e = static_cast<std::uint64_t>(((e_signed % static_cast<std::int64_t>(order)) + static_cast<std::int64_t>(order)) %
                                                      static_cast<std::int64_t>(order));
            const std::uint64_t f = ((parity[i] ^ parity[j] ^ (m->sign(i) < 0)) & 1u) ? half : 0;
            auto c = solve_linear(e, f, order);
            if (!c) return result;
            auto merged = intersect(acc, *c);
            if (!merged) return result;
            acc = *merged;
        }
    }
    result.present = true;
    for (std::uint64_t q = acc.residue; q < order; q += acc.modulus) result.phases.push_back(q);
    const std::uint64_t q = result.phases.front();
    std::vector<std::uint64_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (q * static_cast<std::uint64_t>(depth[i]) + half * parity[i]) % order;
    result.witness = std::move(x);
    return result;
}

bool verify_phase_witness(const MatrixPair& m, std::uint64_t root_order, std::uint64_t q,
                          const std::vector<std::uint64_t>& witness) {
    if (witness.size() != m.size() || root_order == 0) return false;
    for (int a = 0; a < 2; ++a) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::uint64_t t = m[a].sign(i) < 0 ? root_order / 2 : 0;
            // (M_a x)[i] = s_i x[col(i)] must equal omega^q x[i].
            if ((witness[m[a].column(i)] + t) % root_order != (q + witness[i]) % root_order) return false;
        }
    }
    return true;
}

cpp_int det_two_minus(const DenseIntMatrix& m, std::size_t limit) {
    const std::size_t n = m.n;
    if (n > limit) throw CapacityError("exact determinant of size " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 2 : 0) - m(i, j);
    if (n == 0) return 1;
    int sign = 1;
    cpp_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool eigenvalue_two_by_determinant(const DenseIntMatrix& m, std::size_t limit) { return det_two_minus(m, limit) == 0; }

SignCycleReport sign_cycle_eigenvalue_one(const SignedPermutation& m) {
    SignCycleReport report;
    std::vector<bool> seen(m.size(), false);
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (seen[s]) continue;
        CycleParity c{static_cast<std::uint32_t>(s), 0, 0};
        for (std::size_t i = s; !seen[i]; i = m.column(i)) {
            seen[i] = true;
            ++c.length;
            if (m.sign(i) < 0) ++c.minus_ones;
        }
        report.all_even = report.all_even && c.even();
        report.cycles.push_back(c);
    }
    return report;
}

RadiusEstimate spectral_radius_estimate(const DenseIntMatrix& m, double tol, int max_squarings) {
    const auto n = static_cast<Eigen::Index>(m.n);
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) b(i, j) = static_cast<double>(m(i, j));

    auto inf_norm = [](const Eigen::MatrixXd& x) { return x.cwiseAbs().rowwise().sum().maxCoeff(); };

    RadiusEstimate r;
    if (n == 0) return r;
    double norm = inf_norm(b);
    r.estimate = norm;
    if (norm == 0.0) {
        r.converged = true;
        return r;
    }
    double log_norm = std::log(norm);  // log ||M^{2^k}||
    for (int k = 1; k <= max_squarings; ++k) {
        b /= norm;
        b = (b * b).eval();
        norm = inf_norm(b);
        r.iterations = k;
        if (norm == 0.0) {
            r.tolerance = r.estimate;
            r.estimate = 0.0;
            r.converged = true;
            return r;
        }
        log_norm = 2.0 * log_norm + std::log(norm);
        const double next = std::exp(log_norm / std::ldexp(1.0, k));
        r.tolerance = std::abs(next - r.estimate);
        r.estimate = next;
        if (k >= 5 && r.tolerance < tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

RadiusEstimate spectral_radius_sparse(const MatrixPair& m, double tol, std::uint64_t work_budget) {
    const std::size_t n = m.size();
    RadiusEstimate r;
    if (n == 0) return r;
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n);
    for (double& xi : x) xi = dist(rng);

    auto normalize = [](std::vector<double>& v) {
        double s = 0.0;
        for (double vi : v) s += vi * vi;
        s = std::sqrt(s);
        if (s > 0.0)
            for (double& vi : v) vi /= s;
        return s;
    };
    normalize(x);

    double log_growth = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t checkpoint = 16;
    double log_at_half = 0.0;
    double prev_rate = -1.0;
    while (steps * 2 * n <= work_budget) {
        std::vector<double> y0 = m.m0.apply(std::span<const double>(x));
        const std::vector<double> y1 = m.m1.apply(std::span<const double>(x));
        for (std::size_t i = 0; i < n; ++i) y0[i] += y1[i];
        const double s = normalize(y0);
        if (s == 0.0) {
            r.estimate = 0.0;
            r.converged = true;
            return r;
        }
        log_growth += std::log(s);
        x = std::move(y0);
        ++steps;
        if (steps == 8) log_at_half = log_growth;
        if (steps == checkpoint) {
            const double rate = std::exp((log_growth - log_at_half) / static_cast<double>(checkpoint / 2));
            r.estimate = rate;
            r.iterations = static_cast<int>(std::countr_zero(checkpoint));
            if (prev_rate >= 0.0) {
                r.tolerance = std::abs(rate - prev_rate);
                if (r.tolerance < tol) {
                    r.converged = true;
                    return r;
                }
            }
            prev_rate = rate;
            log_at_half = log_growth;  // the next window starts here
            checkpoint *= 2;
        }
    }
    return r;
}

std::vector<double> eigenvalue_magnitudes(const DenseIntMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.n);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(std::abs(solver.eigenvalues()[i]));
    std::sort(out.begin(), out.end());
    return out;
}

SpectralVerdict analyze_spectrum(const MatrixPair& m, const SpectraOptions& options) {
    SpectralVerdict v;
    ModulusTwoResult mt = detect_modulus_two(m.m0, m.m1);
    v.has_modulus_two = mt.present;
    v.root_order = mt.root_order;
    v.phase_exponents = std::move(mt.phases);
    v.witness = std::move(mt.witness);
    const RadiusEstimate r = m.size() <= options.dense_limit ? spectral_radius_estimate(dense_sum(m), options.gelfand_tol)
                                                             : spectral_radius_sparse(m, options.gelfand_tol);
    v.radius_estimate = r.estimate;
    v.radius_tolerance = r.tolerance;
    v.radius_converged = r.converged;
    return v;
}

double growth_exponent(const SpectralVerdict& verdict) { return std::log2(verdict.radius_estimate); }

}  // namespace subword
