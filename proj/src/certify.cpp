#include "subword/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace subword {

std::string to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::Search: return "search";
        case CertificateKind::Simple: return "simple";
        case CertificateKind::OneRun: return "one-run";
        case CertificateKind::LongPrefix: return "long-prefix";
        case CertificateKind::TwoRuns: return "two-runs";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ProvedP: return "PROVED_P";
        case Verdict::ProvedNotP: return "PROVED_NOT_P";
        case Verdict::SpectralObstruction: return "SPECTRAL_OBSTRUCTION";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

bool replay(const Certificate& cert) {
    if (cert.w.length() != cert.u.length() || cert.cycle_rep.length() != cert.w.length() || cert.w.empty()) return false;
    if (step(cert.w, cert.a, cert.u) != StepResult{0, cert.u}) return false;
    const OrbitTable orb(cert.w, cert.u);
    if (!orb.index_of(cert.cycle_rep)) return false;
    return cycle_sign_parity(cert.w, cert.b, cert.cycle_rep) == 1;
}

std::optional<Certificate> find_certificate(const BinaryWord& w, const BinaryWord& u) {
    if (w.length() != u.length() || w.empty()) throw ArityError("find_certificate needs |w| = |u| >= 1");
    std::optional<OrbitTable> orb;
    for (int a = 0; a < 2; ++a) {
        if (step(w, a, u) != StepResult{0, u}) continue;
        if (!orb) orb.emplace(w, u);
        for (int b = 0; b < 2; ++b) {
            std::optional<std::uint32_t> hit;
            for_each_cycle(*orb, b, [&](std::span<const std::uint32_t> cyc) {
                if (hit) return;
                std::size_t minus = 0;
                for (std::uint32_t i : cyc) minus += orb->sign(b, i);
                if (minus % 2 == 1) hit = cyc.front();
            });
            if (hit) return Certificate{w, u, a, b, orb->element(*hit), CertificateKind::Search};
        }
    }
    return std::nullopt;
}

namespace {

BinaryWord run_of(int a, unsigned n) { return a ? BinaryWord::ones(n) : BinaryWord::zeros(n); }

void require_bit(int a, const char* name) {
    if (a != 0 && a != 1) throw DomainError(std::string(name) + " must be 0 or 1");
}

// A theorem's conclusion failed on valid parameters. Never expected.
[[noreturn]] void broken(const std::string& what) { throw std::logic_error("construction check failed: " + what); }

}  // namespace

Certificate check_simple_family(int a, const BinaryWord& w, unsigned k, unsigned j) {
    require_bit(a, "a");
    if (k <= 1 || !is_power_of_two(k)) throw DomainError("k must be a power of 2 greater than 1");
    if (j <= 1) throw DomainError("j must exceed 1");
    if (j > k) throw DomainError("j must not exceed k");
    if (std::uint64_t{k} + w.length() + j > BinaryWord::kMaxLength)
        throw DomainError("k + |w| + j must not exceed 63");
    const int abar = 1 - a;
    const BinaryWord wp = run_of(a, k) + w + BinaryWord::letter(abar) + run_of(a, j - 1);
    const BinaryWord up = unit_suffix(k) + unit_suffix(w.length() + j);

    if (step(wp, abar, up) != StepResult{0, up}) broken("abar does not fix u' with sign 0");
    if (cycle_sign_parity(wp, a, up) != 1) broken("S_a-cycle of u' has even sign parity");
    if (cycle_length(wp, a, up) != cycle_length(run_of(a, k), a, unit_suffix(k)))
        broken("cycle length of u' differs from that of 0^{k-1}1 under a^k");

    Certificate cert{wp, up, abar, a, up, CertificateKind::Simple};
    if (!replay(cert)) broken("simple-family certificate does not replay");
    if (!find_certificate(wp, up)) broken("certificate search finds nothing on a simple-family pair");
    return cert;
}

OneRunResult check_one_run(int a, unsigned length, const OneRunOptions& options) {
    require_bit(a, "a");
    if (length < 2 || length > 20) throw DomainError("one-run length must lie in [2, 20]");
    const BinaryWord w = run_of(a, length);
    const BinaryWord base = unit_suffix(length);
    OneRunResult res;

    if (is_power_of_two(length)) {
        Certificate cert{w, base, 1 - a, a, base, CertificateKind::OneRun};
        if (!replay(cert)) broken("one-run certificate does not replay");
        res.verdict = OneRunVerdict::ProvedP;
        res.certificate = cert;
        return res;
    }

    res.verdict = OneRunVerdict::ProvedNotP;
    const OrbitTable orb(w, base);
    const PartialSumEvaluator eval(orb);
    const MatrixPair& m = eval.matrices();

    // the single S_a-cycle u_0 = base, u_{q+1} = S_a u_q
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t i = 0;;) {
        cyc.push_back(i);
        i = orb.succ(a, i);
        if (i == 0) break;
    }
    if (cyc.size() != orb.size()) broken("orbit of 0^{l-1}1 is not a single S_a-cycle");

    // x(u_q) = (-1)^{#{r >= q : T_a(u_r) = 1}}
    res.eigenvector.assign(orb.size(), 1);
    int tail = 0;
    for (std::size_t q = cyc.size(); q-- > 0;) {
        tail ^= orb.sign(a, cyc[q]);
        res.eigenvector[cyc[q]] = tail ? -1 : 1;
    }
    const SumVector x(res.eigenvector.begin(), res.eigenvector.end());
    if (m[a].apply(x) != x) broken("M_a x != x");
    if (m[1 - a].apply(x) != x) broken("M_abar is not the identity on x");

    for (std::size_t i = 0; i < x.size(); ++i) res.inner_product += eval.v1()[i] * x[i];
    if (res.inner_product == 0) broken("<v(1), x> = 0");

    for (unsigned n = options.min_exponent; n <= options.max_exponent; ++n) {
        const std::uint64_t N = (std::uint64_t{1} << n) - 1;
        const std::int64_t s = eval.base_sum(N);
        res.samples.push_back({n, s, std::abs(static_cast<double>(s)) / std::ldexp(1.0, static_cast<int>(n))});
    }
    if (!res.samples.empty()) {
        const std::size_t head = std::min<std::size_t>(3, res.samples.size());
        res.delta = res.samples[0].ratio;
        for (std::size_t i = 1; i < head; ++i) res.delta = std::min(res.delta, res.samples[i].ratio);
        res.empirical_stable = res.delta > 0 && std::all_of(res.samples.begin(), res.samples.end(), [&](const EmpiricalPoint& p) {
                                   return p.ratio >= res.delta / 2 && p.ratio <= 2 * res.delta;
                               });
    }
    return res;
}

namespace {

std::optional<std::string> long_prefix_failure(int a, unsigned k, const BinaryWord& w, int b, const BinaryWord& u) {
    if (a != 0 && a != 1) return "a must be 0 or 1";
    if (b != 0 && b != 1) return "b must be 0 or 1";
    if (k == 0 || !is_power_of_two(k)) return "k must be a power of 2";
    if (w.empty()) return "w must be nonempty";
    if (std::uint64_t{k} + 1 + w.length() > BinaryWord::kMaxLength) return "k + 1 + |w| must not exceed 63";
    if (contains_factor(w, run_of(a, k))) return "a^k must not be a factor of w";
    if (u.length() != w.length()) return "|u| must equal |w|";
    if (u.bits() == 0) return "u must differ from 0^|w|";
    const StepResult r = step(w, b, u);
    if (r.next != u) return "S_b(w) must fix u";
    if (r.sign_bit != 0) return "T_b(w)(u) must be 0";
    return std::nullopt;
}

}  // namespace

Certificate check_long_prefix(int a, unsigned k, const BinaryWord& w, int b, const BinaryWord& u) {
    if (auto why = long_prefix_failure(a, k, w, b, u)) throw DomainError(*why);
    const int abar = 1 - a;
    const BinaryWord ak = run_of(a, k);
    const BinaryWord wp = ak + BinaryWord::letter(abar) + w;
    const BinaryWord up = BinaryWord::zeros(k + 1) + u;

    if (step(wp, b, up) != StepResult{0, up}) broken("b does not fix u' with sign 0");

    // Move the leading 1 of u (position r) to position k of u'. The letter
    // w_r acts first, abar last.
    unsigned r = 1;
    while (u.at(r) == 0) ++r;
    const BinaryWord h = BinaryWord::letter(abar) + factor(w, 1, r);
    const BinaryWord upp = apply_path(wp, h, up).result;
    if (factor(upp, 1, k) != unit_suffix(k)) broken("S_h(w')(u') lacks the prefix 0^{k-1}1");
    if (cycle_length(wp, a, upp) != cycle_length(ak, a, unit_suffix(k)))
        broken("cycle length of u'' differs from that of 0^{k-1}1 under a^k");
    if (cycle_sign_parity(wp, a, upp) != 1) broken("S_a-cycle of u'' has even sign parity");

    Certificate cert{wp, up, b, a, upp, CertificateKind::LongPrefix};
    if (!replay(cert)) broken("long-prefix certificate does not replay");
    return cert;
}

Certificate check_long_prefix(int a, unsigned k, const BinaryWord& w) {
    if (w.empty()) throw DomainError("w must be nonempty");
    return check_long_prefix(a, k, w, 1 - w.last(), unit_suffix(w.length()));
}

Certificate check_two_runs(int a, unsigned j, unsigned k, const BinaryWord& u) {
    require_bit(a, "a");
    if (j < 1 || k < 1) throw DomainError("j and k must be at least 1");
    if (j + k > 20) throw DomainError("j + k must not exceed 20");
    if (u.length() != k) throw DomainError("|u| must equal k");
    if (u.bits() == 0) throw DomainError("u must differ from 0^k");
    const BinaryWord w = run_of(a, j) + run_of(1 - a, k);
    const BinaryWord base = BinaryWord::zeros(j) + u;

    if (step(w, a, base) != StepResult{0, base}) broken("a does not fix 0^j u with sign 0");

    const BinaryWord prefix = BinaryWord::letter(1) + BinaryWord::zeros(j - 1);
    const OrbitTable orb(w, base);
    for (const BinaryWord& x : orb.elements()) {
        if (factor(x, 1, j) != prefix) continue;
        if (step(w, a, x) != StepResult{1, x}) broken("S_a does not fix an orbit word with prefix 10^{j-1} with sign 1");
        Certificate cert{w, base, a, a, x, CertificateKind::TwoRuns};
        if (!replay(cert)) broken("two-runs certificate does not replay");
        return cert;
    }
    broken("orbit has no word with prefix 10^{j-1}");
}

EmpiricalGrowth empirical_growth(const PartialSumEvaluator& eval, unsigned lo, unsigned hi, unsigned per_octave) {
    EmpiricalGrowth g;
    const std::uint64_t top = std::uint64_t{1} << hi;
    const std::uint64_t bottom = std::uint64_t{1} << lo;
    std::int64_t running = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::uint64_t n : geometric_samples(top, per_octave)) {
        const std::int64_t s = eval.base_sum(n);
        running = std::max<std::int64_t>(running, s < 0 ? -s : s);
        if (n < bottom) continue;
        g.max_ratio_sqrt = std::max(g.max_ratio_sqrt, std::abs(static_cast<double>(s)) / std::sqrt(static_cast<double>(n)));
        if (running == 0) continue;
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(static_cast<double>(running));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++g.samples;
    }
    if (g.samples >= 2) {
        const double n = static_cast<double>(g.samples);
        const double den = n * sxx - sx * sx;
        if (den != 0) g.slope = (n * sxy - sx * sy) / den;
    }
    return g;
}

namespace {

std::string params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) out += (out.empty() ? "" : ",") + std::string(k) + "=" + v;
    return out;
}

std::string str_or_eps(const BinaryWord& x) { return x.empty() ? "eps" : x.str(); }

struct FamilyOutcome {
    std::optional<Certificate> cert;
    std::optional<OneRunVerdict> one_run;
};

FamilyOutcome match_families(const BinaryWord& w, const BinaryWord& u, bool default_base, std::vector<FamilyMatch>& out) {
    FamilyOutcome res;
    const auto runs = run_decomposition(w);
    const unsigned l = w.length();
    auto keep = [&](const Certificate& c) {
        if (!res.cert) res.cert = c;
    };

    if (default_base && runs.size() == 1 && l <= 20) {
        const OneRunResult r = check_one_run(runs[0].letter, l);
        res.one_run = r.verdict;
        out.push_back({"one-run", params({{"a", std::to_string(runs[0].letter)}, {"l", std::to_string(l)}}),
                       r.verdict == OneRunVerdict::ProvedP ? "P" : "not P"});
        if (r.certificate) keep(*r.certificate);
    }

    if (runs.size() == 2 && l <= 20) {
        const unsigned j = runs[0].length;
        const unsigned k = runs[1].length;
        if (factor(u, 1, j).bits() == 0) {
            const BinaryWord tail = factor(u, j + 1, l);
            if (tail.bits() != 0) {
                const Certificate c = check_two_runs(runs[0].letter, j, k, tail);
                out.push_back({"two-runs",
                               params({{"a", std::to_string(runs[0].letter)}, {"j", std::to_string(j)}, {"k", std::to_string(k)},
                                       {"u", tail.str()}}),
                               "Q"});
                keep(c);
            }
        }
    }

    // a^k abar w'' with k = the first run length
    if (runs.size() >= 2 && is_power_of_two(runs[0].length) && l >= runs[0].length + 2) {
        const int a = runs[0].letter;
        const unsigned k = runs[0].length;
        const BinaryWord rest = factor(w, k + 2, l);
        if (factor(u, 1, k + 1).bits() == 0) {
            const BinaryWord ur = factor(u, k + 2, l);
            for (int b = 0; b < 2; ++b) {
                if (long_prefix_failure(a, k, rest, b, ur)) continue;
                const Certificate c = check_long_prefix(a, k, rest, b, ur);
                out.push_back({"long-prefix",
                               params({{"a", std::to_string(a)}, {"k", std::to_string(k)}, {"w", rest.str()},
                                       {"b", std::to_string(b)}, {"u", ur.str()}}),
                               default_base ? "P" : "Q"});
                keep(c);
                break;
            }
        }
    }

    // a^k w abar a^{j-1} with u' = 0^{k-1}1 0^{|w|+j-1}1
    if (!runs.empty()) {
        const int a = runs[0].letter;
        for (unsigned k = 2; k <= runs[0].length; k *= 2) {
            for (unsigned j = 2; j <= k && k + j <= l; ++j) {
                const unsigned mid = l - k - j;
                if (w.at(k + mid + 1) != 1 - a) continue;
                if (j > 1 && factor(w, l - j + 2, l) != run_of(a, j - 1)) continue;
                const BinaryWord middle = mid ? factor(w, k + 1, k + mid) : BinaryWord{};
                if (unit_suffix(k) + unit_suffix(mid + j) != u) continue;
                const Certificate c = check_simple_family(a, middle, k, j);
                out.push_back({"simple",
                               params({{"a", std::to_string(a)}, {"w", str_or_eps(middle)}, {"k", std::to_string(k)},
                                       {"j", std::to_string(j)}}),
                               "Q"});
                keep(c);
            }
        }
    }
    return res;
}

}  // namespace

AnalysisReport classify(const BinaryWord& w, const std::optional<BinaryWord>& u, const ClassifyOptions& options) {
    if (w.length() < 2) throw ArityError("classify needs |w| >= 2");
    if (w.length() > options.max_word_length)
        throw CapacityError("|w| = " + std::to_string(w.length()) + " exceeds max_word_length " +
                            std::to_string(options.max_word_length));
    const BinaryWord base = u.value_or(unit_suffix(w.length()));
    if (base.length() != w.length()) throw ArityError("|u| must equal |w|");
    const bool default_base = base == unit_suffix(w.length());

    AnalysisReport rep;
    rep.word = w;
    rep.u = base;
    const OrbitTable orb(w, base);
    rep.orbit_size = orb.size();
    rep.cycle_lengths[0] = cycle_lengths(orb, 0);
    rep.cycle_lengths[1] = cycle_lengths(orb, 1);

    const FamilyOutcome fam = match_families(w, base, default_base, rep.family_matches);
    const std::optional<Certificate> found = find_certificate(w, base);
    rep.certificate = found ? found : fam.cert;

    const PartialSumEvaluator eval(orb);
    rep.spectrum = analyze_spectrum(eval.matrices(), {options.dense_limit, options.gelfand_tol});
    const bool lambda_two = std::find(rep.spectrum.phase_exponents.begin(), rep.spectrum.phase_exponents.end(), 0u) !=
                            rep.spectrum.phase_exponents.end();
    if (orb.size() <= options.det_limit) rep.det_two_minus_m = det_two_minus(dense_sum(eval.matrices()), options.det_limit);

    if (!rep.spectrum.has_modulus_two) rep.exponent_certified = growth_exponent(rep.spectrum);
    try {
        rep.exponent_empirical = empirical_growth(eval, options.empirical_lo, options.empirical_hi).slope;
    } catch (const OverflowError&) {
        rep.warnings.push_back("empirical exponent skipped: 64-bit overflow");
    }

    if (fam.one_run == OneRunVerdict::ProvedNotP)
        rep.verdict = Verdict::ProvedNotP;
    else if (fam.cert || found || !rep.spectrum.has_modulus_two)
        rep.verdict = Verdict::ProvedP;
    else
        rep.verdict = Verdict::SpectralObstruction;

    auto violation = [&](std::string s) { rep.consistency_violations.push_back(std::move(s)); };
    if (rep.certificate && rep.spectrum.has_modulus_two) violation("certificate present but a modulus-2 eigenvalue exists");
    if (rep.det_two_minus_m && (*rep.det_two_minus_m == 0) != lambda_two)
        violation("det(2I - M) and the phase decider disagree on eigenvalue 2");
    if (fam.one_run == OneRunVerdict::ProvedNotP && !rep.spectrum.has_modulus_two)
        violation("one-run failure but no modulus-2 eigenvalue");
    if (fam.cert && rep.spectrum.has_modulus_two) violation("family certificate but a modulus-2 eigenvalue exists");
    if (!rep.spectrum.has_modulus_two && rep.verdict == Verdict::ProvedNotP)
        violation("PROVED_NOT_P without a modulus-2 eigenvalue");

    if (rep.verdict == Verdict::SpectralObstruction)
        rep.warnings.push_back("modulus-2 eigenvalue is an obstruction only; Property P is not refuted");
    if (rep.spectrum.radius_estimate < 1.0 - rep.spectrum.radius_tolerance)
        rep.warnings.push_back("spectral radius estimate below 1");
    if (!rep.spectrum.radius_converged) rep.warnings.push_back("spectral radius estimate did not converge");
    if (!default_base) rep.warnings.push_back("non-default base: PROVED_P refers to Property Q of (w, u)");
    return rep;
}

}  // namespace subword
