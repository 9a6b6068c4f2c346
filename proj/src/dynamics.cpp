#include "subword/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace subword {

namespace {

void require_same_length(const BinaryWord& w, const BinaryWord& u) {
    if (w.length() != u.length())
        throw ArityError("|w| = " + std::to_string(w.length()) + " but |u| = " + std::to_string(u.length()));
    if (w.empty()) throw ArityError("the maps S_a(w) need |w| >= 1");
}

// Letters i with w_i = a, i.e. abar xor w.
std::uint64_t active_mask(const BinaryWord& w, int a) { return a ? w.bits() : (~w.bits() & w.full_mask()); }

struct RawStep {
    std::uint64_t next;
    int sign;
};

// Letter i sits at bit l - i, so "position i+1 feeds position i" is a left
// shift by one, and what leaves position 1 is the sign bit.
inline RawStep raw_step(std::uint64_t mask, unsigned l, std::uint64_t u) {
    const std::uint64_t x = mask & u;
    return {u ^ ((x << 1) & BinaryWord::mask_for(l)), static_cast<int>((x >> (l - 1)) & 1u)};
}

}  // namespace

StepResult step(const BinaryWord& w, int a, const BinaryWord& u) {
    require_same_length(w, u);
    const RawStep r = raw_step(active_mask(w, a), w.length(), u.bits());
    return {r.sign, BinaryWord::from_bits(r.next, u.length())};
}

BinaryWord step_inverse(const BinaryWord& w, int a, const BinaryWord& u_next) {
    require_same_length(w, u_next);
    const unsigned l = w.length();
    const std::uint64_t mask = active_mask(w, a);
    // u_l = u'_l; u_i = u'_i xor (mask_{i+1} and u_{i+1}) for i = l-1 .. 1.
    std::uint64_t u = u_next.bits() & 1u;
    for (unsigned bit = 1; bit < l; ++bit) {
        const std::uint64_t below = (mask & u) >> (bit - 1) & 1u;
        u |= (((u_next.bits() >> bit) & 1u) ^ below) << bit;
    }
    return BinaryWord::from_bits(u, l);
}

PathResult apply_path(const BinaryWord& w, const BinaryWord& h, const BinaryWord& u) {
    require_same_length(w, u);
    const unsigned l = w.length();
    const std::uint64_t masks[2] = {active_mask(w, 0), active_mask(w, 1)};
    std::uint64_t cur = u.bits();
    int parity = 0;
    for (unsigned i = h.length(); i >= 1; --i) {
        const RawStep r = raw_step(masks[h.at(i)], l, cur);
        parity ^= r.sign;
        cur = r.next;
    }
    return {parity, BinaryWord::from_bits(cur, l)};
}

OrbitTable::OrbitTable(const BinaryWord& w, const BinaryWord& base) : w_(w), base_(base) {
    require_same_length(w, base);
    const unsigned l = w.length();
    const std::uint64_t masks[2] = {active_mask(w, 0), active_mask(w, 1)};
    std::vector<std::uint64_t> raw{base.bits()};
    index_.emplace(base.bits(), 0);
    for (std::size_t head = 0; head < raw.size(); ++head) {
        for (int a = 0; a < 2; ++a) {
            const RawStep r = raw_step(masks[a], l, raw[head]);
            auto [it, inserted] = index_.emplace(r.next, static_cast<std::uint32_t>(raw.size()));
            if (inserted) raw.push_back(r.next);
            succ_[a].push_back(it->second);
            signs_[a].push_back(static_cast<std::uint8_t>(r.sign));
        }
    }
    elements_.reserve(raw.size());
    for (std::uint64_t bits : raw) elements_.push_back(BinaryWord::from_bits(bits, l));
}

std::optional<std::size_t> OrbitTable::index_of(const BinaryWord& x) const {
    if (x.length() != w_.length()) return std::nullopt;
    auto it = index_.find(x.bits());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

OrbitTable orbit(const BinaryWord& w, const BinaryWord& u) { return OrbitTable(w, u); }

namespace {

template <class F>
void walk_cycle(const BinaryWord& w, int a, const BinaryWord& u, F&& f) {
    require_same_length(w, u);
    const std::uint64_t mask = active_mask(w, a);
    std::uint64_t cur = u.bits();
    do {
        const RawStep r = raw_step(mask, w.length(), cur);
        f(cur, r.sign);
        cur = r.next;
    } while (cur != u.bits());
}

}  // namespace

std::vector<BinaryWord> cycle_of(const BinaryWord& w, int a, const BinaryWord& u) {
    std::vector<BinaryWord> out;
    walk_cycle(w, a, u, [&](std::uint64_t x, int) { out.push_back(BinaryWord::from_bits(x, u.length())); });
    return out;
}

std::size_t cycle_length(const BinaryWord& w, int a, const BinaryWord& u) {
    std::size_t n = 0;
    walk_cycle(w, a, u, [&](std::uint64_t, int) { ++n; });
    return n;
}

int cycle_first_letter_parity(const BinaryWord& w, int a, const BinaryWord& u) {
    int parity = 0;
    const unsigned l = u.length();
    walk_cycle(w, a, u, [&](std::uint64_t x, int) { parity ^= static_cast<int>((x >> (l - 1)) & 1u); });
    return parity;
}

int cycle_sign_parity(const BinaryWord& w, int a, const BinaryWord& u) {
    int parity = 0;
    walk_cycle(w, a, u, [&](std::uint64_t, int t) { parity ^= t; });
    return parity;
}

unsigned ceil_log2(std::uint64_t x) noexcept { return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1)); }

bool is_power_of_two(std::uint64_t x) noexcept { return std::has_single_bit(x); }

std::uint64_t cycle_length_bound(const BinaryWord& w, int a) {
    const std::vector<Run> runs = run_decomposition(w);
    std::uint64_t bound = 1;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].letter != a) continue;
        const std::uint64_t len = runs[r].length;
        const std::uint64_t contribution = std::uint64_t{1} << ceil_log2(r == 0 ? len : len + 1);
        bound = std::max(bound, contribution);
    }
    return bound;
}

std::vector<std::size_t> cycle_lengths(const OrbitTable& orbit, int a) {
    std::vector<std::size_t> out;
    for_each_cycle(orbit, a, [&](std::span<const std::uint32_t> c) { out.push_back(c.size()); });
    return out;
}

std::string dump_orbit(const OrbitTable& orbit) {
    std::ostringstream os;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        os << i << ' ' << orbit.element(i).str() << " s0=" << orbit.succ(0, i) << " t0=" << orbit.sign(0, i)
           << " s1=" << orbit.succ(1, i) << " t1=" << orbit.sign(1, i) << '\n';
    }
    return os.str();
}

}  // namespace subword
