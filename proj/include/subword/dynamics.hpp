#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "subword/word.hpp"

namespace subword {

/// One application of the maps S_a(w), T_a(w) to u:
///   T S = [ (abar^l xor w)0  and  u0 ] xor 0u      (as words of length l+1)
/// The first letter of the right side is the sign bit T, the rest is S.
struct StepResult {
    int sign_bit;
    BinaryWord next;

    friend bool operator==(const StepResult&, const StepResult&) = default;
};

StepResult step(const BinaryWord& w, int a, const BinaryWord& u);

/// The unique u with step(w, a, u).next == u_next (right-to-left back-substitution).
BinaryWord step_inverse(const BinaryWord& w, int a, const BinaryWord& u_next);

struct PathResult {
    int parity;
    BinaryWord result;

    friend bool operator==(const PathResult&, const PathResult&) = default;
};

/// S_h(w) = S_{h_1}(w) o ... o S_{h_r}(w) applied to u: the LAST letter of h
/// acts first. `parity` is the sum mod 2 of the sign bits collected along the
/// way, i.e. the sign of the u-row of M_{h_r} ... M_{h_1}.
///
/// With h the binary expansion of n without its leading 1, this is exactly
/// how the bracket at n reduces to the bracket at 1.
PathResult apply_path(const BinaryWord& w, const BinaryWord& h, const BinaryWord& u);

/// The closure of {base} under S_0(w), S_1(w), with the action tabulated.
///
/// Elements are listed in breadth-first discovery order from base, trying the
/// 0-step before the 1-step, so base is element 0 and the order is
/// reproducible.
class OrbitTable {
public:
    OrbitTable(const BinaryWord& w, const BinaryWord& base);

    const BinaryWord& word() const noexcept { return w_; }
    const BinaryWord& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return elements_.size(); }

    const std::vector<BinaryWord>& elements() const noexcept { return elements_; }
    const BinaryWord& element(std::size_t i) const { return elements_.at(i); }
    std::optional<std::size_t> index_of(const BinaryWord& x) const;

    /// Position of S_a(w)(element i).
    std::uint32_t succ(int a, std::size_t i) const { return succ_[a & 1][i]; }
    /// T_a(w)(element i).
    int sign(int a, std::size_t i) const { return signs_[a & 1][i]; }

    std::span<const std::uint32_t> successors(int a) const noexcept { return succ_[a & 1]; }
    std::span<const std::uint8_t> signs(int a) const noexcept { return signs_[a & 1]; }

private:
    BinaryWord w_;
    BinaryWord base_;
    std::vector<BinaryWord> elements_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> succ_[2];
    std::vector<std::uint8_t> signs_[2];
};

OrbitTable orbit(const BinaryWord& w, const BinaryWord& u);

/// The S_a(w)-cycle through u, in iteration order starting at u.
std::vector<BinaryWord> cycle_of(const BinaryWord& w, int a, const BinaryWord& u);

/// Lambda_a(w)(u), without materializing the cycle.
std::size_t cycle_length(const BinaryWord& w, int a, const BinaryWord& u);

/// Parity of the number of words with first letter 1 on the S_a(w)-cycle through u.
int cycle_first_letter_parity(const BinaryWord& w, int a, const BinaryWord& u);

/// Parity of the number of -1 entries of M_a along the S_a(w)-cycle through u,
/// i.e. the number of cycle words with T_a(w) = 1. This equals
/// cycle_first_letter_parity when a is the first letter of w and is 0 otherwise.
int cycle_sign_parity(const BinaryWord& w, int a, const BinaryWord& u);

/// Upper bound on every cycle length of S_a(w) on {0,1}^l, read off the run
/// lengths of w: each run of the letter a of length r contributes
/// 2^ceil(log2(r+1)), except a leading run, which contributes 2^ceil(log2(r)).
/// A word without the letter a gives the identity map and the bound 1.
std::uint64_t cycle_length_bound(const BinaryWord& w, int a);

/// Streams the cycles of S_a(w) restricted to the orbit; `f` receives the
/// orbit positions of one cycle at a time, starting at its smallest position.
template <class F>
void for_each_cycle(const OrbitTable& orbit, int a, F&& f) {
    std::vector<bool> seen(orbit.size(), false);
    std::vector<std::uint32_t> cycle;
    for (std::size_t start = 0; start < orbit.size(); ++start) {
        if (seen[start]) continue;
        cycle.clear();
        for (std::uint32_t i = static_cast<std::uint32_t>(start); !seen[i]; i = orbit.succ(a, i)) {
            seen[i] = true;
            cycle.push_back(i);
        }
        f(std::span<const std::uint32_t>(cycle));
    }
}

/// Cycle lengths of S_a(w) on the orbit, one per cycle in order of smallest position.
std::vector<std::size_t> cycle_lengths(const OrbitTable& orbit, int a);

/// One line per element: "<pos> <word> s0=<pos> t0=<bit> s1=<pos> t1=<bit>".
std::string dump_orbit(const OrbitTable& orbit);

/// ceil(log2(x)) for x >= 1.
unsigned ceil_log2(std::uint64_t x) noexcept;
bool is_power_of_two(std::uint64_t x) noexcept;

}  // namespace subword
