#include "subword/counting.hpp"

#include <bit>
#include <vector>

namespace subword {

unsigned expansion_length(std::uint64_t n) noexcept { return n == 0 ? 1u : static_cast<unsigned>(std::bit_width(n)); }

namespace {

template <class F>
void for_each_expansion_letter(std::uint64_t n, F&& f) {
    const unsigned len = expansion_length(n);
    for (unsigned i = len; i-- > 0;) f(static_cast<int>((n >> i) & 1u));
}

}  // namespace

OccurrenceCount count_subword(const BinaryWord& w, std::uint64_t n) {
    const unsigned l = w.length();
    // dp[i] = number of occurrences of w_1..w_i in the letters read so far.
    std::vector<OccurrenceCount> dp(l + 1);
    dp[0] = 1;
    for_each_expansion_letter(n, [&](int c) {
        for (unsigned i = l; i >= 1; --i)
            if (w.at(i) == c) dp[i] += dp[i - 1];
    });
    return dp[l];
}

OccurrenceCount count_factor(const BinaryWord& w, std::uint64_t n) {
    if (w.empty()) throw ArityError("factor count of the empty word");
    const unsigned len = expansion_length(n);
    OccurrenceCount count = 0;
    if (w.length() > len) return count;
    const std::uint64_t m = w.full_mask();
    for (unsigned shift = 0; shift + w.length() <= len; ++shift)
        if (((n >> shift) & m) == w.bits()) ++count;
    return count;
}

BinaryWord prefix_parities(const BinaryWord& w, std::uint64_t n) {
    const unsigned l = w.length();
    // Bit l - i holds the parity for the prefix of length i; bit l is the
    // empty prefix and stays 1. Reading letter c toggles prefix i by prefix
    // i - 1 whenever w_i = c, all positions updated from the old state.
    const std::uint64_t ones = w.full_mask();
    const std::uint64_t match1 = w.bits();
    const std::uint64_t match0 = ~w.bits() & ones;
    std::uint64_t dp = std::uint64_t{1} << l;
    for_each_expansion_letter(n, [&](int c) { dp ^= (dp >> 1) & (c ? match1 : match0); });
    return BinaryWord::from_bits(dp & ones, l);
}

int subword_parity(const BinaryWord& w, std::uint64_t n) {
    if (w.empty()) return 1;
    return static_cast<int>(prefix_parities(w, n).bits() & 1u);
}

int bracket_eval(const BinaryWord& w, const BinaryWord& u, std::uint64_t n) {
    if (w.length() != u.length()) throw ArityError("bracket needs |w| = |u|");
    if (w.empty()) throw ArityError("bracket needs |w| >= 1");
    return std::popcount(prefix_parities(w, n).bits() & u.bits()) & 1;
}

bool check_doubling_recurrences(const BinaryWord& w, std::uint64_t n_max) {
    const BinaryWord w0 = concat(w, BinaryWord::letter(0));
    const BinaryWord w1 = concat(w, BinaryWord::letter(1));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const OccurrenceCount sw = count_subword(w, n);
        const OccurrenceCount sw0 = count_subword(w0, n);
        const OccurrenceCount sw1 = count_subword(w1, n);
        if (count_subword(w0, 2 * n) != sw0 + sw) return false;
        if (count_subword(w0, 2 * n + 1) != sw0) return false;
        if (count_subword(w1, 2 * n) != sw1) return false;
        if (count_subword(w1, 2 * n + 1) != sw1 + sw) return false;
    }
    return true;
}

}  // namespace subword
