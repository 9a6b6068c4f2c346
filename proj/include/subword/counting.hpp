#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/word.hpp"

namespace subword {

using OccurrenceCount = boost::multiprecision::cpp_int;

// The ordinary binary expansion of n has no leading zeros; the expansion of
// 0 is the single letter "0". With that convention s_0(0) = 1 and
// s_w(0) = 0 for every other nonempty w fall out of the general definition.

/// Number of letters in the ordinary binary expansion of n.
unsigned expansion_length(std::uint64_t n) noexcept;

/// s_w(n): occurrences of w as a scattered subword of the expansion of n.
/// s_eps(n) = 1.
OccurrenceCount count_subword(const BinaryWord& w, std::uint64_t n);

/// e_w(n): occurrences of w as a factor (consecutive letters). |w| >= 1.
OccurrenceCount count_factor(const BinaryWord& w, std::uint64_t n);

/// s_w(n) mod 2, by the same dynamic program run over GF(2).
int subword_parity(const BinaryWord& w, std::uint64_t n);

/// The word whose i-th letter is s_{w_1..w_i}(n) mod 2, for i = 1..|w|.
BinaryWord prefix_parities(const BinaryWord& w, std::uint64_t n);

/// The bracket [w;u](n): sum over i with u_i = 1 of s_{w_1..w_i}(n), mod 2.
///
/// The sum runs over prefixes of w selected by the support of u.
int bracket_eval(const BinaryWord& w, const BinaryWord& u, std::uint64_t n);

/// Checks s_{w0}(2n) = s_{w0}(n) + s_w(n), s_{w0}(2n+1) = s_{w0}(n),
/// s_{w1}(2n) = s_{w1}(n), s_{w1}(2n+1) = s_{w1}(n) + s_w(n) for 1 <= n <= n_max.
bool check_doubling_recurrences(const BinaryWord& w, std::uint64_t n_max);

}  // namespace subword
