#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "subword/errors.hpp"

namespace subword {

/// A finite word over {0,1} with at most 63 letters.
///
/// Letters are addressed 1-based from the left. The word is stored as an
/// integer whose most significant used bit is the first letter, so `bits()`
/// is the numeric value of the word read as a binary number (leading zeros
/// allowed) and ordering by (length, bits) is the natural sweep order.
class BinaryWord {
public:
    static constexpr unsigned kMaxLength = 63;

    constexpr BinaryWord() = default;

    static BinaryWord from_bits(std::uint64_t bits, unsigned length);
    static BinaryWord parse(std::string_view text);
    static BinaryWord letter(int bit);
    static BinaryWord zeros(unsigned length);
    static BinaryWord ones(unsigned length);

    unsigned length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::uint64_t full_mask() const noexcept { return mask_for(length_); }

    // 1-based; throws IndexError outside [1, length].
    int at(unsigned i) const;
    int first() const { return at(1); }
    int last() const { return at(length_); }

    std::size_t popcount() const noexcept;
    std::string str() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y) noexcept {
        if (auto c = x.length_ <=> y.length_; c != 0) return c;
        return x.bits_ <=> y.bits_;
    }

    static constexpr std::uint64_t mask_for(unsigned length) noexcept {
        return length == 0 ? 0 : (~std::uint64_t{0} >> (64 - length));
    }

private:
    constexpr BinaryWord(std::uint64_t bits, unsigned length) : bits_(bits), length_(static_cast<std::uint8_t>(length)) {}

    std::uint64_t bits_ = 0;
    std::uint8_t length_ = 0;
};

struct Run {
    int letter;
    unsigned length;

    friend bool operator==(const Run&, const Run&) = default;
};

BinaryWord concat(const BinaryWord& x, const BinaryWord& y);
BinaryWord power(const BinaryWord& x, unsigned k);
BinaryWord complement(const BinaryWord& x);
BinaryWord word_xor(const BinaryWord& x, const BinaryWord& y);
BinaryWord word_and(const BinaryWord& x, const BinaryWord& y);

/// Letters x_t..x_k, 1 <= t <= k <= |x|.
BinaryWord factor(const BinaryWord& x, unsigned t, unsigned k);
bool contains_factor(const BinaryWord& x, const BinaryWord& f);

/// Maximal runs, left to right.
std::vector<Run> run_decomposition(const BinaryWord& x);

/// 0^{l-1}1, the base word every Property P question starts from.
BinaryWord unit_suffix(unsigned length);

inline BinaryWord operator+(const BinaryWord& x, const BinaryWord& y) { return concat(x, y); }

}  // namespace subword

template <>
struct std::hash<subword::BinaryWord> {
    std::size_t operator()(const subword::BinaryWord& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 131 + w.length());
    }
};
