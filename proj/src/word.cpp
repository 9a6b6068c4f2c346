#include "subword/word.hpp"

#include <bit>

namespace subword {

BinaryWord BinaryWord::from_bits(std::uint64_t bits, unsigned length) {
    if (length > kMaxLength) throw CapacityError("word length " + std::to_string(length) + " exceeds 63");
    if ((bits & ~mask_for(length)) != 0) throw ArityError("bits do not fit the requested length");
    return BinaryWord(bits, length);
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text.size() > kMaxLength) throw CapacityError("word length " + std::to_string(text.size()) + " exceeds 63");
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("invalid letter '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BinaryWord(bits, static_cast<unsigned>(text.size()));
}

BinaryWord BinaryWord::letter(int bit) { return BinaryWord(bit ? 1u : 0u, 1); }

BinaryWord BinaryWord::zeros(unsigned length) { return from_bits(0, length); }

BinaryWord BinaryWord::ones(unsigned length) { return from_bits(mask_for(length), length); }

int BinaryWord::at(unsigned i) const {
    if (i < 1 || i > length_) throw IndexError("letter index " + std::to_string(i) + " outside [1, " + std::to_string(length_) + "]");
    return static_cast<int>((bits_ >> (length_ - i)) & 1u);
}

std::size_t BinaryWord::popcount() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string BinaryWord::str() const {
    std::string s(length_, '0');
    for (unsigned i = 0; i < length_; ++i)
        if ((bits_ >> (length_ - 1 - i)) & 1u) s[i] = '1';
    return s;
}

BinaryWord concat(const BinaryWord& x, const BinaryWord& y) {
    const unsigned n = x.length() + y.length();
    if (n > BinaryWord::kMaxLength) throw CapacityError("concatenation length " + std::to_string(n) + " exceeds 63");
    // x.length() < 64 here, and y.length() <= 63, so the shift is defined.
    const std::uint64_t hi = y.length() == 0 ? x.bits() : (x.bits() << y.length());
    return BinaryWord::from_bits(hi | y.bits(), n);
}

BinaryWord power(const BinaryWord& x, unsigned k) {
    if (static_cast<unsigned long long>(k) * x.length() > BinaryWord::kMaxLength)
        throw CapacityError("power length exceeds 63");
    BinaryWord out;
    for (unsigned i = 0; i < k; ++i) out = concat(out, x);
    return out;
}

BinaryWord complement(const BinaryWord& x) { return BinaryWord::from_bits(~x.bits() & x.full_mask(), x.length()); }

BinaryWord word_xor(const BinaryWord& x, const BinaryWord& y) {
    if (x.length() != y.length()) throw ArityError("xor of words with different lengths");
    return BinaryWord::from_bits(x.bits() ^ y.bits(), x.length());
}

BinaryWord word_and(const BinaryWord& x, const BinaryWord& y) {
    if (x.length() != y.length()) throw ArityError("and of words with different lengths");
    return BinaryWord::from_bits(x.bits() & y.bits(), x.length());
}

BinaryWord factor(const BinaryWord& x, unsigned t, unsigned k) {
    if (t < 1 || t > k || k > x.length())
        throw IndexError("factor [" + std::to_string(t) + "," + std::to_string(k) + "] outside word of length " + std::to_string(x.length()));
    const unsigned len = k - t + 1;
    return BinaryWord::from_bits((x.bits() >> (x.length() - k)) & BinaryWord::mask_for(len), len);
}

bool contains_factor(const BinaryWord& x, const BinaryWord& f) {
    if (f.empty()) throw ArityError("empty factor");
    if (f.length() > x.length()) return false;
    const std::uint64_t m = f.full_mask();
    for (unsigned shift = 0; shift + f.length() <= x.length(); ++shift)
        if (((x.bits() >> shift) & m) == f.bits()) return true;
    return false;
}

std::vector<Run> run_decomposition(const BinaryWord& x) {
    if (x.empty()) throw ArityError("run decomposition of the empty word");
    std::vector<Run> runs;
    for (unsigned i = 1; i <= x.length(); ++i) {
        const int c = x.at(i);
        if (runs.empty() || runs.back().letter != c)
            runs.push_back({c, 1});
        else
            ++runs.back().length;
    }
    return runs;
}

BinaryWord unit_suffix(unsigned length) {
    if (length == 0) throw ArityError("0^{l-1}1 needs l >= 1");
    return BinaryWord::from_bits(1, length);
}

}  // namespace subword
