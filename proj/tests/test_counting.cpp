#include <doctest.h>

#include "oracles.hpp"
#include "subword/counting.hpp"

using namespace subword;

TEST_CASE("worked examples") {
    CHECK(count_subword(BinaryWord::parse("10"), 26) == 5);
    CHECK(count_factor(BinaryWord::parse("10"), 26) == 2);
    CHECK(count_subword(BinaryWord{}, 7) == 1);
    CHECK(count_subword(BinaryWord::parse("0"), 0) == 1);
    CHECK(count_subword(BinaryWord::parse("1"), 0) == 0);
    CHECK(subword_parity(BinaryWord::parse("10"), 26) == 1);
    CHECK(subword_parity(BinaryWord{}, 3) == 1);
    CHECK(expansion_length(0) == 1);
    CHECK(expansion_length(26) == 5);
}

TEST_CASE("subword counts agree with enumeration") {
    for (unsigned l = 0; l <= 4; ++l)
        for (std::uint64_t b = 0; b < (1u << l); ++b) {
            const std::string ws = oracle::all_words_of(b, l);
            const BinaryWord w = BinaryWord::from_bits(b, l);
            for (std::uint64_t n = 0; n <= 700; ++n) {
                const std::uint64_t want = oracle::count_subword_enum(oracle::binary(n), ws);
                REQUIRE(count_subword(w, n) == want);
                REQUIRE(subword_parity(w, n) == static_cast<int>(want & 1));
                if (l) REQUIRE(count_factor(w, n) == oracle::e(ws, n));
            }
        }
}

TEST_CASE("counts beyond 64 bits stay exact") {
    // s_{0^k}(2^62) = C(62, k)
    const auto got = count_subword(BinaryWord::zeros(31), std::uint64_t{1} << 62);
    boost::multiprecision::cpp_int c = 1;
    for (int i = 0; i < 31; ++i) c = c * (62 - i) / (i + 1);
    CHECK(got == c);
}

TEST_CASE("bracket is the prefix-count parity over the support of u") {
    const BinaryWord w = BinaryWord::parse("1011");
    const BinaryWord u = BinaryWord::parse("0101");
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        const int want = static_cast<int>((oracle::s("10", n) + oracle::s("1011", n)) & 1);
        REQUIRE(bracket_eval(w, u, n) == want);
    }
    for (unsigned l = 1; l <= 4; ++l)
        for (std::uint64_t wb = 0; wb < (1u << l); ++wb)
            for (std::uint64_t ub = 0; ub < (1u << l); ++ub)
                for (std::uint64_t n = 0; n < 200; ++n)
                    REQUIRE(bracket_eval(BinaryWord::from_bits(wb, l), BinaryWord::from_bits(ub, l), n) ==
                            oracle::bracket(oracle::all_words_of(wb, l), oracle::all_words_of(ub, l), n));
}

TEST_CASE("prefix parities") {
    const BinaryWord w = BinaryWord::parse("011");
    for (std::uint64_t n = 0; n < 500; ++n) {
        const BinaryWord p = prefix_parities(w, n);
        for (unsigned i = 1; i <= 3; ++i) REQUIRE(p.at(i) == static_cast<int>(oracle::s(w.str().substr(0, i), n) & 1));
    }
}

TEST_CASE("doubling recurrences") {
    CHECK(check_doubling_recurrences(BinaryWord::parse("1"), 1000));
    CHECK(check_doubling_recurrences(BinaryWord::parse("01"), 1000));
    // n = 0 is excluded: s_0(0) = 1 while s_0(0) + s_eps(0) = 2
    CHECK(count_subword(BinaryWord::parse("0"), 0) == 1);
    CHECK(oracle::s("0", 0) + oracle::s("", 0) == 2);
}
