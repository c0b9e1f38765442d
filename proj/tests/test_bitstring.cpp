#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>

#include "prgfl/bitstring.hpp"

using namespace prgfl;

TEST_CASE("inner product parity on fixed words") {
    CHECK(inner_product_parity(BitString("11"), BitString("01")) == 1);
    CHECK(inner_product_parity(BitString("0000"), BitString("1111")) == 0);
    CHECK(inner_product_parity(BitString("101"), BitString("101")) == 0);
    CHECK(inner_product_parity(BitString(""), BitString("")) == 0);
    CHECK_THROWS_AS(inner_product_parity(BitString("10"), BitString("1")), DimensionError);
}

TEST_CASE("slicing matches the pref/suf/midd conventions") {
    const BitString w("10110");
    CHECK(pref(w, 2).str() == "10");
    CHECK(suf(w, 2).str() == "10");
    CHECK(midd(w, 1, 4).str() == "011");
    CHECK(pref(w, 0).str().empty());
    CHECK(suf(w, 5).str() == "10110");
    CHECK_THROWS_AS(pref(w, 6), BoundsError);
    CHECK_THROWS_AS(midd(w, 3, 2), BoundsError);
    CHECK_THROWS_AS(suf(w, -1), BoundsError);
}

TEST_CASE("pref ++ midd ++ suf reassembles every word up to length 8") {
    for (int len = 0; len <= 8; ++len) {
        for_each_word(len, [&](const BitString& w) {
            for (int i = 0; i <= len; ++i)
                for (int j = i; j <= len; ++j)
                    CHECK(pref(w, i) + midd(w, i, j) + suf(w, len - j) == w);
        });
    }
}

TEST_CASE("inner product is symmetric and bilinear mod 2 up to length 8") {
    for (int len = 0; len <= 8; ++len) {
        const std::uint64_t total = std::uint64_t{1} << len;
        std::vector<std::uint8_t> table(total * total);
        for (std::uint64_t u = 0; u < total; ++u)
            for (std::uint64_t v = 0; v < total; ++v)
                table[u * total + v] = static_cast<std::uint8_t>(inner_product_parity(
                    BitString::from_index(u, len), BitString::from_index(v, len)));

        bool symmetric = true, bilinear = true;
        for (std::uint64_t u = 0; u < total; ++u)
            for (std::uint64_t v = 0; v < total; ++v) {
                symmetric = symmetric && table[u * total + v] == table[v * total + u];
                // Oracle route: parity of the bitwise-and popcount.
                bilinear = bilinear &&
                           table[u * total + v] == (std::popcount(u & v) & 1);
            }
        for (std::uint64_t u = 0; len <= 6 && u < total; ++u)
            for (std::uint64_t u2 = 0; u2 < total; ++u2)
                for (std::uint64_t v = 0; v < total; ++v)
                    bilinear = bilinear && table[(u ^ u2) * total + v] ==
                                               (table[u * total + v] ^ table[u2 * total + v]);
        CHECK(symmetric);
        CHECK(bilinear);
    }
}

TEST_CASE("track pairs positions and serializes symbols") {
    const PairedString p = track(BitString("01"), "ab");
    CHECK(p.length() == 2);
    CHECK(p.symbol(0) == "0|a");
    CHECK(p.symbol(1) == "1|b");
    CHECK(track(BitString(""), "").length() == 0);
    CHECK(track(BitString("1"), "0").symbols() == std::vector<std::string>{"1|0"});
    CHECK_THROWS_AS(track(BitString("01"), "x"), DimensionError);
}

TEST_CASE("index round trip and word enumeration order") {
    for (int len = 0; len <= 10; ++len) {
        std::uint64_t expected = 0;
        for_each_word(len, [&](const BitString& w) {
            CHECK(w.index() == expected);
            CHECK(BitString::from_index(expected, len) == w);
            ++expected;
        });
        CHECK(expected == std::uint64_t{1} << len);
    }
    CHECK(BitString::from_index(5, 4).str() == "0101");
    CHECK_THROWS_AS(BitString::from_index(4, 2), BoundsError);
}

TEST_CASE("budget guard") {
    CHECK_NOTHROW(require_enumerable(10, 1 << 10));
    CHECK_THROWS_AS(require_enumerable(11, 1 << 10), ResourceError);
}
