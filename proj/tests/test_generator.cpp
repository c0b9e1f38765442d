#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "prgfl/generator.hpp"
#include "prgfl/iplang.hpp"

using namespace prgfl;

TEST_CASE("seed parse lengths") {
    GenParse p = gen_parse(BitString("101"));
    CHECK(p.a.str().empty());
    CHECK(p.x.str() == "1");
    CHECK(p.y.str() == "0");
    CHECK(p.b == 1);
    CHECK(p.z.str().empty());

    p = gen_parse(BitString("0010000"));
    CHECK(p.x.str() == "00");
    CHECK(p.y.str() == "100");
    CHECK(p.b == 0);
    CHECK(p.z.str() == "0");

    p = gen_parse(BitString("11101"));
    CHECK(p.a.str() == "11");
    CHECK(p.x.str() == "1");
    CHECK(p.y.str() == "0");
    CHECK(p.b == 1);
    CHECK(p.z.str().empty());

    CHECK_THROWS_AS(gen_parse(BitString("10")), BoundsError);

    for (int len = 3; len <= 12; ++len)
        for_each_word(len, [&](const BitString& w) {
            const GenParse q = gen_parse(w);
            CHECK(q.a + q.x + q.y + BitString(q.b ? "1" : "0") + q.z == w);
            CHECK(q.y.length() == 2 * q.m() - 1);
            CHECK(q.z.length() == q.m() - 1);
        });
}

TEST_CASE("case machine on pinned seeds") {
    CHECK(generate(BitString("101")).str() == "1101");   // parity 0, b=1
    CHECK(generate(BitString("111")).str() == "1011");   // parity 1
    CHECK(generate(BitString("100")).str() == "1101");   // y all zero
    CHECK(generate(BitString("0010000")).str() == "00010001");  // flips z_1
    CHECK(generate(BitString("0001001")).str() == "10001001");  // flips x_1
    CHECK(generate(BitString("")).str() == "0");
    CHECK(generate(BitString("11")).str() == "110");
}

TEST_CASE("stretch and soundness up to length 12") {
    for (int len = 0; len <= 12; ++len)
        for_each_word(len, [&](const BitString& w) {
            const BitString u = generate(w);
            CHECK(u.length() == len + 1);
            if (len >= 3) CHECK(ip_member(u));
        });
}

TEST_CASE("a-prefix equivariance") {
    for (int core_len : {3, 7})
        for_each_word(core_len, [&](const BitString& core) {
            const BitString image = generate(core);
            for (int alen = 0; alen <= 3; ++alen)
                for_each_word(alen, [&](const BitString& a) {
                    CHECK(generate(a + core) == a + image);
                });
        });
}

TEST_CASE("inversion on pinned outputs") {
    auto pre = invert(BitString("1101"));
    std::sort(pre.begin(), pre.end());
    REQUIRE(pre.size() == 2);
    CHECK(pre[0].str() == "100");
    CHECK(pre[1].str() == "101");

    CHECK(invert(BitString("0000")).empty());

    pre = invert(BitString("1011"));
    REQUIRE(pre.size() == 1);
    CHECK(pre[0].str() == "111");
}

TEST_CASE("invert agrees with a generate sweep") {
    for (int len = 0; len <= 11; ++len) {
        std::map<BitString, std::vector<BitString>> preimages;
        for_each_word(len, [&](const BitString& w) { preimages[generate(w)].push_back(w); });

        for_each_word(len + 1, [&](const BitString& u) {
            std::vector<BitString> got = invert(u);
            std::sort(got.begin(), got.end());
            auto it = preimages.find(u);
            std::vector<BitString> want = it == preimages.end() ? std::vector<BitString>{}
                                                                : it->second;
            std::sort(want.begin(), want.end());
            CHECK(got == want);
            CHECK(got.size() <= 2);
            if (len + 1 >= 4) {
                CHECK((got.size() == 2) == is_doubled_output(u));
                CHECK((got.size() >= 1) == ip_member(u));
            }
        });
    }
}

TEST_CASE("invert composes with generate up to length 13") {
    for (int len = 0; len <= 13; ++len)
        for_each_word(len, [&](const BitString& w) {
            const auto pre = invert(generate(w));
            CHECK(std::find(pre.begin(), pre.end(), w) != pre.end());
        });
}

TEST_CASE("collision accounting at lengths 4m-1") {
    for (int m = 1; m <= 4; ++m) {
        const int len = 4 * m - 1;
        std::map<BitString, int> multiplicity;
        for_each_word(len, [&](const BitString& w) { ++multiplicity[generate(w)]; });
        std::uint64_t colliding_pairs = 0;
        for (const auto& [u, count] : multiplicity) {
            CHECK(count <= 2);
            if (count == 2) {
                ++colliding_pairs;
                CHECK(is_doubled_output(u));
            }
        }
        CHECK(colliding_pairs == std::uint64_t{1} << (2 * m - 1));
    }
}

TEST_CASE("range statistics at lengths 4m-1") {
    RangeStats s = range_stats(3);
    CHECK(s.range_size == 6);
    CHECK(s.tau == Rational(1, 4));

    s = range_stats(7);
    CHECK(s.range_size == 120);
    CHECK(s.tau == Rational(1, 16));

    s = range_stats(11);
    CHECK(s.range_size == 2016);
    CHECK(s.tau == Rational(1, 64));
}

TEST_CASE("range equals the inner-product slice") {
    CHECK(verify_range_equals_ip(3).equal);
    CHECK(verify_range_equals_ip(7).equal);

    const RangeIpCheck c = verify_range_equals_ip(2);
    CHECK_FALSE(c.equal);
    CHECK(c.short_input_regime);
    CHECK(c.ip_size == 0);
}
