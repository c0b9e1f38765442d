#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "prgfl/discrepancy.hpp"

using namespace prgfl;

namespace {

std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

WordSet random_set(int length, std::uint64_t& state, int density_percent) {
    WordSet s = WordSet::empty_set(length);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << length); ++i)
        if (mix(state) % 100 < static_cast<std::uint64_t>(density_percent)) s.insert_index(i);
    return s;
}

PairSet full_pairs(int n) {
    PairSet t;
    t.n = n;
    for (std::uint32_t x = 0; x < (1u << (2 * n)); ++x)
        for (std::uint32_t y = 0; y < (1u << (2 * n)); ++y) t.pairs.insert({x, y});
    return t;
}

/// Independent oracle for the structured T-sets: direct string splitting
/// against plain word sets, no code arithmetic shared with the builder.
std::set<std::pair<std::string, std::string>> oracle_case(int case_tag, int n, int j,
                                                          const std::set<std::string>& A,
                                                          const std::set<std::string>& B) {
    std::set<std::pair<std::string, std::string>> T;
    for_each_word(2 * n, [&](const BitString& xw) {
        for_each_word(2 * n, [&](const BitString& yw) {
            const std::string x = xw.str(), y = yw.str();
            const int mid = case_tag == 1 ? 2 * n - j : 4 * n - j;
            const int t_max = 2 * n - mid;
            for (int t = 0; t <= t_max; ++t) {
                const int c = t + mid;
                const std::string x1 = x.substr(0, t), x2 = x.substr(t, mid), x3 = x.substr(c);
                const std::string y1 = y.substr(0, t), y2 = y.substr(t, mid), y3 = y.substr(c);
                bool hit;
                if (case_tag == 1)
                    hit = A.count(y2 + y3 + x1 + x2) && B.count(x3 + y1);
                else
                    hit = A.count(x2) && B.count(x3 + y1 + y2 + y3 + x1);
                if (hit) {
                    T.insert({x, y});
                    break;
                }
            }
        });
    });
    return T;
}

std::set<std::string> to_strings(const WordSet& s) {
    std::set<std::string> out;
    for (std::uint64_t i = 0; i < s.member.size(); ++i)
        if (s.member[i]) out.insert(BitString::from_index(i, s.length).str());
    return out;
}

std::set<std::pair<std::string, std::string>> to_strings(const PairSet& t) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [x, y] : t.pairs)
        out.insert({BitString::from_index(x, 2 * t.n).str(),
                    BitString::from_index(y, 2 * t.n).str()});
    return out;
}

} // namespace

TEST_CASE("discrepancy of simple pair sets") {
    PairSet empty;
    empty.n = 2;
    CHECK(disc(empty) == 0);

    PairSet single;
    single.n = 2;
    single.insert(BitString("0110"), BitString("1001"));
    CHECK(disc(single) == pow2(-8));

    CHECK(disc(full_pairs(1)) == Rational(1, 4));
    for (int n = 1; n <= 3; ++n) CHECK(disc(full_pairs(n)) == pow2(-2 * n));
}

TEST_CASE("rectangle bound") {
    RectangleBoundCheck full = rectangle_bound_check(WordSet::full(2), WordSet::full(2));
    CHECK(full.disc == Rational(1, 4));
    CHECK(full.bound == doctest::Approx(0.5));
    CHECK(full.ok);

    const RectangleBoundCheck empty = rectangle_bound_check(WordSet::empty_set(2), WordSet::full(2));
    CHECK(empty.disc == 0);
    CHECK(empty.ok);

    std::uint64_t state = 2024;
    for (int trial = 0; trial < 100; ++trial) {
        const WordSet a = random_set(4, state, 10 + (trial % 9) * 10);
        const WordSet b = random_set(4, state, 10 + (trial % 7) * 12);
        CHECK(rectangle_bound_check(a, b).ok);
    }
}

TEST_CASE("structured T-sets match the split-enumeration oracle") {
    std::uint64_t state = 99;
    const int n = 2;
    for (int j = n; j <= 2 * n; ++j) {
        CaseParams p{n, j, 1, WordSet::full(4 * n - j), WordSet::full(j)};
        CHECK(build_T_case1(p).size() == std::uint64_t{1} << (4 * n));

        p.a = WordSet::empty_set(4 * n - j);
        CHECK(build_T_case1(p).size() == 0);

        for (int trial = 0; trial < 8; ++trial) {
            p.a = random_set(4 * n - j, state, 40);
            p.b = random_set(j, state, 60);
            CHECK(to_strings(build_T_case1(p)) ==
                  oracle_case(1, n, j, to_strings(p.a), to_strings(p.b)));
        }
    }
    for (int j = 2 * n + 1; j <= 3 * n; ++j) {
        CaseParams p{n, j, 2, WordSet::full(4 * n - j), WordSet::full(j)};
        CHECK(build_T_case2(p).size() == std::uint64_t{1} << (4 * n));

        p.b = WordSet::empty_set(j);
        CHECK(build_T_case2(p).size() == 0);

        for (int trial = 0; trial < 8; ++trial) {
            p.a = random_set(4 * n - j, state, 50);
            p.b = random_set(j, state, 50);
            CHECK(to_strings(build_T_case2(p)) ==
                  oracle_case(2, n, j, to_strings(p.a), to_strings(p.b)));
        }
    }
}

TEST_CASE("case bounds hold on random draws") {
    std::uint64_t state = 31337;
    for (int n = 2; n <= 3; ++n) {
        for (int j = n; j <= 2 * n; ++j)
            for (int trial = 0; trial < 10; ++trial) {
                CaseParams p{n, j, 1, random_set(4 * n - j, state, 50),
                             random_set(j, state, 50)};
                const CaseBoundCheck c = case_bound_check(p);
                CHECK(c.bound == pow2(n - j));
                CHECK(c.ok);
            }
        for (int j = 2 * n + 1; j <= 3 * n; ++j)
            for (int trial = 0; trial < 10; ++trial) {
                CaseParams p{n, j, 2, random_set(4 * n - j, state, 50),
                             random_set(j, state, 50)};
                const CaseBoundCheck c = case_bound_check(p);
                CHECK(c.bound == pow2(j - 3 * n));
                CHECK(c.ok);
            }
    }
}

TEST_CASE("boundary full-set case at n=3, j=6") {
    CaseParams p{3, 6, 1, WordSet::full(6), WordSet::full(6)};
    const CaseBoundCheck c = case_bound_check(p);
    CHECK(c.disc == pow2(-6));
    CHECK(c.bound == pow2(-3));
    CHECK(c.ok);
}

TEST_CASE("tail-swap map on the stated cases") {
    for (int j = 2; j <= 4; ++j) {
        CaseParams p{2, j, 1, WordSet::full(8 - j), WordSet::full(j)};
        CHECK(mu_check(p));
    }

    CaseParams empty{2, 3, 1, WordSet::empty_set(5), WordSet::empty_set(3)};
    CHECK(mu_check(empty));

    // Singleton: all-zero constraint words force T = {(0000, 0000)}.
    CaseParams single{2, 3, 1, WordSet::empty_set(5), WordSet::empty_set(3)};
    single.a.insert(BitString("00000"));
    single.b.insert(BitString("000"));
    CHECK(build_T_case1(single).size() == 1);
    CHECK(mu_check(single));

    CaseParams case2{2, 5, 2, WordSet::full(3), WordSet::full(5)};
    CHECK_THROWS_AS(mu_check(case2), ConfigError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_T_case1(CaseParams{2, 5, 1, WordSet::full(3), WordSet::full(5)}),
                    ConfigError);
    CHECK_THROWS_AS(build_T_case2(CaseParams{2, 4, 2, WordSet::full(4), WordSet::full(4)}),
                    ConfigError);
    CHECK_THROWS_AS(build_T_case1(CaseParams{2, 3, 1, WordSet::full(4), WordSet::full(3)}),
                    ConfigError);
    CHECK_THROWS_AS(rectangle_bound_check(WordSet::full(2), WordSet::full(4)), DimensionError);
}
