#include "prgfl/discrepancy.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>

namespace prgfl {

WordSet WordSet::empty_set(int length) {
    if (length < 0 || length > 30) throw BoundsError("word set length must be 0..30");
    WordSet s;
    s.length = length;
    s.member.assign(std::size_t{1} << length, false);
    return s;
}

WordSet WordSet::full(int length) {
    WordSet s = empty_set(length);
    s.member.assign(s.member.size(), true);
    return s;
}

void WordSet::insert(const BitString& w) {
    if (w.length() != length) throw DimensionError("word length does not match the set");
    member[w.index()] = true;
}

void WordSet::insert_index(std::uint64_t index) {
    if (index >= member.size()) throw BoundsError("word index out of range");
    member[index] = true;
}

bool WordSet::contains(const BitString& w) const {
    if (w.length() != length) throw DimensionError("word length does not match the set");
    return member[w.index()];
}

std::uint64_t WordSet::count() const {
    std::uint64_t c = 0;
    for (bool b : member) c += b ? 1 : 0;
    return c;
}

void PairSet::insert(const BitString& x, const BitString& y) {
    if (x.length() != 2 * n || y.length() != 2 * n)
        throw DimensionError("pair members must have length 2n");
    pairs.insert({static_cast<std::uint32_t>(x.index()), static_cast<std::uint32_t>(y.index())});
}

bool PairSet::contains(const BitString& x, const BitString& y) const {
    if (x.length() != 2 * n || y.length() != 2 * n)
        throw DimensionError("pair members must have length 2n");
    return pairs.count(
        {static_cast<std::uint32_t>(x.index()), static_cast<std::uint32_t>(y.index())});
}

namespace {

/// +1 / -1 character of the inner product of two aligned codes.
int sign_of(std::uint32_t x, std::uint32_t y) {
    return std::popcount(x & y) & 1 ? -1 : 1;
}

/// Bits [lo, hi) of an MSB-first code of the given total length.
std::uint32_t segment(std::uint32_t code, int total, int lo, int hi) {
    const int len = hi - lo;
    if (len == 0) return 0;
    return (code >> (total - hi)) & ((std::uint32_t{1} << len) - 1);
}

} // namespace

Rational disc(const PairSet& T) {
    std::int64_t sum = 0;
    for (const auto& [x, y] : T.pairs) sum += sign_of(x, y);
    if (sum < 0) sum = -sum;
    return Rational(BigInt(sum), BigInt(1) << (4 * T.n));
}

RectangleBoundCheck rectangle_bound_check(const WordSet& a, const WordSet& b) {
    if (a.length != b.length) throw DimensionError("rectangle sides must share one length");
    if (a.length % 2 != 0) throw DimensionError("rectangle words must have even length 2n");
    const int n = a.length / 2;
    require_enumerable(4 * n, kDefaultEnumBudget);

    PairSet t;
    t.n = n;
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t x = 0; x < total; ++x) {
        if (!a.contains_index(x)) continue;
        for (std::uint64_t y = 0; y < total; ++y)
            if (b.contains_index(y))
                t.pairs.insert({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
    }

    RectangleBoundCheck check;
    check.disc = disc(t);
    const BigInt card = BigInt(a.count()) * BigInt(b.count());
    check.bound = std::ldexp(std::sqrt(static_cast<double>(card)), -3 * n);
    // disc <= 2^{-3n} sqrt(|A||B|)  <=>  disc^2 * 2^{6n} <= |A||B|.
    check.ok = check.disc * check.disc * pow2(6 * n) <= Rational(card);
    return check;
}

void CaseParams::validate() const {
    if (n < 1) throw ConfigError("case params need n >= 1");
    if (case_tag == 1) {
        if (j < n || j > 2 * n) throw ConfigError("case 1 needs n <= j <= 2n");
    } else if (case_tag == 2) {
        if (j <= 2 * n || j > 3 * n) throw ConfigError("case 2 needs 2n < j <= 3n");
    } else {
        throw ConfigError("case tag must be 1 or 2");
    }
    if (a.length != 4 * n - j) throw ConfigError("A must hold words of length 4n-j");
    if (b.length != j) throw ConfigError("B must hold words of length j");
}

namespace {

/// Leftmost split witnessing case-1 membership, or -1.
int case1_split(const CaseParams& p, std::uint32_t x, std::uint32_t y) {
    const int len = 2 * p.n;
    for (int t = 0; t <= p.j; ++t) {
        const int c = t + 2 * p.n - p.j;
        // y2 y3 x1 x2 has length 4n-j, x3 y1 has length j.
        std::uint32_t a_word = segment(y, len, t, len);
        a_word = (a_word << c) | segment(x, len, 0, c);
        std::uint32_t b_word = segment(x, len, c, len);
        b_word = (b_word << t) | segment(y, len, 0, t);
        if (p.a.contains_index(a_word) && p.b.contains_index(b_word)) return t;
    }
    return -1;
}

int case2_split(const CaseParams& p, std::uint32_t x, std::uint32_t y) {
    const int len = 2 * p.n;
    for (int t = 0; t <= p.j - 2 * p.n; ++t) {
        const int c = t + 4 * p.n - p.j;
        const std::uint32_t a_word = segment(x, len, t, c);
        std::uint32_t b_word = segment(x, len, c, len);
        b_word = (b_word << len) | y;
        b_word = (b_word << t) | segment(x, len, 0, t);
        if (p.a.contains_index(a_word) && p.b.contains_index(b_word)) return t;
    }
    return -1;
}

PairSet build_case(const CaseParams& p) {
    p.validate();
    require_enumerable(4 * p.n, kDefaultEnumBudget);
    PairSet T;
    T.n = p.n;
    const std::uint32_t total = std::uint32_t{1} << (2 * p.n);
    for (std::uint32_t x = 0; x < total; ++x)
        for (std::uint32_t y = 0; y < total; ++y) {
            const int t = p.case_tag == 1 ? case1_split(p, x, y) : case2_split(p, x, y);
            if (t >= 0) T.pairs.insert({x, y});
        }
    return T;
}

} // namespace

PairSet build_T_case1(const CaseParams& p) {
    if (p.case_tag != 1) throw ConfigError("params are not tagged case 1");
    return build_case(p);
}

PairSet build_T_case2(const CaseParams& p) {
    if (p.case_tag != 2) throw ConfigError("params are not tagged case 2");
    return build_case(p);
}

CaseBoundCheck case_bound_check(const CaseParams& p) {
    p.validate();
    CaseBoundCheck check;
    check.disc = disc(p.case_tag == 1 ? build_T_case1(p) : build_T_case2(p));
    check.bound = p.case_tag == 1 ? pow2(p.n - p.j) : pow2(p.j - 3 * p.n);
    check.ok = check.disc <= check.bound;
    return check;
}

bool mu_check(const CaseParams& p) {
    if (p.case_tag != 1) throw ConfigError("the swap map is defined for case-1 params");
    p.validate();
    require_enumerable(4 * p.n, kDefaultEnumBudget);

    const int len = 2 * p.n;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>>
        image;
    const std::uint32_t total = std::uint32_t{1} << len;
    for (std::uint32_t x = 0; x < total; ++x)
        for (std::uint32_t y = 0; y < total; ++y) {
            const int t = case1_split(p, x, y);
            if (t < 0) continue;
            const int c = t + 2 * p.n - p.j;
            // Swap the tails beyond the cut: (x1 x2 y3, y1 y2 x3).
            const std::uint32_t tail_mask = (std::uint32_t{1} << (len - c)) - 1;
            const std::uint32_t xp = (x & ~tail_mask) | (y & tail_mask);
            const std::uint32_t yp = (y & ~tail_mask) | (x & tail_mask);
            if (sign_of(x, y) != sign_of(xp, yp)) return false;
            auto [it, fresh] = image.try_emplace({xp, yp}, std::pair{x, y});
            if (!fresh && it->second != std::pair{x, y}) return false;
        }
    return true;
}

} // namespace prgfl
