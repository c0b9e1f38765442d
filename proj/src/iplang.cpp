#include "prgfl/iplang.hpp"

namespace prgfl {

IpParse ip_parse(const BitString& u) {
    const int n = u.length();
    const int r = n % 4;
    const int m = (n - r) / 4;
    IpParse p;
    p.a = pref(u, r);
    p.x = midd(u, r, r + m);
    p.y = midd(u, r + m, r + 3 * m);
    p.z = suf(u, m);
    return p;
}

bool ip_member(const BitString& u) {
    const IpParse p = ip_parse(u);
    if (p.m() == 0) return false;
    return inner_product_parity(p.z + p.x, p.y) == 1;
}

BigInt ip_dense_exhaustive(int N, std::uint64_t budget) {
    require_enumerable(N, budget);
    std::uint64_t count = 0;
    for_each_word(N, [&](const BitString& w) {
        if (ip_member(w)) ++count;
    });
    return BigInt(count);
}

BigInt ip_dense_closed_form(int N) {
    if (N < 0) throw BoundsError("negative length");
    const int r = N % 4;
    const int m = (N - r) / 4;
    if (m == 0) return 0;
    const BigInt blocks = (BigInt(1) << (2 * m)) - 1;
    return (BigInt(1) << r) * blocks * (BigInt(1) << (2 * m - 1));
}

GapStat gap_stat(const Predicate& language, const Predicate& adversary, int N,
                 std::uint64_t budget) {
    require_enumerable(N, budget);
    std::uint64_t in_both = 0, in_adv_only = 0;
    for_each_word(N, [&](const BitString& w) {
        if (!adversary(w)) return;
        if (language(w))
            ++in_both;
        else
            ++in_adv_only;
    });
    GapStat s;
    s.n = N;
    s.u1 = in_both;
    s.u0 = in_adv_only;
    BigInt diff = s.u1 - s.u0;
    if (diff < 0) diff = -diff;
    s.gap = Rational(diff, BigInt(1) << N);
    return s;
}

} // namespace prgfl
