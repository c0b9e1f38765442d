#include "prgfl/generator.hpp"

#include "prgfl/iplang.hpp"

namespace prgfl {

namespace {

BitString one_bit(int b) { return BitString(b ? "1" : "0"); }

/// Minimal 1-based index i with y_i = 1, or 0 when y is all zero.
int first_one(const BitString& y) {
    for (int i = 0; i < y.length(); ++i)
        if (y.bit(i)) return i + 1;
    return 0;
}

} // namespace

GenParse gen_parse(const BitString& w) {
    const int n = w.length();
    if (n < 3) throw BoundsError("gen_parse needs |w| >= 3");
    const int r = (n + 1) % 4;
    const int m = (n + 1 - r) / 4;
    GenParse p;
    p.a = pref(w, r);
    p.x = midd(w, r, r + m);
    p.y = midd(w, r + m, r + 3 * m - 1);
    p.b = w.bit(r + 3 * m - 1);
    p.z = suf(w, m - 1);
    return p;
}

BitString generate(const BitString& w) {
    if (w.length() < 3) return w + BitString("0");
    const GenParse p = gen_parse(w);
    const int m = p.m();
    const int parity = inner_product_parity(p.z + p.x, p.y);

    BitString core;
    if (parity == 1) {
        core = p.x + one_bit(1 - p.b) + p.y + one_bit(p.b) + p.z;
    } else if (p.b == 1) {
        core = p.x + one_bit(1) + p.y + one_bit(1) + p.z;
    } else {
        const int i = first_one(p.y);
        if (i == 0) {
            core = p.x + one_bit(1) + p.y + one_bit(1) + p.z;
        } else if (i <= m - 1) {
            core = p.x + one_bit(0) + p.y + one_bit(0) + p.z.with_bit_flipped(i - 1);
        } else {
            core = p.x.with_bit_flipped(i - m) + one_bit(0) + p.y + one_bit(0) + p.z;
        }
    }
    return p.a + core;
}

std::vector<BitString> invert(const BitString& u) {
    std::vector<BitString> out;
    if (u.length() <= 3) {
        if (u.length() >= 1 && u.bit(u.length() - 1) == 0) out.push_back(pref(u, u.length() - 1));
        return out;
    }

    const IpParse p = ip_parse(u);
    const int m = p.m();
    const int b1 = p.y.bit(0);
    const int b2 = p.z.bit(0);
    const BitString y = suf(p.y, 2 * m - 1);
    const BitString z = suf(p.z, m - 1);

    if (b1 != b2) {
        if (inner_product_parity(z + p.x, y) == 1)
            out.push_back(p.a + p.x + y + one_bit(b2) + z);
    } else if (b1 == 1) {
        if (inner_product_parity(z + p.x, y) == 0)
            out.push_back(p.a + p.x + y + one_bit(1) + z);
        if (first_one(y) == 0)
            out.push_back(p.a + p.x + y + one_bit(0) + z);
    } else {
        const int i = first_one(y);
        if (i != 0) {
            BitString w = i <= m - 1 ? p.a + p.x + y + one_bit(0) + z.with_bit_flipped(i - 1)
                                     : p.a + p.x.with_bit_flipped(i - m) + y + one_bit(0) + z;
            if (generate(w) == u) out.push_back(w);
        }
    }
    return out;
}

bool is_doubled_output(const BitString& u) {
    if (u.length() < 4) return false;
    const IpParse p = ip_parse(u);
    if (p.m() == 0) return false;
    if (p.y.bit(0) != 1 || p.z.bit(0) != 1) return false;
    return first_one(suf(p.y, 2 * p.m() - 1)) == 0;
}

RangeStats range_stats(int N, std::uint64_t budget) {
    require_enumerable(N, budget);
    std::vector<bool> image(std::size_t{1} << (N + 1), false);
    for_each_word(N, [&](const BitString& w) { image[generate(w).index()] = true; });

    std::uint64_t size = 0;
    for (bool hit : image) size += hit ? 1 : 0;

    RangeStats s;
    s.n = N;
    s.range_size = size;
    s.tau = Rational(1) - Rational(BigInt(size), BigInt(1) << N);
    return s;
}

RangeIpCheck verify_range_equals_ip(int N, std::uint64_t budget) {
    require_enumerable(N + 1, budget);
    std::vector<bool> image(std::size_t{1} << (N + 1), false);
    for_each_word(N, [&](const BitString& w) { image[generate(w).index()] = true; });

    RangeIpCheck c;
    c.n = N;
    c.short_input_regime = N < 3;
    std::uint64_t range_size = 0, ip_size = 0;
    bool equal = true;
    for_each_word(N + 1, [&](const BitString& u) {
        const bool in_range = image[u.index()];
        const bool in_ip = ip_member(u);
        range_size += in_range ? 1 : 0;
        ip_size += in_ip ? 1 : 0;
        if (in_range != in_ip) equal = false;
    });
    c.range_size = range_size;
    c.ip_size = ip_size;
    c.equal = equal;
    return c;
}

} // namespace prgfl
