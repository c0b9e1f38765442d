#include "prgfl/prg_eval.hpp"

#include <cmath>

namespace prgfl {

std::uint64_t SplitStream::at(std::uint64_t i) const {
    std::uint64_t x = seed + (i + 1) * 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

BitString sampled_word(const SplitStream& stream, std::uint64_t i, int length) {
    const int chunks = (length + 63) / 64;
    std::string text;
    text.reserve(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t) {
        const std::uint64_t chunk = stream.at(i * static_cast<std::uint64_t>(chunks) +
                                              static_cast<std::uint64_t>(t / 64));
        text.push_back((chunk >> (t % 64)) & 1 ? '1' : '0');
    }
    return BitString(text);
}

FoolReport fool_exact(const Adversary& a, int n, std::uint64_t budget) {
    require_enumerable(n + 1, budget);
    std::uint64_t gen_hits = 0, unif_hits = 0;
    for_each_word(n, [&](const BitString& w) {
        if (a.accepts(generate(w))) ++gen_hits;
    });
    for_each_word(n + 1, [&](const BitString& u) {
        if (a.accepts(u)) ++unif_hits;
    });

    FoolReport r;
    r.n = n;
    r.p_gen = Rational(BigInt(gen_hits), BigInt(1) << n);
    r.p_unif = Rational(BigInt(unif_hits), BigInt(1) << (n + 1));
    r.ell = r.p_gen > r.p_unif ? r.p_gen - r.p_unif : r.p_unif - r.p_gen;
    r.exhaustive = true;
    return r;
}

FoolReport fool_sampled(const Adversary& a, int n, std::uint64_t samples, std::uint64_t seed,
                        double delta) {
    if (samples < 1) throw ConfigError("need at least one sample");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0,1)");

    const SplitStream seed_stream{seed};
    const SplitStream gen_stream{seed_stream.at(1)};
    const SplitStream unif_stream{seed_stream.at(2)};

    std::uint64_t gen_hits = 0, unif_hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (a.accepts(generate(sampled_word(gen_stream, i, n)))) ++gen_hits;
        if (a.accepts(sampled_word(unif_stream, i, n + 1))) ++unif_hits;
    }

    FoolReport r;
    r.n = n;
    r.p_gen = Rational(BigInt(gen_hits), BigInt(samples));
    r.p_unif = Rational(BigInt(unif_hits), BigInt(samples));
    r.ell = r.p_gen > r.p_unif ? r.p_gen - r.p_unif : r.p_unif - r.p_gen;
    r.exhaustive = false;
    SampleInfo info;
    info.samples = samples;
    info.seed = seed;
    info.delta = delta;
    info.radius = std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(samples)));
    r.sample = info;
    return r;
}

EquivalenceReport equivalence_report(const Adversary& a, int n, std::uint64_t budget) {
    if (n < 3 || n % 4 != 3)
        throw ConfigError("the equivalence identity is stated for lengths n = 4m-1");

    EquivalenceReport rep;
    rep.n = n;
    rep.m = (n + 1) / 4;
    rep.fool = fool_exact(a, n, budget);
    rep.gap = gap_stat(ip_member, a.predicate(), n + 1, budget);

    // Doubled outputs at length n+1 = 4m: cores x 1 0^{2m-1} 1 z.
    const int m = rep.m;
    const BitString mid = BitString("1") + BitString::zeros(2 * m - 1) + BitString("1");
    std::uint64_t hits = 0;
    for_each_word(m, [&](const BitString& x) {
        for_each_word(m - 1, [&](const BitString& z) {
            if (a.accepts(x + mid + z)) ++hits;
        });
    });
    rep.doubled_hits = hits;

    BigInt signed_sum = rep.gap.u1 - rep.gap.u0 + 2 * rep.doubled_hits;
    if (signed_sum < 0) signed_sum = -signed_sum;
    rep.identity_value = Rational(signed_sum, BigInt(1) << (n + 1));
    rep.identity_ok = rep.fool.ell == rep.identity_value;

    rep.bound = pow2(-2 * m);
    const Rational drift =
        rep.fool.ell > rep.gap.gap ? rep.fool.ell - rep.gap.gap : rep.gap.gap - rep.fool.ell;
    rep.bound_ok = drift <= rep.bound;

    if (!rep.identity_ok)
        throw ConsistencyError("fooling/gap identity violated for adversary '" + a.name() +
                               "' at n=" + std::to_string(n));
    if (!rep.bound_ok)
        throw ConsistencyError("fooling/gap bound violated for adversary '" + a.name() +
                               "' at n=" + std::to_string(n));
    return rep;
}

} // namespace prgfl
