#ifndef PRGFL_PRG_EVAL_HPP
#define PRGFL_PRG_EVAL_HPP

#include <optional>

#include "prgfl/adversary.hpp"
#include "prgfl/generator.hpp"
#include "prgfl/iplang.hpp"

namespace prgfl {

/// Counter-based deterministic stream: at(i) depends only on (seed, i), so
/// sampled sweeps are reproducible however the work is scheduled.
struct SplitStream {
    std::uint64_t seed = 0;
    std::uint64_t at(std::uint64_t i) const;
};

/// The i-th sampled word of the given length.
BitString sampled_word(const SplitStream& stream, std::uint64_t i, int length);

struct SampleInfo {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double delta = 0.0;
    double radius = 0.0;  // sqrt(ln(2/delta) / (2 samples)), per estimate
};

struct FoolReport {
    int n = 0;
    Rational p_gen;   // Prob over seeds that A accepts G(x)
    Rational p_unif;  // Prob over Sigma^{n+1} that A accepts
    Rational ell;     // |p_gen - p_unif|
    bool exhaustive = true;
    std::optional<SampleInfo> sample;
};

FoolReport fool_exact(const Adversary& a, int n, std::uint64_t budget = kDefaultEnumBudget);

FoolReport fool_sampled(const Adversary& a, int n, std::uint64_t samples, std::uint64_t seed,
                        double delta = 0.05);

/// Finite-length face of the generator/gap-pseudorandomness equivalence at
/// n = 4m-1: ell(n) must equal |(U1 - U0) + 2 |A ∩ D|| / 2^{n+1}, where D
/// is the set of doubled outputs, and differ from the gap statistic at
/// n+1 by at most 2^{-2m}.
struct EquivalenceReport {
    int n = 0;
    int m = 0;
    FoolReport fool;
    GapStat gap;  // over Sigma^{n+1}
    BigInt doubled_hits;
    Rational identity_value;
    Rational bound;  // 2^{-2m}
    bool identity_ok = false;
    bool bound_ok = false;
};

EquivalenceReport equivalence_report(const Adversary& a, int n,
                                     std::uint64_t budget = kDefaultEnumBudget);

} // namespace prgfl

#endif
