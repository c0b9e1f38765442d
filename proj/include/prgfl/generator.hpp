#ifndef PRGFL_GENERATOR_HPP
#define PRGFL_GENERATOR_HPP

#include <vector>

#include "prgfl/bitstring.hpp"
#include "prgfl/rational.hpp"

namespace prgfl {

/// Seed decomposition w = a x y b z with |a| = (|w|+1) mod 4, |x| = m,
/// |y| = 2m-1, |z| = m-1, where |w|+1 = |a| + 4m. Requires |w| >= 3.
struct GenParse {
    BitString a, x, y, z;
    int b = 0;
    int m() const { return x.length(); }
};

GenParse gen_parse(const BitString& w);

/// The stretch-(n+1) generator. Total: words shorter than 3 map to w0.
BitString generate(const BitString& w);

/// All preimages of u under generate. Cardinality is 0, 1, or 2; it is 2
/// exactly when the core of u has the shape x 1 0^{2m-1} 1 z.
std::vector<BitString> invert(const BitString& u);

/// u lies in the doubled-image set: both seeds x y 1 z and x y 0 z (y all
/// zero) map onto it.
bool is_doubled_output(const BitString& u);

struct RangeStats {
    int n = 0;
    BigInt range_size;
    Rational tau;  // 1 - range_size / 2^n
};

/// Image size of generate on Sigma^N, by full enumeration.
RangeStats range_stats(int N, std::uint64_t budget = kDefaultEnumBudget);

struct RangeIpCheck {
    int n = 0;
    bool equal = false;
    BigInt range_size;
    BigInt ip_size;
    bool short_input_regime = false;  // N < 3: outputs cannot be members
};

/// Set equality {generate(w) : |w| = N} = IP ∩ Sigma^{N+1}.
RangeIpCheck verify_range_equals_ip(int N, std::uint64_t budget = kDefaultEnumBudget);

} // namespace prgfl

#endif
