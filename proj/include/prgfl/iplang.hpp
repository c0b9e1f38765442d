#ifndef PRGFL_IPLANG_HPP
#define PRGFL_IPLANG_HPP

#include <functional>

#include "prgfl/bitstring.hpp"
#include "prgfl/rational.hpp"

namespace prgfl {

/// Canonical decomposition u = a x y z with |a| = |u| mod 4, |x| = |z| = m,
/// |y| = 2m. The split is unique: |a| is forced by length arithmetic.
struct IpParse {
    BitString a, x, y, z;
    int m() const { return x.length(); }
};

using Predicate = std::function<bool(const BitString&)>;

/// Total; every word has exactly one parse (m = 0 allowed).
IpParse ip_parse(const BitString& u);

/// Membership in the inner-product language: zx (.) y odd under the
/// canonical parse. Words with m = 0 are non-members.
bool ip_member(const BitString& u);

/// |IP ∩ Sigma^N| by full enumeration.
BigInt ip_dense_exhaustive(int N, std::uint64_t budget = kDefaultEnumBudget);

/// |IP ∩ Sigma^N| in closed form: 2^r (2^{2m}-1) 2^{2m-1} for m >= 1,
/// where r = N mod 4; zero when m = 0.
BigInt ip_dense_closed_form(int N);

/// The two intersection counts behind the gap statistic at one length.
struct GapStat {
    int n = 0;
    BigInt u1;     // |L ∩ A ∩ Sigma^n|
    BigInt u0;     // |complement(L) ∩ A ∩ Sigma^n|
    Rational gap;  // |u1 - u0| / 2^n
};

GapStat gap_stat(const Predicate& language, const Predicate& adversary, int N,
                 std::uint64_t budget = kDefaultEnumBudget);

} // namespace prgfl

#endif
