#ifndef PRGFL_DISCREPANCY_HPP
#define PRGFL_DISCREPANCY_HPP

#include <set>
#include <utility>

#include "prgfl/bitstring.hpp"
#include "prgfl/rational.hpp"

namespace prgfl {

/// Finite subset of Sigma^length kept as a membership bitmap.
struct WordSet {
    int length = 0;
    std::vector<bool> member;

    static WordSet empty_set(int length);
    static WordSet full(int length);

    void insert(const BitString& w);
    void insert_index(std::uint64_t index);
    bool contains(const BitString& w) const;
    bool contains_index(std::uint64_t index) const { return member[index]; }
    std::uint64_t count() const;
};

/// Pair set over Sigma^{2n} x Sigma^{2n}; words are stored as MSB-first
/// codes. n is the half-length parameter of the discrepancy sections.
struct PairSet {
    int n = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;

    void insert(const BitString& x, const BitString& y);
    bool contains(const BitString& x, const BitString& y) const;
    std::uint64_t size() const { return pairs.size(); }
};

/// 2^{-4n} | sum over T of (-1)^{x . y} |, exact.
Rational disc(const PairSet& T);

struct RectangleBoundCheck {
    Rational disc;
    double bound = 0.0;  // 2^{-3n} sqrt(|A||B|), for display
    bool ok = false;     // compared exactly via squares
};

/// The rectangle discrepancy bound for A' x B' with A', B' of length 2n.
RectangleBoundCheck rectangle_bound_check(const WordSet& a, const WordSet& b);

/// Parameters of the two structured T-set constructions. Case 1 needs
/// n <= j <= 2n, case 2 needs 2n < j <= 3n; A holds words of length 4n-j
/// and B words of length j.
struct CaseParams {
    int n = 0;
    int j = 0;
    int case_tag = 1;
    WordSet a;
    WordSet b;

    void validate() const;
};

/// Pairs (x, y) admitting a split x1 x2 x3 / y1 y2 y3 with middle blocks of
/// length 2n-j such that y2 y3 x1 x2 is in A and x3 y1 is in B. The split
/// is existential.
PairSet build_T_case1(const CaseParams& p);

/// Pairs admitting a split with middle blocks of length 4n-j such that x2
/// is in A and x3 y x1 is in B.
PairSet build_T_case2(const CaseParams& p);

struct CaseBoundCheck {
    Rational disc;
    Rational bound;  // 2^{n-j} or 2^{j-3n}
    bool ok = false;
};

CaseBoundCheck case_bound_check(const CaseParams& p);

/// Checks that the tail-swapping map (x1 x2 y3, y1 y2 x3), evaluated at the
/// leftmost valid split of each pair, is injective on the case-1 T-set and
/// preserves the character value.
bool mu_check(const CaseParams& p);

} // namespace prgfl

#endif
