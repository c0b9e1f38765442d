#ifndef PRGFL_SWAP_HPP
#define PRGFL_SWAP_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "prgfl/npda.hpp"

namespace prgfl {

/// Boundary interval [lo, hi] in intercell coordinates.
struct Interval {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo; }
};

/// Minimal and maximal widths of subintervals of I whose two endpoint
/// boundaries sit at height `level` with no boundary in between below it.
/// Empty result when no such proper subinterval exists.
std::optional<std::pair<int, int>> minwid_maxwid(const StackTransition& st, Interval I,
                                                 int level);

struct IdealWitness {
    Interval interval;
    int level = 0;
};

/// Exhaustive search over the whole boundary range for a level-floored
/// subinterval of width in [j0, k]. Absence would falsify the
/// height-interval lemma for this path and raises ConsistencyError.
IdealWitness find_ideal_subinterval(const StackTransition& st, int j0, int k);

/// One witness split w = x y z for an accepted word: the stack is
/// u . rooted just after x and v . rooted just after y, and rooted is
/// never consulted while y is read.
struct Decomposition {
    int i = 0;
    int j = 0;
    int u = 0;  // stack symbol id on top after x
    int v = 0;  // stack symbol id on top after y
    std::vector<int> rooted;
    int path_index = 0;
};

Decomposition decompose(const Npda& m, const Word& w, int j0, int k, const Caps& caps);

struct SwapIndex {
    int i = 0;
    int j = 0;
    int u = 0;
    int v = 0;
    auto operator<=>(const SwapIndex&) const = default;
};

struct SwapEntry {
    std::set<std::pair<Word, Word>> a_pairs;  // (z, x) with |z| = n-i-j, |x| = i
    std::set<Word> b_words;                   // y with |y| = j
};

struct SwapFamily {
    int n = 0;
    int j0 = 0;
    int k = 0;
    std::map<SwapIndex, SwapEntry> entries;
    bool truncated = false;  // some path enumeration hit its path cap
};

/// Populates the family from every accepting path of every length-n input:
/// prefix/stack pairs joined against suffix acceptance for the a-side,
/// clean stack spans for the b-side.
SwapFamily build_swap_family(const Npda& m, int n, int j0, int k, const Caps& caps);

struct SwapCounterexample {
    std::string kind;
    std::string detail;
};

struct SwapVerification {
    bool shape_ok = true;
    bool coverage_ok = true;
    bool closure_ok = true;
    std::vector<SwapCounterexample> counterexamples;
    bool ok() const { return shape_ok && coverage_ok && closure_ok; }
};

/// Checks (a) member shapes, (b) membership equivalence of the family
/// against direct acceptance over Sigma^n, (c) acceptance of every
/// cross-combined word x y z with (z,x) from the a-side and y from the
/// b-side of the same index.
SwapVerification verify_swapping(const SwapFamily& f, const Npda& m, int n, const Caps& caps);

} // namespace prgfl

#endif
