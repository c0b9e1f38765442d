#include "prgfl/swap.hpp"

#include <algorithm>
#include <sstream>

namespace prgfl {

namespace {

std::string word_text(const Npda& m, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += m.input.name(w[i]);
    }
    return out.empty() ? "(empty)" : out;
}

bool span_is_clean(const StackTransition& st, int i, int j) {
    const int level = st.height(i);
    if (st.height(i + j) != level) return false;
    for (int b = i; b <= i + j; ++b)
        if (st.height(b) < level) return false;
    return true;
}

} // namespace

std::optional<std::pair<int, int>> minwid_maxwid(const StackTransition& st, Interval I,
                                                 int level) {
    if (I.lo < -1 || I.hi > st.n + 1 || I.lo > I.hi) throw BoundsError("interval out of range");
    std::optional<std::pair<int, int>> result;
    for (int lo = I.lo; lo <= I.hi; ++lo) {
        if (st.height(lo) != level) continue;
        for (int hi = lo + 1; hi <= I.hi; ++hi) {
            if (st.height(hi) < level) break;
            if (st.height(hi) != level) continue;
            const int width = hi - lo;
            if (!result) {
                result = {width, width};
            } else {
                result->first = std::min(result->first, width);
                result->second = std::max(result->second, width);
            }
        }
    }
    return result;
}

IdealWitness find_ideal_subinterval(const StackTransition& st, int j0, int k) {
    if (j0 < 2) throw ConfigError("j0 must be at least 2");
    if (k < 2 * j0 || k > st.n) throw ConfigError("k must satisfy 2*j0 <= k <= n");

    const Interval whole{-1, st.n + 1};
    for (int lo = whole.lo; lo <= whole.hi; ++lo) {
        for (int hi = lo + j0; hi <= std::min(whole.hi, lo + k); ++hi) {
            const int level = st.height(lo);
            if (st.height(hi) != level) continue;
            bool floored = true;
            for (int b = lo; b <= hi; ++b)
                if (st.height(b) < level) {
                    floored = false;
                    break;
                }
            if (!floored) continue;
            auto widths = minwid_maxwid(st, whole, level);
            if (!widths || widths->first > hi - lo || widths->second < hi - lo) continue;
            return IdealWitness{Interval{lo, hi}, level};
        }
    }
    throw ConsistencyError("no ideal subinterval of width in [" + std::to_string(j0) + "," +
                           std::to_string(k) + "] exists on this path");
}

Decomposition decompose(const Npda& m, const Word& w, int j0, int k, const Caps& caps) {
    const int n = static_cast<int>(w.size());
    if (j0 < 2 || k < 2 * j0 || k > n) throw ConfigError("need j0 >= 2 and 2*j0 <= k <= n");

    const PathEnumeration runs = accepting_transitions(m, w, caps);
    if (runs.capped) throw ResourceError("simulation budget hit before any path completed");
    if (runs.paths.empty())
        throw ConsistencyError("word " + word_text(m, w) + " is not accepted; nothing to decompose");

    for (std::size_t p = 0; p < runs.paths.size(); ++p) {
        const StackTransition& st = runs.paths[p];
        for (int i = 0; i <= n; ++i) {
            for (int j = j0; j <= k && i + j <= n; ++j) {
                if (!span_is_clean(st, i, j)) continue;
                Decomposition d;
                d.i = i;
                d.j = j;
                d.u = st.top(i);
                d.v = st.top(i + j);
                d.rooted.assign(st.at(i).begin() + 1, st.at(i).end());
                d.path_index = static_cast<int>(p);

                // Replay guard: the rooted content below both span ends must
                // be the same untouched word.
                std::vector<int> tail(st.at(i + j).begin() + 1, st.at(i + j).end());
                if (tail != d.rooted)
                    throw ConsistencyError("rooted stack mismatch across a clean span");
                return d;
            }
        }
    }
    throw ConsistencyError("accepted word " + word_text(m, w) +
                           " admits no clean span with the requested widths");
}

SwapFamily build_swap_family(const Npda& m, int n, int j0, int k, const Caps& caps) {
    m.validate_normalized();
    if (j0 < 2 || k < 2 * j0 || k > n) throw ConfigError("need j0 >= 2 and 2*j0 <= k <= n");
    const int sigma = m.input.size();
    double total = 1;
    for (int t = 0; t < n; ++t) total *= sigma;
    if (total > static_cast<double>(kDefaultEnumBudget))
        throw ResourceError("alphabet^n too large to sweep");

    SwapFamily family;
    family.n = n;
    family.j0 = j0;
    family.k = k;

    const int worker = m.worker_state();

    // Prefix/stack observations per boundary: (i, top) -> {(x, rooted)}.
    std::map<std::pair<int, int>, std::set<std::pair<Word, std::vector<int>>>> prefixes;

    for_each_word_over(sigma, n, [&](const Word& w) {
        const PathEnumeration runs = accepting_transitions(m, w, caps);
        if (runs.capped) throw ResourceError("simulation budget hit during the family sweep");
        if (runs.truncated) family.truncated = true;
        for (const StackTransition& st : runs.paths) {
            for (int i = 0; i <= n; ++i) {
                const auto& stack = st.at(i);
                Word x(w.begin(), w.begin() + i);
                prefixes[{i, stack.front()}].insert(
                    {std::move(x), std::vector<int>(stack.begin() + 1, stack.end())});
            }
            for (int i = 0; i <= n; ++i) {
                for (int j = j0; j <= k && i + j <= n; ++j) {
                    if (!span_is_clean(st, i, j)) continue;
                    SwapIndex e{i, j, st.top(i), st.top(i + j)};
                    family.entries[e].b_words.insert(Word(w.begin() + i, w.begin() + i + j));
                }
            }
        }
    });

    // Join each observed prefix stack against suffix acceptance from the
    // working state. Memoised on (stack, suffix).
    std::map<std::pair<std::vector<int>, Word>, bool> suffix_ok;
    auto accepts_suffix = [&](std::vector<int> stack, const Word& z) {
        auto key = std::make_pair(std::move(stack), z);
        auto it = suffix_ok.find(key);
        if (it != suffix_ok.end()) return it->second;
        const Outcome o = run_from(m, worker, key.first, z, caps);
        if (o == Outcome::kIndeterminate)
            throw ResourceError("simulation budget hit while probing suffixes");
        const bool ok = o == Outcome::kAccept;
        suffix_ok.emplace(std::move(key), ok);
        return ok;
    };

    for (int i = 0; i <= n; ++i) {
        for (int j = j0; j <= k && i + j <= n; ++j) {
            for (int u = 0; u < m.stack.size(); ++u) {
                auto pit = prefixes.find({i, u});
                if (pit == prefixes.end()) continue;
                for (int v = 0; v < m.stack.size(); ++v) {
                    SwapIndex e{i, j, u, v};
                    for (const auto& [x, rooted] : pit->second) {
                        std::vector<int> stack;
                        stack.reserve(rooted.size() + 1);
                        stack.push_back(v);
                        stack.insert(stack.end(), rooted.begin(), rooted.end());
                        for_each_word_over(sigma, n - i - j, [&](const Word& z) {
                            if (accepts_suffix(stack, z)) family.entries[e].a_pairs.insert({z, x});
                        });
                    }
                }
            }
        }
    }

    // Drop indices that collected nothing on either side.
    for (auto it = family.entries.begin(); it != family.entries.end();) {
        if (it->second.a_pairs.empty() && it->second.b_words.empty())
            it = family.entries.erase(it);
        else
            ++it;
    }
    return family;
}

SwapVerification verify_swapping(const SwapFamily& f, const Npda& m, int n, const Caps& caps) {
    SwapVerification report;
    auto note = [&](bool& flag, const std::string& kind, const std::string& detail) {
        flag = false;
        if (report.counterexamples.size() < 32)
            report.counterexamples.push_back(SwapCounterexample{kind, detail});
    };

    for (const auto& [e, entry] : f.entries) {
        for (const auto& [z, x] : entry.a_pairs) {
            if (static_cast<int>(z.size()) != n - e.i - e.j || static_cast<int>(x.size()) != e.i) {
                std::ostringstream os;
                os << "index (" << e.i << "," << e.j << ") holds a pair with |z|=" << z.size()
                   << ", |x|=" << x.size();
                note(report.shape_ok, "shape", os.str());
            }
        }
        for (const auto& y : entry.b_words) {
            if (static_cast<int>(y.size()) != e.j) {
                std::ostringstream os;
                os << "index (" << e.i << "," << e.j << ") holds a middle with |y|=" << y.size();
                note(report.shape_ok, "shape", os.str());
            }
        }
    }

    // Direct acceptance table over Sigma^n.
    const int sigma = m.input.size();
    std::map<Word, bool> accepted;
    for_each_word_over(sigma, n, [&](const Word& w) {
        const Outcome o = accepts(m, w, caps);
        if (o == Outcome::kIndeterminate)
            throw ResourceError("simulation budget hit while tabulating acceptance");
        accepted[w] = o == Outcome::kAccept;
    });

    for (const auto& [w, in_language] : accepted) {
        bool covered = false;
        for (const auto& [e, entry] : f.entries) {
            if (e.i + e.j > n) continue;
            Word x(w.begin(), w.begin() + e.i);
            Word y(w.begin() + e.i, w.begin() + e.i + e.j);
            Word z(w.begin() + e.i + e.j, w.end());
            if (entry.b_words.count(y) && entry.a_pairs.count({z, x})) {
                covered = true;
                break;
            }
        }
        if (covered != in_language)
            note(report.coverage_ok, "coverage",
                 "word " + word_text(m, w) + (in_language ? " accepted but not covered"
                                                          : " covered but not accepted"));
    }

    for (const auto& [e, entry] : f.entries) {
        for (const auto& [z, x] : entry.a_pairs) {
            for (const auto& y : entry.b_words) {
                Word w = x;
                w.insert(w.end(), y.begin(), y.end());
                w.insert(w.end(), z.begin(), z.end());
                if (!accepted.at(w)) {
                    std::ostringstream os;
                    os << "index (" << e.i << "," << e.j << "," << m.stack.name(e.u) << ","
                       << m.stack.name(e.v) << ") recombines to rejected word "
                       << word_text(m, w);
                    note(report.closure_ok, "closure", os.str());
                }
            }
        }
    }
    return report;
}

} // namespace prgfl
