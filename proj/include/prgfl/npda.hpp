#ifndef PRGFL_NPDA_HPP
#define PRGFL_NPDA_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prgfl/alphabet.hpp"
#include "prgfl/bitstring.hpp"

namespace prgfl {

/// Input word over a machine's alphabet, as symbol ids.
using Word = std::vector<int>;

/// Simulation budgets. step_cap bounds configuration expansions for one
/// query, stack_cap bounds stack height, path_cap bounds how many accepting
/// paths an enumeration returns.
struct Caps {
    std::uint64_t step_cap = 0;
    int stack_cap = 0;
    std::uint64_t path_cap = 10000;

    static Caps for_length(int n, std::uint64_t factor = 64) {
        Caps c;
        c.step_cap = factor * static_cast<std::uint64_t>(n + 2);
        c.stack_cap = static_cast<int>(factor) * (n + 2);
        return c;
    }
};

enum class Outcome { kAccept, kReject, kIndeterminate };

/// Pushdown machine with endmarkers: accepting runs consume the whole tape
/// cent w dollar and end in a final state. Stacks are written top-first,
/// matching s = s_1 s_2 ... s_m with s_1 on top.
struct Npda {
    static constexpr int kEps = -1;
    static constexpr int kCent = -2;
    static constexpr int kDollar = -3;

    struct Transition {
        int state = 0;
        int read = kEps;  // kEps, kCent, kDollar, or an input symbol id
        int pop = 0;      // stack symbol id consumed
        std::vector<int> push;  // replacement, top-first
        int next = 0;
    };

    std::vector<std::string> states;
    int start = 0;
    std::vector<bool> finals;
    Alphabet input;  // plain input symbols; endmarkers are reads, not symbols
    Alphabet stack;
    int bottom = -1;          // id of the stack start symbol z
    int initial_symbol = -1;  // id of S, when the machine designates one
    std::vector<Transition> transitions;
    bool normalized = false;

    int add_state(const std::string& name);
    int state_id(const std::string& name) const;
    void add_transition(const std::string& state, int read, const std::string& pop,
                        const std::vector<std::string>& push, const std::string& next);

    /// Checks the three-state normal form: the single cent-move
    /// (q0, cent, z) -> (q1, Sz), the single dollar-move
    /// (q1, dollar, z) -> (qf, z), no input move on a bare z, and input
    /// pushes of length at most 2. Throws ConfigError with the violated
    /// condition.
    void validate_normalized() const;

    /// Target state of the cent-move (q1 of the normal form).
    int worker_state() const;

    Word word_from_bits(const BitString& w) const;
    Word word_from_symbols(const std::vector<std::string>& symbols) const;
};

/// Full acceptance of cent w dollar.
Outcome accepts(const Npda& m, const Word& w, const Caps& caps);

/// Runs the machine from an arbitrary configuration over rest ++ dollar.
/// Used for the suffix sets of the swap decomposition.
Outcome run_from(const Npda& m, int state, const std::vector<int>& stack_top_first,
                 const Word& rest, const Caps& caps);

/// Stack contents recorded at every intercell boundary of one accepting
/// path: boundary b in [-1, n+1], with b = -1 before the cent cell.
struct StackTransition {
    int n = 0;
    std::vector<std::vector<int>> contents;  // index b+1; top-first

    const std::vector<int>& at(int boundary) const {
        if (boundary < -1 || boundary > n + 1) throw BoundsError("boundary out of range");
        return contents[static_cast<std::size_t>(boundary + 1)];
    }
    int height(int boundary) const { return static_cast<int>(at(boundary).size()); }
    int top(int boundary) const {
        if (at(boundary).empty()) throw BoundsError("empty stack has no top");
        return at(boundary).front();
    }
};

struct PathEnumeration {
    std::vector<StackTransition> paths;
    bool truncated = false;  // path_cap reached
    bool capped = false;     // step or stack budget hit while paths remained
};

PathEnumeration accepting_transitions(const Npda& m, const Word& w, const Caps& caps);

/// Enumerates all |alphabet|^n words in lexicographic id order.
void for_each_word_over(int alphabet_size, int n, const std::function<void(const Word&)>& fn);

} // namespace prgfl

#endif
