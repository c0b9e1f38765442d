#include "prgfl/fixtures.hpp"

namespace prgfl {
namespace fixtures {

namespace {

/// Three-state shell shared by the normalized machines.
Npda normalized_shell(const std::vector<std::string>& extra_stack) {
    Npda m;
    m.add_state("q0");
    m.add_state("q1");
    m.add_state("qf");
    m.start = 0;
    m.finals[2] = true;
    m.input.intern("0");
    m.input.intern("1");
    m.bottom = m.stack.intern("z");
    m.initial_symbol = m.stack.intern("S");
    for (const auto& s : extra_stack) m.stack.intern(s);
    m.add_transition("q0", Npda::kCent, "z", {"S", "z"}, "q1");
    m.add_transition("q1", Npda::kDollar, "z", {"z"}, "qf");
    m.normalized = true;
    return m;
}

} // namespace

Npda dyck_npda() {
    // S -> 0 S T | 0 T, T -> 1 S | 1 in stack form.
    Npda m = normalized_shell({"T"});
    const int zero = m.input.require("0");
    const int one = m.input.require("1");
    m.add_transition("q1", zero, "S", {"S", "T"}, "q1");
    m.add_transition("q1", zero, "S", {"T"}, "q1");
    m.add_transition("q1", one, "T", {"S"}, "q1");
    m.add_transition("q1", one, "T", {}, "q1");
    return m;
}

Npda even_palindrome_npda() {
    // S -> 0 S Z | 1 S O | 0 Z | 1 O, Z -> 0, O -> 1.
    Npda m = normalized_shell({"Z", "O"});
    const int zero = m.input.require("0");
    const int one = m.input.require("1");
    m.add_transition("q1", zero, "S", {"S", "Z"}, "q1");
    m.add_transition("q1", zero, "S", {"Z"}, "q1");
    m.add_transition("q1", one, "S", {"S", "O"}, "q1");
    m.add_transition("q1", one, "S", {"O"}, "q1");
    m.add_transition("q1", zero, "Z", {}, "q1");
    m.add_transition("q1", one, "O", {}, "q1");
    return m;
}

Npda zeros_then_ones_npda() {
    // S -> 0 S T | 0 T, T -> 1.
    Npda m = normalized_shell({"T"});
    const int zero = m.input.require("0");
    const int one = m.input.require("1");
    m.add_transition("q1", zero, "S", {"S", "T"}, "q1");
    m.add_transition("q1", zero, "S", {"T"}, "q1");
    m.add_transition("q1", one, "T", {}, "q1");
    return m;
}

CnfGrammar dyck_cnf() {
    // S -> S S | L A | L R, A -> S R, L -> 0, R -> 1.
    CnfGrammar g;
    g.nonterminals = {"S", "A", "L", "R"};
    g.start = 0;
    g.accepts_empty = false;
    g.terminal_lhs["0"] = 1ull << 2;
    g.terminal_lhs["1"] = 1ull << 3;
    g.rules = {{0, 0, 0}, {0, 2, 1}, {0, 2, 3}, {1, 0, 3}};
    return g;
}

namespace {

Dfa binary_dfa(int states, int start) {
    Dfa d;
    d.alphabet.intern("0");
    d.alphabet.intern("1");
    d.state_count = states;
    d.start = start;
    d.table.assign(static_cast<std::size_t>(states) * 2, 0);
    d.accepting.assign(static_cast<std::size_t>(states), false);
    return d;
}

} // namespace

Dfa all_words_dfa() {
    Dfa d = binary_dfa(1, 0);
    d.accepting[0] = true;
    return d;
}

Dfa no_words_dfa() { return binary_dfa(1, 0); }

Dfa odd_ones_dfa() {
    Dfa d = binary_dfa(2, 0);
    d.table = {0, 1, 1, 0};  // state 1 = odd number of ones so far
    d.accepting[1] = true;
    return d;
}

Dfa first_bit_one_dfa() {
    // 0 = fresh, 1 = saw leading one, 2 = saw leading zero.
    Dfa d = binary_dfa(3, 0);
    d.table = {2, 1, 1, 1, 2, 2};
    d.accepting[1] = true;
    return d;
}

Dfa random_dfa(int states, std::uint64_t seed) {
    if (states < 1) throw ConfigError("need at least one state");
    Dfa d = binary_dfa(states, 0);
    std::uint64_t x = seed;
    auto next = [&x]() {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (auto& target : d.table) target = static_cast<int>(next() % states);
    bool any = false;
    for (std::size_t s = 0; s < d.accepting.size(); ++s) {
        d.accepting[s] = next() & 1;
        any = any || d.accepting[s];
    }
    if (!any) d.accepting[static_cast<std::size_t>(next() % states)] = true;
    return d;
}

Adversary equality_with_advice(AdviceTable advice) {
    // Base DFA over the paired alphabet: accept while every symbol has
    // matching tracks.
    Dfa base;
    base.state_count = 2;
    base.start = 0;
    for (const char* s : {"0|0", "1|1", "0|1", "1|0"}) base.alphabet.intern(s);
    base.table = {0, 0, 1, 1, 1, 1, 1, 1};
    base.accepting = {true, false};
    return Adversary::advised(Adversary::from_dfa(std::move(base), "track-equality"),
                              std::move(advice), "equality-with-advice");
}

namespace {

/// One-state transducer shell that scans its whole input.
NpdaTransducer scanning_transducer() {
    NpdaTransducer t;
    Npda& m = t.machine;
    m.add_state("t0");
    m.add_state("t1");
    m.add_state("tf");
    m.start = 0;
    m.finals[2] = true;
    m.input.intern("0");
    m.input.intern("1");
    m.bottom = m.stack.intern("z");
    t.output.intern("0");
    t.output.intern("1");
    return t;
}

} // namespace

NpdaTransducer append_zero_transducer() {
    NpdaTransducer t = scanning_transducer();
    Npda& m = t.machine;
    m.add_transition("t0", Npda::kCent, "z", {"z"}, "t1");
    t.emits.push_back({});
    m.add_transition("t1", 0, "z", {"z"}, "t1");
    t.emits.push_back({0});
    m.add_transition("t1", 1, "z", {"z"}, "t1");
    t.emits.push_back({1});
    m.add_transition("t1", Npda::kDollar, "z", {"z"}, "tf");
    t.emits.push_back({0});
    return t;
}

NpdaTransducer identity_transducer() {
    NpdaTransducer t = scanning_transducer();
    Npda& m = t.machine;
    m.add_transition("t0", Npda::kCent, "z", {"z"}, "t1");
    t.emits.push_back({});
    m.add_transition("t1", 0, "z", {"z"}, "t1");
    t.emits.push_back({0});
    m.add_transition("t1", 1, "z", {"z"}, "t1");
    t.emits.push_back({1});
    m.add_transition("t1", Npda::kDollar, "z", {"z"}, "tf");
    t.emits.push_back({});
    return t;
}

NpdaTransducer const_one_transducer() {
    NpdaTransducer t = scanning_transducer();
    Npda& m = t.machine;
    m.add_transition("t0", Npda::kCent, "z", {"z"}, "t1");
    t.emits.push_back({});
    m.add_transition("t1", 0, "z", {"z"}, "t1");
    t.emits.push_back({});
    m.add_transition("t1", 1, "z", {"z"}, "t1");
    t.emits.push_back({});
    m.add_transition("t1", Npda::kDollar, "z", {"z"}, "tf");
    t.emits.push_back({1});
    return t;
}

} // namespace fixtures
} // namespace prgfl
