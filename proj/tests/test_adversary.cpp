#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <set>

#include "prgfl/adversary.hpp"
#include "prgfl/fixtures.hpp"
#include "prgfl/io.hpp"

using namespace prgfl;
namespace fx = prgfl::fixtures;

namespace {

std::vector<std::string> syms(const std::string& bits) {
    std::vector<std::string> out;
    for (char c : bits) out.emplace_back(1, c);
    return out;
}

/// Independent oracle: breadth-first expansion of sentential forms. CNF is
/// non-contracting, so forms longer than the limit can be dropped.
std::set<std::string> derivable_words(const CnfGrammar& g, int max_len) {
    struct Form {
        std::string terminals_done;
        std::vector<int> pending;  // nonterminals still to expand, leftmost first
    };
    std::set<std::string> out;
    if (g.accepts_empty) out.insert("");
    std::deque<Form> queue;
    queue.push_back({"", {g.start}});
    while (!queue.empty()) {
        Form f = std::move(queue.front());
        queue.pop_front();
        if (f.pending.empty()) {
            out.insert(f.terminals_done);
            continue;
        }
        if (static_cast<int>(f.terminals_done.size() + f.pending.size()) > max_len) continue;
        const int head = f.pending.front();
        const std::vector<int> rest(f.pending.begin() + 1, f.pending.end());
        for (const auto& [term, mask] : g.terminal_lhs)
            if (mask >> head & 1) queue.push_back({f.terminals_done + term, rest});
        for (const auto& rule : g.rules) {
            if (rule.lhs != head) continue;
            std::vector<int> pending = {rule.left, rule.right};
            pending.insert(pending.end(), rest.begin(), rest.end());
            queue.push_back({f.terminals_done, std::move(pending)});
        }
    }
    return out;
}

} // namespace

TEST_CASE("dfa runs") {
    const Dfa parity = fx::odd_ones_dfa();
    CHECK(dfa_member(parity, syms("1101")));  // three ones
    CHECK_FALSE(dfa_member(parity, syms("11")));
    CHECK_FALSE(dfa_member(parity, {}));  // start state is not accepting
    CHECK(dfa_member(fx::all_words_dfa(), syms("0")));
    CHECK_FALSE(dfa_member(fx::no_words_dfa(), syms("0")));
    CHECK_THROWS_AS(dfa_member(parity, {"2"}), AlphabetError);

    const Dfa first = fx::first_bit_one_dfa();
    CHECK(first.accepts_bits(BitString("10")));
    CHECK_FALSE(first.accepts_bits(BitString("01")));
    CHECK_FALSE(first.accepts_bits(BitString("")));
}

TEST_CASE("cyk on the bracket grammar") {
    const CnfGrammar dyck = fx::dyck_cnf();
    CHECK(cfg_member(dyck, syms("0011")));
    CHECK(cfg_member(dyck, syms("0101")));
    CHECK_FALSE(cfg_member(dyck, syms("10")));
    CHECK_FALSE(cfg_member(dyck, syms("0110")));
    CHECK_FALSE(cfg_member(dyck, {}));

    CnfGrammar with_empty = dyck;
    with_empty.accepts_empty = true;
    CHECK(cfg_member(with_empty, {}));
}

TEST_CASE("cyk agrees with the derivation enumerator up to length 8") {
    const CnfGrammar dyck = fx::dyck_cnf();
    const std::set<std::string> words = derivable_words(dyck, 8);
    for (int len = 0; len <= 8; ++len)
        for_each_word(len, [&](const BitString& w) {
            CHECK(dyck.accepts_bits(w) == (words.count(w.str()) > 0));
        });
}

TEST_CASE("advice wrapping") {
    const Adversary eq = fx::equality_with_advice({{3, "101"}, {4, "0000"}});
    CHECK(eq.accepts(BitString("101")));
    CHECK_FALSE(eq.accepts(BitString("100")));
    CHECK(eq.accepts(BitString("0000")));
    CHECK_THROWS_AS(eq.accepts(BitString("11111")), ConfigError);
    CHECK_THROWS_AS(Adversary::advised(Adversary::from_dfa(fx::all_words_dfa(), "all"),
                                       {{3, "10"}}, "bad"),
                    ConfigError);
}

TEST_CASE("constant advice over an advice-blind base projects to the plain grammar") {
    // Paired-alphabet bracket grammar that ignores the advice track.
    CnfGrammar paired = fx::dyck_cnf();
    paired.terminal_lhs.clear();
    paired.terminal_lhs["0|0"] = 1ull << 2;
    paired.terminal_lhs["1|0"] = 1ull << 3;

    AdviceTable zeros;
    for (int n = 0; n <= 8; ++n) zeros[n] = std::string(static_cast<std::size_t>(n), '0');
    const Adversary advised =
        Adversary::advised(Adversary::from_cnf(paired, "paired-dyck"), zeros, "advised-dyck");

    const CnfGrammar plain = fx::dyck_cnf();
    for (int len = 0; len <= 8; ++len)
        for_each_word(len, [&](const BitString& w) {
            CHECK(advised_member(advised, w) == plain.accepts_bits(w));
        });
}

TEST_CASE("adversary files load") {
    const nlohmann::json dfa_spec = {
        {"type", "dfa"},
        {"name", "parity"},
        {"alphabet", {"0", "1"}},
        {"states", {"even", "odd"}},
        {"start", "even"},
        {"accepting", {"odd"}},
        {"transitions",
         {{"even", {{"0", "even"}, {"1", "odd"}}}, {"odd", {{"0", "odd"}, {"1", "even"}}}}}};
    const Adversary parity = load_adversary(dfa_spec, "inline");
    CHECK(parity.name() == "parity");
    CHECK(parity.accepts(BitString("1101")));
    CHECK_FALSE(parity.accepts(BitString("11")));

    const nlohmann::json cnf_spec = {
        {"type", "cnf"},
        {"nonterminals", {"S", "A", "L", "R"}},
        {"start", "S"},
        {"rules",
         {{{"lhs", "S"}, {"rhs", {"S", "S"}}},
          {{"lhs", "S"}, {"rhs", {"L", "A"}}},
          {{"lhs", "S"}, {"rhs", {"L", "R"}}},
          {{"lhs", "A"}, {"rhs", {"S", "R"}}},
          {{"lhs", "L"}, {"rhs", {"0"}}},
          {{"lhs", "R"}, {"rhs", {"1"}}}}}};
    const Adversary dyck = load_adversary(cnf_spec, "dyck");
    CHECK(dyck.accepts(BitString("0011")));
    CHECK_FALSE(dyck.accepts(BitString("10")));

    nlohmann::json advised_spec = {
        {"type", "advised"},
        {"base",
         {{"type", "dfa"},
          {"alphabet", {"0|0", "1|1", "0|1", "1|0"}},
          {"states", {"ok", "bad"}},
          {"start", "ok"},
          {"accepting", {"ok"}},
          {"transitions",
           {{"ok", {{"0|0", "ok"}, {"1|1", "ok"}, {"0|1", "bad"}, {"1|0", "bad"}}},
            {"bad", {{"0|0", "bad"}, {"1|1", "bad"}, {"0|1", "bad"}, {"1|0", "bad"}}}}}}},
        {"advice", {{"2", "10"}}}};
    const Adversary advised = load_adversary(advised_spec, "advised");
    CHECK(advised.accepts(BitString("10")));
    CHECK_FALSE(advised.accepts(BitString("01")));

    const nlohmann::json npda_spec = {
        {"type", "npda"},
        {"name", "dyck-machine"},
        {"states", {"q0", "q1", "qf"}},
        {"start", "q0"},
        {"finals", {"qf"}},
        {"input_alphabet", {"0", "1"}},
        {"stack_alphabet", {"z", "S", "T"}},
        {"bottom", "z"},
        {"initial_symbol", "S"},
        {"normalized", true},
        {"caps", {{"step_cap", 4096}, {"stack_cap", 256}}},
        {"transitions",
         {{{"state", "q0"}, {"read", "cent"}, {"pop", "z"}, {"push", {"S", "z"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "dollar"}, {"pop", "z"}, {"push", {"z"}}, {"next", "qf"}},
          {{"state", "q1"}, {"read", "0"}, {"pop", "S"}, {"push", {"S", "T"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "0"}, {"pop", "S"}, {"push", {"T"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "1"}, {"pop", "T"}, {"push", {"S"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "1"}, {"pop", "T"}, {"push", nlohmann::json::array()},
           {"next", "q1"}}}}};
    const Adversary machine = load_adversary(npda_spec, "inline");
    CHECK(machine.name() == "dyck-machine");
    CHECK(machine.accepts(BitString("0011")));
    CHECK_FALSE(machine.accepts(BitString("0110")));
    const CnfGrammar plain_dyck = fx::dyck_cnf();
    for (int len = 0; len <= 8; ++len)
        for_each_word(len, [&](const BitString& w) {
            CHECK(machine.accepts(w) == plain_dyck.accepts_bits(w));
        });

    CHECK_THROWS_AS(load_adversary({{"type", "nope"}}, "x"), ConfigError);
    CHECK_THROWS_AS(load_adversary({{"name", "missing type"}}, "x"), ConfigError);
}

TEST_CASE("random dfas are total and reproducible") {
    const Dfa a = fx::random_dfa(6, 42);
    const Dfa b = fx::random_dfa(6, 42);
    CHECK(a.table == b.table);
    CHECK(a.accepting == b.accepting);
    a.validate();
    for_each_word(6, [&](const BitString& w) { (void)a.accepts_bits(w); });
}
