#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prgfl/fixtures.hpp"
#include "prgfl/io.hpp"
#include "prgfl/npda.hpp"

using namespace prgfl;
namespace fx = prgfl::fixtures;

namespace {
Word bits(const Npda& m, const std::string& text) { return m.word_from_bits(BitString(text)); }
const Caps kCaps = Caps::for_length(16, 256);
} // namespace

TEST_CASE("bracket machine acceptance") {
    const Npda dyck = fx::dyck_npda();
    CHECK(accepts(dyck, bits(dyck, "0011"), kCaps) == Outcome::kAccept);
    CHECK(accepts(dyck, bits(dyck, "01"), kCaps) == Outcome::kAccept);
    CHECK(accepts(dyck, bits(dyck, "010011"), kCaps) == Outcome::kAccept);
    CHECK(accepts(dyck, bits(dyck, "10"), kCaps) == Outcome::kReject);
    CHECK(accepts(dyck, bits(dyck, "0110"), kCaps) == Outcome::kReject);
    CHECK(accepts(dyck, bits(dyck, "0"), kCaps) == Outcome::kReject);
    CHECK(accepts(dyck, {}, kCaps) == Outcome::kReject);  // only the dollar-move could fire
}

TEST_CASE("palindrome and block machines") {
    const Npda pal = fx::even_palindrome_npda();
    CHECK(accepts(pal, bits(pal, "0110"), kCaps) == Outcome::kAccept);
    CHECK(accepts(pal, bits(pal, "00"), kCaps) == Outcome::kAccept);
    CHECK(accepts(pal, bits(pal, "011110"), kCaps) == Outcome::kAccept);
    CHECK(accepts(pal, bits(pal, "01"), kCaps) == Outcome::kReject);
    CHECK(accepts(pal, bits(pal, "010"), kCaps) == Outcome::kReject);

    const Npda block = fx::zeros_then_ones_npda();
    CHECK(accepts(block, bits(block, "0011"), kCaps) == Outcome::kAccept);
    CHECK(accepts(block, bits(block, "000111"), kCaps) == Outcome::kAccept);
    CHECK(accepts(block, bits(block, "0101"), kCaps) == Outcome::kReject);
    CHECK(accepts(block, bits(block, "001"), kCaps) == Outcome::kReject);
}

TEST_CASE("normal form validation") {
    CHECK_NOTHROW(fx::dyck_npda().validate_normalized());
    CHECK_NOTHROW(fx::even_palindrome_npda().validate_normalized());
    CHECK_NOTHROW(fx::zeros_then_ones_npda().validate_normalized());

    Npda push3 = fx::dyck_npda();
    push3.transitions[2].push = {push3.initial_symbol, push3.initial_symbol,
                                 push3.initial_symbol};
    CHECK_THROWS_AS(push3.validate_normalized(), ConfigError);

    Npda bare_z = fx::dyck_npda();
    {
        Npda::Transition t;
        t.state = bare_z.state_id("q1");
        t.read = bare_z.input.require("0");
        t.pop = bare_z.bottom;
        t.push = {bare_z.bottom};
        t.next = bare_z.state_id("q1");
        bare_z.transitions.push_back(t);
    }
    CHECK_THROWS_AS(bare_z.validate_normalized(), ConfigError);

    Npda two_cents = fx::dyck_npda();
    two_cents.transitions.push_back(two_cents.transitions[0]);
    CHECK_THROWS_AS(two_cents.validate_normalized(), ConfigError);

    Npda four_states = fx::dyck_npda();
    four_states.add_state("spare");
    CHECK_THROWS_AS(four_states.validate_normalized(), ConfigError);
}

TEST_CASE("stack transitions record the boundary contents") {
    const Npda dyck = fx::dyck_npda();
    const PathEnumeration runs = accepting_transitions(dyck, bits(dyck, "01"), kCaps);
    REQUIRE(runs.paths.size() == 1);
    CHECK_FALSE(runs.truncated);
    CHECK_FALSE(runs.capped);
    const StackTransition& st = runs.paths[0];
    CHECK(st.n == 2);
    CHECK(st.height(-1) == 1);
    CHECK(st.height(0) == 2);
    CHECK(st.height(1) == 2);
    CHECK(st.height(2) == 1);
    CHECK(st.height(3) == 1);
    CHECK(st.at(-1) == std::vector<int>{dyck.bottom});
    CHECK(st.at(0) == std::vector<int>{dyck.initial_symbol, dyck.bottom});
    CHECK(st.at(2) == std::vector<int>{dyck.bottom});

    CHECK(accepting_transitions(dyck, bits(dyck, "10"), kCaps).paths.empty());
}

TEST_CASE("accepting paths satisfy the endpoint invariants") {
    for (const Npda& m :
         {fx::dyck_npda(), fx::even_palindrome_npda(), fx::zeros_then_ones_npda()}) {
        for (int n = 0; n <= 8; ++n) {
            for_each_word(n, [&](const BitString& w) {
                for (const StackTransition& st : accepting_transitions(m, bits(m, w.str()), kCaps).paths) {
                    CHECK(st.at(-1) == std::vector<int>{m.bottom});
                    CHECK(st.at(0) == std::vector<int>{m.initial_symbol, m.bottom});
                    CHECK(st.at(n) == std::vector<int>{m.bottom});
                    CHECK(st.at(n + 1) == std::vector<int>{m.bottom});
                }
            });
        }
    }
}

TEST_CASE("ambiguous machines yield one transition per path") {
    // Two interchangeable stack symbols make every word twice-derivable.
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
    m.stack.intern("T");
    m.stack.intern("U");
    m.add_transition("q0", Npda::kCent, "z", {"S", "z"}, "q1");
    m.add_transition("q1", Npda::kDollar, "z", {"z"}, "qf");
    m.add_transition("q1", 0, "S", {"T"}, "q1");
    m.add_transition("q1", 0, "S", {"U"}, "q1");
    m.add_transition("q1", 1, "T", {}, "q1");
    m.add_transition("q1", 1, "U", {}, "q1");

    const PathEnumeration runs = accepting_transitions(m, bits(m, "01"), kCaps);
    CHECK(runs.paths.size() == 2);
    for (const auto& st : runs.paths)
        CHECK(st.at(0) == std::vector<int>{m.initial_symbol, m.bottom});

    Caps tight = kCaps;
    tight.path_cap = 1;
    const PathEnumeration capped = accepting_transitions(m, bits(m, "01"), tight);
    CHECK(capped.paths.size() == 1);
    CHECK(capped.truncated);
}

TEST_CASE("cap exhaustion is reported as indeterminate") {
    const Npda dyck = fx::dyck_npda();
    Caps tiny;
    tiny.step_cap = 2;
    tiny.stack_cap = 64;
    CHECK(accepts(dyck, bits(dyck, "0011"), tiny) == Outcome::kIndeterminate);
}

TEST_CASE("suffix runs from the working state") {
    const Npda dyck = fx::dyck_npda();
    const int t = dyck.stack.require("T");
    const int z = dyck.bottom;
    CHECK(run_from(dyck, dyck.worker_state(), {t, z}, bits(dyck, "1"), kCaps) ==
          Outcome::kAccept);
    CHECK(run_from(dyck, dyck.worker_state(), {t, z}, bits(dyck, "11"), kCaps) ==
          Outcome::kReject);
    CHECK(run_from(dyck, dyck.worker_state(), {z}, {}, kCaps) == Outcome::kAccept);
}

TEST_CASE("machine files load and validate") {
    const nlohmann::json spec = {
        {"states", {"q0", "q1", "qf"}},
        {"start", "q0"},
        {"finals", {"qf"}},
        {"input_alphabet", {"0", "1"}},
        {"stack_alphabet", {"z", "S", "T"}},
        {"bottom", "z"},
        {"initial_symbol", "S"},
        {"normalized", true},
        {"transitions",
         {{{"state", "q0"}, {"read", "cent"}, {"pop", "z"}, {"push", {"S", "z"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "dollar"}, {"pop", "z"}, {"push", {"z"}}, {"next", "qf"}},
          {{"state", "q1"}, {"read", "0"}, {"pop", "S"}, {"push", {"S", "T"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "0"}, {"pop", "S"}, {"push", {"T"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "1"}, {"pop", "T"}, {"push", {"S"}}, {"next", "q1"}},
          {{"state", "q1"}, {"read", "1"}, {"pop", "T"}, {"push", nlohmann::json::array()}, {"next", "q1"}}}}};
    const Npda m = load_npda(spec);
    CHECK(accepts(m, bits(m, "0011"), kCaps) == Outcome::kAccept);
    CHECK(accepts(m, bits(m, "10"), kCaps) == Outcome::kReject);

    nlohmann::json broken = spec;
    broken["transitions"][2]["push"] = {"S", "T", "T"};
    CHECK_THROWS_AS(load_npda(broken), ConfigError);
}
