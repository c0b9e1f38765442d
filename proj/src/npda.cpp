#include "prgfl/npda.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace prgfl {

int Npda::add_state(const std::string& name) {
    states.push_back(name);
    finals.push_back(false);
    return static_cast<int>(states.size()) - 1;
}

int Npda::state_id(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    throw ConfigError("unknown state '" + name + "'");
}

void Npda::add_transition(const std::string& state, int read, const std::string& pop,
                          const std::vector<std::string>& push, const std::string& next) {
    Transition t;
    t.state = state_id(state);
    t.read = read;
    t.pop = stack.require(pop);
    for (const auto& s : push) t.push.push_back(stack.require(s));
    t.next = state_id(next);
    transitions.push_back(std::move(t));
}

void Npda::validate_normalized() const {
    if (states.size() != 3) throw ConfigError("normal form needs exactly three states");
    int final_count = 0, final_state = -1;
    for (std::size_t i = 0; i < finals.size(); ++i)
        if (finals[i]) {
            ++final_count;
            final_state = static_cast<int>(i);
        }
    if (final_count != 1 || final_state == start)
        throw ConfigError("normal form needs a single final state distinct from the start");
    if (bottom < 0 || initial_symbol < 0)
        throw ConfigError("normal form needs designated z and S stack symbols");

    int cent_moves = 0, dollar_moves = 0, worker = -1;
    for (const auto& t : transitions) {
        if (t.read == kCent) {
            ++cent_moves;
            if (t.state != start || t.pop != bottom || t.push.size() != 2 ||
                t.push[0] != initial_symbol || t.push[1] != bottom)
                throw ConfigError("the cent-move must be (q0, cent, z) -> (q1, Sz)");
            worker = t.next;
        }
    }
    if (cent_moves != 1) throw ConfigError("normal form needs exactly one cent-move");
    if (worker == start || worker == final_state)
        throw ConfigError("the cent-move must enter the working state");

    for (const auto& t : transitions) {
        if (t.read == kCent) continue;
        if (t.state == start) throw ConfigError("only the cent-move may leave the start state");
        if (t.state == final_state) throw ConfigError("no moves may leave the final state");
        if (t.read == kDollar) {
            ++dollar_moves;
            if (t.state != worker || t.pop != bottom || t.next != final_state ||
                t.push != std::vector<int>{bottom})
                throw ConfigError("the dollar-move must be (q1, dollar, z) -> (qf, z)");
            continue;
        }
        if (t.read >= 0) {
            if (t.pop == bottom)
                throw ConfigError("no input move may pop the bare stack start symbol");
            if (t.push.size() > 2) throw ConfigError("input moves may push at most two symbols");
        }
        if (t.next != worker) throw ConfigError("working moves must stay in the working state");
    }
    if (dollar_moves != 1) throw ConfigError("normal form needs exactly one dollar-move");
}

int Npda::worker_state() const {
    for (const auto& t : transitions)
        if (t.read == kCent) return t.next;
    throw ConfigError("machine has no cent-move");
}

Word Npda::word_from_bits(const BitString& w) const {
    const int zero = input.require("0");
    const int one = input.require("1");
    Word out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i) out.push_back(w.bit(i) ? one : zero);
    return out;
}

Word Npda::word_from_symbols(const std::vector<std::string>& symbols) const {
    Word out;
    out.reserve(symbols.size());
    for (const auto& s : symbols) out.push_back(input.require(s));
    return out;
}

namespace {

void append_u16(std::string& s, int v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
}

std::string config_key(int state, int pos, const std::vector<int>& stack) {
    std::string key;
    key.reserve(4 + 2 * stack.size());
    append_u16(key, state);
    append_u16(key, pos);
    for (int v : stack) append_u16(key, v);
    return key;
}

struct Config {
    int state;
    int pos;
    std::vector<int> stack;  // top-first
};

/// Breadth-first reachability over deduplicated configurations.
Outcome search(const Npda& m, const std::vector<int>& tape, int start_state,
               const std::vector<int>& start_stack, const Caps& caps) {
    const int tape_len = static_cast<int>(tape.size());
    std::deque<Config> frontier;
    std::unordered_set<std::string> seen;
    bool pruned = false;

    auto enqueue = [&](int state, int pos, std::vector<int> stack) {
        if (static_cast<int>(stack.size()) > caps.stack_cap) {
            pruned = true;
            return;
        }
        std::string key = config_key(state, pos, stack);
        if (!seen.insert(std::move(key)).second) return;
        frontier.push_back(Config{state, pos, std::move(stack)});
    };

    enqueue(start_state, 0, start_stack);
    std::uint64_t expansions = 0;

    while (!frontier.empty()) {
        if (++expansions > caps.step_cap) return Outcome::kIndeterminate;
        Config c = std::move(frontier.front());
        frontier.pop_front();

        if (c.pos == tape_len && m.finals[static_cast<std::size_t>(c.state)])
            return Outcome::kAccept;
        if (c.stack.empty()) continue;

        const int top = c.stack.front();
        for (const auto& t : m.transitions) {
            if (t.state != c.state || t.pop != top) continue;
            int next_pos;
            if (t.read == Npda::kEps) {
                next_pos = c.pos;
            } else if (c.pos < tape_len && t.read == tape[static_cast<std::size_t>(c.pos)]) {
                next_pos = c.pos + 1;
            } else {
                continue;
            }
            std::vector<int> stack = t.push;
            stack.insert(stack.end(), c.stack.begin() + 1, c.stack.end());
            enqueue(t.next, next_pos, std::move(stack));
        }
    }
    return pruned ? Outcome::kIndeterminate : Outcome::kReject;
}

std::vector<int> full_tape(const Word& w) {
    std::vector<int> tape;
    tape.reserve(w.size() + 2);
    tape.push_back(Npda::kCent);
    tape.insert(tape.end(), w.begin(), w.end());
    tape.push_back(Npda::kDollar);
    return tape;
}

} // namespace

Outcome accepts(const Npda& m, const Word& w, const Caps& caps) {
    return search(m, full_tape(w), m.start, {m.bottom}, caps);
}

Outcome run_from(const Npda& m, int state, const std::vector<int>& stack_top_first,
                 const Word& rest, const Caps& caps) {
    std::vector<int> tape = rest;
    tape.push_back(Npda::kDollar);
    return search(m, tape, state, stack_top_first, caps);
}

PathEnumeration accepting_transitions(const Npda& m, const Word& w, const Caps& caps) {
    const std::vector<int> tape = full_tape(w);
    const int tape_len = static_cast<int>(tape.size());
    const int n = static_cast<int>(w.size());

    PathEnumeration result;
    std::uint64_t expansions = 0;
    std::vector<std::vector<int>> snapshots;  // stack after each consumed cell
    std::unordered_set<std::string> on_path;  // lambda-cycle guard

    std::function<void(int, int, const std::vector<int>&)> explore =
        [&](int state, int pos, const std::vector<int>& stack) {
            if (result.truncated || result.capped) return;
            if (++expansions > caps.step_cap) {
                result.capped = true;
                return;
            }
            if (pos == tape_len && m.finals[static_cast<std::size_t>(state)]) {
                if (result.paths.size() >= caps.path_cap) {
                    result.truncated = true;
                    return;
                }
                StackTransition st;
                st.n = n;
                st.contents = snapshots;
                result.paths.push_back(std::move(st));
                return;
            }
            if (stack.empty() || static_cast<int>(stack.size()) > caps.stack_cap) {
                if (static_cast<int>(stack.size()) > caps.stack_cap) result.capped = true;
                return;
            }

            std::string key = config_key(state, pos, stack);
            if (!on_path.insert(key).second) return;

            const int top = stack.front();
            for (const auto& t : m.transitions) {
                if (t.state != state || t.pop != top) continue;
                bool consumes;
                if (t.read == Npda::kEps) {
                    consumes = false;
                } else if (pos < tape_len && t.read == tape[static_cast<std::size_t>(pos)]) {
                    consumes = true;
                } else {
                    continue;
                }
                std::vector<int> next_stack = t.push;
                next_stack.insert(next_stack.end(), stack.begin() + 1, stack.end());
                if (consumes) snapshots.push_back(next_stack);
                explore(t.next, consumes ? pos + 1 : pos, next_stack);
                if (consumes) snapshots.pop_back();
            }
            on_path.erase(key);
        };

    snapshots.push_back({m.bottom});  // boundary -1
    explore(m.start, 0, {m.bottom});
    return result;
}

void for_each_word_over(int alphabet_size, int n, const std::function<void(const Word&)>& fn) {
    if (alphabet_size <= 0) {
        if (n == 0) fn(Word{});
        return;
    }
    Word w(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(w);
        int pos = n - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == alphabet_size - 1) {
            w[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
    }
}

} // namespace prgfl
