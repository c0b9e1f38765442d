#include "prgfl/transducer.hpp"

#include <functional>
#include <unordered_set>

namespace prgfl {

void NpdaTransducer::validate() const {
    if (emits.size() != machine.transitions.size())
        throw ConfigError("every transition needs an emit word (possibly empty)");
    for (const auto& e : emits)
        for (int id : e)
            if (id < 0 || id >= output.size())
                throw ConfigError("emit word uses an unknown output symbol");
}

std::set<Word> transducer_outputs(const NpdaTransducer& t, const Word& input, const Caps& caps) {
    t.validate();
    const Npda& m = t.machine;
    std::vector<int> tape;
    tape.push_back(Npda::kCent);
    tape.insert(tape.end(), input.begin(), input.end());
    tape.push_back(Npda::kDollar);
    const int tape_len = static_cast<int>(tape.size());

    std::set<Word> outputs;
    std::uint64_t expansions = 0;
    Word written;
    std::unordered_set<std::string> on_path;

    auto key_of = [](int state, int pos, const std::vector<int>& stack) {
        std::string key;
        key.push_back(static_cast<char>(state));
        key.push_back(static_cast<char>(pos));
        for (int v : stack) key.push_back(static_cast<char>(v + 1));
        return key;
    };

    std::function<void(int, int, const std::vector<int>&)> explore =
        [&](int state, int pos, const std::vector<int>& stack) {
            if (++expansions > caps.step_cap)
                throw ResourceError("transducer run exceeded its step budget");
            if (pos == tape_len && m.finals[static_cast<std::size_t>(state)]) {
                outputs.insert(written);
                return;
            }
            if (stack.empty() || static_cast<int>(stack.size()) > caps.stack_cap) return;

            const std::string key = key_of(state, pos, stack);
            if (!on_path.insert(key).second) return;
            const int top = stack.front();
            for (std::size_t ti = 0; ti < m.transitions.size(); ++ti) {
                const auto& tr = m.transitions[ti];
                if (tr.state != state || tr.pop != top) continue;
                bool consumes;
                if (tr.read == Npda::kEps) {
                    consumes = false;
                } else if (pos < tape_len && tr.read == tape[static_cast<std::size_t>(pos)]) {
                    consumes = true;
                } else {
                    continue;
                }
                std::vector<int> next_stack = tr.push;
                next_stack.insert(next_stack.end(), stack.begin() + 1, stack.end());
                const auto& emit = t.emits[ti];
                written.insert(written.end(), emit.begin(), emit.end());
                explore(tr.next, consumes ? pos + 1 : pos, next_stack);
                written.resize(written.size() - emit.size());
            }
            on_path.erase(key);
        };

    explore(m.start, 0, {m.bottom});
    return outputs;
}

Npda range_acceptor(const NpdaTransducer& t) {
    t.validate();
    const Npda& n = t.machine;

    Npda m;
    m.input = t.output;
    m.stack = n.stack;
    m.bottom = n.bottom;
    m.initial_symbol = n.initial_symbol;

    // Two phases per simulated state: before and after the simulated
    // dollar-move. Input may only be guessed in the first phase.
    std::vector<int> pre(n.states.size()), post(n.states.size());
    for (std::size_t q = 0; q < n.states.size(); ++q) {
        pre[q] = m.add_state(n.states[q]);
        post[q] = m.add_state(n.states[q] + ".done");
    }
    const int accept = m.add_state("match");
    m.finals[static_cast<std::size_t>(accept)] = true;
    m.start = pre[static_cast<std::size_t>(n.start)];

    auto add_chain = [&](int src, int dst, const std::vector<int>& reads, int pop,
                         const std::vector<int>& push, const std::string& tag) {
        Npda::Transition tr;
        if (reads.empty()) {
            tr.state = src;
            tr.read = Npda::kEps;
            tr.pop = pop;
            tr.push = push;
            tr.next = dst;
            m.transitions.push_back(std::move(tr));
            return;
        }
        int cur = src;
        for (std::size_t r = 0; r < reads.size(); ++r) {
            const bool last = r + 1 == reads.size();
            const int nxt = last ? dst : m.add_state(tag + ".c" + std::to_string(r));
            if (r == 0) {
                tr = Npda::Transition{};
                tr.state = cur;
                tr.read = reads[r];
                tr.pop = pop;
                tr.push = push;
                tr.next = nxt;
                m.transitions.push_back(tr);
            } else {
                for (int s = 0; s < m.stack.size(); ++s) {
                    tr = Npda::Transition{};
                    tr.state = cur;
                    tr.read = reads[r];
                    tr.pop = s;
                    tr.push = {s};
                    tr.next = nxt;
                    m.transitions.push_back(tr);
                }
            }
            cur = nxt;
        }
    };

    for (std::size_t ti = 0; ti < n.transitions.size(); ++ti) {
        const auto& tr = n.transitions[ti];
        std::vector<int> reads;
        if (tr.read == Npda::kCent) reads.push_back(Npda::kCent);
        reads.insert(reads.end(), t.emits[ti].begin(), t.emits[ti].end());
        const std::string tag = "t" + std::to_string(ti);

        const auto q = static_cast<std::size_t>(tr.state);
        const auto qn = static_cast<std::size_t>(tr.next);
        if (tr.read == Npda::kDollar) {
            add_chain(pre[q], post[qn], reads, tr.pop, tr.push, tag);
        } else if (tr.read == Npda::kEps) {
            add_chain(pre[q], pre[qn], reads, tr.pop, tr.push, tag + ".pre");
            add_chain(post[q], post[qn], reads, tr.pop, tr.push, tag + ".post");
        } else {
            add_chain(pre[q], pre[qn], reads, tr.pop, tr.push, tag);
        }
    }

    for (std::size_t q = 0; q < n.states.size(); ++q) {
        if (!n.finals[q]) continue;
        for (int s = 0; s < m.stack.size(); ++s) {
            Npda::Transition tr;
            tr.state = post[q];
            tr.read = Npda::kDollar;
            tr.pop = s;
            tr.push = {s};
            tr.next = accept;
            m.transitions.push_back(tr);
        }
    }
    return m;
}

} // namespace prgfl
