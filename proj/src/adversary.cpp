#include "prgfl/adversary.hpp"

namespace prgfl {

bool Dfa::accepts_ids(const std::vector<int>& word) const {
    int state = start;
    for (int sym : word) state = next(state, sym);
    return accepting[static_cast<std::size_t>(state)];
}

bool Dfa::accepts_symbols(const std::vector<std::string>& word) const {
    std::vector<int> ids;
    ids.reserve(word.size());
    for (const auto& s : word) ids.push_back(alphabet.require(s));
    return accepts_ids(ids);
}

bool Dfa::accepts_bits(const BitString& w) const {
    const int zero = alphabet.require("0");
    const int one = alphabet.require("1");
    int state = start;
    for (int i = 0; i < w.length(); ++i) state = next(state, w.bit(i) ? one : zero);
    return accepting[static_cast<std::size_t>(state)];
}

void Dfa::validate() const {
    if (state_count <= 0) throw ConfigError("dfa needs at least one state");
    if (start < 0 || start >= state_count) throw ConfigError("dfa start state out of range");
    if (static_cast<int>(accepting.size()) != state_count)
        throw ConfigError("dfa accepting vector size mismatch");
    if (static_cast<int>(table.size()) != state_count * alphabet.size())
        throw ConfigError("dfa transition table must be total");
    for (int v : table)
        if (v < 0 || v >= state_count) throw ConfigError("dfa transition target out of range");
}

bool dfa_member(const Dfa& d, const std::vector<std::string>& word) {
    return d.accepts_symbols(word);
}

void CnfGrammar::validate() const {
    const int k = static_cast<int>(nonterminals.size());
    if (k == 0 || k > 64) throw ConfigError("cnf grammar needs 1..64 nonterminals");
    if (start < 0 || start >= k) throw ConfigError("cnf start symbol out of range");
    for (const auto& r : rules)
        if (r.lhs < 0 || r.lhs >= k || r.left < 0 || r.left >= k || r.right < 0 || r.right >= k)
            throw ConfigError("cnf rule references an unknown nonterminal");
    for (const auto& [term, mask] : terminal_lhs)
        if (k < 64 && mask >> k)
            throw ConfigError("terminal production references an unknown nonterminal");
}

bool CnfGrammar::accepts_symbols(const std::vector<std::string>& word) const {
    const int n = static_cast<int>(word.size());
    if (n > 4096)
        throw ResourceError("cubic-time parse budget exceeded for a word of length " +
                            std::to_string(n));
    if (n == 0) return accepts_empty;

    // cell(i, len) = set of nonterminals deriving word[i .. i+len).
    std::vector<std::uint64_t> cell(static_cast<std::size_t>(n) * (n + 1), 0);
    auto at = [&](int i, int len) -> std::uint64_t& {
        return cell[static_cast<std::size_t>(len) * n + i];
    };

    for (int i = 0; i < n; ++i) {
        auto it = terminal_lhs.find(word[static_cast<std::size_t>(i)]);
        at(i, 1) = it == terminal_lhs.end() ? 0 : it->second;
    }
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            std::uint64_t mask = 0;
            for (int split = 1; split < len; ++split) {
                const std::uint64_t l = at(i, split);
                const std::uint64_t r = at(i + split, len - split);
                if (!l || !r) continue;
                for (const auto& rule : rules)
                    if ((l >> rule.left & 1) && (r >> rule.right & 1)) mask |= 1ull << rule.lhs;
            }
            at(i, len) = mask;
        }
    }
    return at(0, n) >> start & 1;
}

bool CnfGrammar::accepts_bits(const BitString& w) const {
    std::vector<std::string> syms;
    syms.reserve(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i) syms.push_back(w.bit(i) ? "1" : "0");
    return accepts_symbols(syms);
}

bool cfg_member(const CnfGrammar& g, const std::vector<std::string>& word) {
    return g.accepts_symbols(word);
}

struct Adversary::Impl {
    std::string name;
    virtual ~Impl() = default;
    virtual bool contains_bits(const BitString& w) const = 0;
    virtual bool contains_symbols(const std::vector<std::string>& word) const = 0;
};

namespace {

BitString bits_from_symbols(const std::vector<std::string>& word) {
    std::string text;
    for (const auto& s : word) {
        if (s != "0" && s != "1")
            throw AlphabetError("expected a binary word, found symbol '" + s + "'");
        text += s;
    }
    return BitString(text);
}

struct DfaImpl final : Adversary::Impl {
    Dfa dfa;
    bool contains_bits(const BitString& w) const override { return dfa.accepts_bits(w); }
    bool contains_symbols(const std::vector<std::string>& word) const override {
        return dfa.accepts_symbols(word);
    }
};

struct CnfImpl final : Adversary::Impl {
    CnfGrammar grammar;
    bool contains_bits(const BitString& w) const override { return grammar.accepts_bits(w); }
    bool contains_symbols(const std::vector<std::string>& word) const override {
        return grammar.accepts_symbols(word);
    }
};

struct NpdaImpl final : Adversary::Impl {
    Npda machine;
    Caps caps;
    bool run(const Word& w) const {
        Caps c = caps;
        if (c.step_cap == 0) c = Caps::for_length(static_cast<int>(w.size()));
        const Outcome o = accepts(machine, w, c);
        if (o == Outcome::kIndeterminate)
            throw ResourceError("npda adversary hit its simulation caps; raise them");
        return o == Outcome::kAccept;
    }
    bool contains_bits(const BitString& w) const override {
        return run(machine.word_from_bits(w));
    }
    bool contains_symbols(const std::vector<std::string>& word) const override {
        return run(machine.word_from_symbols(word));
    }
};

struct PredicateImpl final : Adversary::Impl {
    Predicate fn;
    bool contains_bits(const BitString& w) const override { return fn(w); }
    bool contains_symbols(const std::vector<std::string>& word) const override {
        return fn(bits_from_symbols(word));
    }
};

struct AdvisedImpl final : Adversary::Impl {
    Adversary base;
    AdviceTable advice;
    bool contains_bits(const BitString& w) const override {
        auto it = advice.find(w.length());
        if (it == advice.end())
            throw ConfigError("advice table has no entry for length " +
                              std::to_string(w.length()));
        return base.accepts_symbols(track(w, it->second).symbols());
    }
    bool contains_symbols(const std::vector<std::string>& word) const override {
        return contains_bits(bits_from_symbols(word));
    }
};

} // namespace

Adversary Adversary::from_dfa(Dfa d, std::string name) {
    d.validate();
    auto impl = std::make_shared<DfaImpl>();
    impl->name = std::move(name);
    impl->dfa = std::move(d);
    return Adversary(impl);
}

Adversary Adversary::from_cnf(CnfGrammar g, std::string name) {
    g.validate();
    auto impl = std::make_shared<CnfImpl>();
    impl->name = std::move(name);
    impl->grammar = std::move(g);
    return Adversary(impl);
}

Adversary Adversary::from_npda(Npda m, Caps caps, std::string name) {
    auto impl = std::make_shared<NpdaImpl>();
    impl->name = std::move(name);
    impl->machine = std::move(m);
    impl->caps = caps;
    return Adversary(impl);
}

Adversary Adversary::from_predicate(Predicate fn, std::string name) {
    auto impl = std::make_shared<PredicateImpl>();
    impl->name = std::move(name);
    impl->fn = std::move(fn);
    return Adversary(impl);
}

Adversary Adversary::advised(Adversary base, AdviceTable advice, std::string name) {
    for (const auto& [length, h] : advice)
        if (static_cast<int>(h.size()) != length)
            throw ConfigError("advice for length " + std::to_string(length) +
                              " has length " + std::to_string(h.size()));
    auto impl = std::make_shared<AdvisedImpl>();
    impl->name = std::move(name);
    impl->base = std::move(base);
    impl->advice = std::move(advice);
    return Adversary(impl);
}

bool Adversary::accepts(const BitString& w) const {
    if (!impl_) throw ConfigError("empty adversary");
    return impl_->contains_bits(w);
}

bool Adversary::accepts_symbols(const std::vector<std::string>& word) const {
    if (!impl_) throw ConfigError("empty adversary");
    return impl_->contains_symbols(word);
}

const std::string& Adversary::name() const {
    if (!impl_) throw ConfigError("empty adversary");
    return impl_->name;
}

Predicate Adversary::predicate() const {
    auto impl = impl_;
    if (!impl) throw ConfigError("empty adversary");
    return [impl](const BitString& w) { return impl->contains_bits(w); };
}

bool advised_member(const Adversary& advised_language, const BitString& w) {
    return advised_language.accepts(w);
}

} // namespace prgfl
