#ifndef PRGFL_ADVERSARY_HPP
#define PRGFL_ADVERSARY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prgfl/alphabet.hpp"
#include "prgfl/bitstring.hpp"
#include "prgfl/iplang.hpp"
#include "prgfl/npda.hpp"

namespace prgfl {

/// Deterministic finite automaton with a total transition table.
struct Dfa {
    Alphabet alphabet;
    int state_count = 0;
    int start = 0;
    std::vector<int> table;  // state * |alphabet| + symbol
    std::vector<bool> accepting;

    int next(int state, int symbol) const {
        return table[static_cast<std::size_t>(state * alphabet.size() + symbol)];
    }
    bool accepts_ids(const std::vector<int>& word) const;
    bool accepts_symbols(const std::vector<std::string>& word) const;
    bool accepts_bits(const BitString& w) const;
    void validate() const;
};

bool dfa_member(const Dfa& d, const std::vector<std::string>& word);

/// Chomsky-normal-form grammar decided by CYK. At most 64 nonterminals.
struct CnfGrammar {
    std::vector<std::string> nonterminals;
    int start = 0;
    bool accepts_empty = false;
    std::map<std::string, std::uint64_t> terminal_lhs;  // terminal -> lhs bit set
    struct Rule {
        int lhs, left, right;
    };
    std::vector<Rule> rules;

    bool accepts_symbols(const std::vector<std::string>& word) const;
    bool accepts_bits(const BitString& w) const;
    void validate() const;
};

bool cfg_member(const CnfGrammar& g, const std::vector<std::string>& word);

/// Per-length advice table; advice(N) must have length exactly N.
using AdviceTable = std::map<int, std::string>;

/// A decidable language over the binary alphabet, wrapped uniformly so the
/// fooling and gap sweeps can treat all adversary kinds alike.
class Adversary {
public:
    Adversary() = default;

    static Adversary from_dfa(Dfa d, std::string name);
    static Adversary from_cnf(CnfGrammar g, std::string name);
    static Adversary from_npda(Npda m, Caps caps, std::string name);
    static Adversary from_predicate(Predicate fn, std::string name);

    /// Advice wrapper: w is a member when the paired word track(w, h(|w|))
    /// belongs to the base language over the paired alphabet.
    static Adversary advised(Adversary base, AdviceTable advice, std::string name);

    bool accepts(const BitString& w) const;
    bool accepts_symbols(const std::vector<std::string>& word) const;
    const std::string& name() const;

    Predicate predicate() const;

    struct Impl;

private:
    explicit Adversary(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool advised_member(const Adversary& advised_language, const BitString& w);

} // namespace prgfl

#endif
