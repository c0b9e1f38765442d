#ifndef PRGFL_FIXTURES_HPP
#define PRGFL_FIXTURES_HPP

#include "prgfl/adversary.hpp"
#include "prgfl/npda.hpp"
#include "prgfl/transducer.hpp"

namespace prgfl {
namespace fixtures {

/// Normalized machine for nonempty balanced bracket words (0 opens,
/// 1 closes).
Npda dyck_npda();

/// Normalized machine for even-length binary palindromes.
Npda even_palindrome_npda();

/// Normalized machine for { 0^i 1^i : i >= 1 }.
Npda zeros_then_ones_npda();

/// CNF grammar for the nonempty balanced bracket words.
CnfGrammar dyck_cnf();

Dfa all_words_dfa();
Dfa no_words_dfa();
Dfa odd_ones_dfa();
Dfa first_bit_one_dfa();

/// Uniformly drawn total transition table and accepting set.
Dfa random_dfa(int states, std::uint64_t seed);

/// Advice-wrapped equality language: w is a member when w equals the
/// advice word for |w|. The base compares the two tracks symbolwise.
Adversary equality_with_advice(AdviceTable advice);

/// f(x) = x 0.
NpdaTransducer append_zero_transducer();
/// f(x) = x.
NpdaTransducer identity_transducer();
/// f(x) = "1" for every x.
NpdaTransducer const_one_transducer();

} // namespace fixtures
} // namespace prgfl

#endif
