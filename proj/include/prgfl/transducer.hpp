#ifndef PRGFL_TRANSDUCER_HPP
#define PRGFL_TRANSDUCER_HPP

#include <set>

#include "prgfl/npda.hpp"

namespace prgfl {

/// Pushdown machine writing to a one-way output track: transition t emits
/// emits[t], a word over the output alphabet. A written string is valid
/// only when its path accepts.
struct NpdaTransducer {
    Npda machine;
    Alphabet output;
    std::vector<std::vector<int>> emits;  // parallel to machine.transitions

    void validate() const;
};

/// All output words produced along accepting paths on cent input dollar.
/// Single-valued transducers yield at most one element.
std::set<Word> transducer_outputs(const NpdaTransducer& t, const Word& input, const Caps& caps);

/// The acceptor of the transducer's range: input guesses become free
/// nondeterminism, every emitted symbol is matched against the acceptor's
/// own tape, and acceptance requires the simulated machine to have taken
/// its dollar-move.
Npda range_acceptor(const NpdaTransducer& t);

} // namespace prgfl

#endif
