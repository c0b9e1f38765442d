#ifndef PRGFL_IO_HPP
#define PRGFL_IO_HPP

#include <string>

#include <json.hpp>

#include "prgfl/adversary.hpp"
#include "prgfl/discrepancy.hpp"
#include "prgfl/npda.hpp"
#include "prgfl/transducer.hpp"

namespace prgfl {

/// Adversary files: {"type": "dfa" | "cnf" | "npda" | "advised", ...}.
Adversary load_adversary(const nlohmann::json& spec, const std::string& name_hint);
Adversary load_adversary_file(const std::string& path);

/// Machine files: states, start, finals, alphabets and transitions
/// {state, read, pop, push, next} with read "eps", "cent", "dollar" or a
/// symbol name. Transducer files add an output alphabet and per-transition
/// "emit" words.
Npda load_npda(const nlohmann::json& spec);
Npda load_npda_file(const std::string& path);
NpdaTransducer load_transducer(const nlohmann::json& spec);
NpdaTransducer load_transducer_file(const std::string& path);

/// Word-set files: {"length": L, "words": [lowercase hex codes...]}.
WordSet load_word_set(const nlohmann::json& spec);
WordSet load_word_set_file(const std::string& path);
nlohmann::json word_set_to_json(const WordSet& s);

nlohmann::json read_json_file(const std::string& path);

} // namespace prgfl

#endif
