#include "prgfl/io.hpp"

#include <fstream>
#include <sstream>

namespace prgfl {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

namespace {

const json& need(const json& spec, const char* key) {
    auto it = spec.find(key);
    if (it == spec.end()) throw ConfigError(std::string("missing field '") + key + "'");
    return *it;
}

std::string need_string(const json& spec, const char* key) {
    const json& v = need(spec, key);
    if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Dfa parse_dfa(const json& spec) {
    Dfa d;
    for (const auto& sym : need(spec, "alphabet")) d.alphabet.intern(sym.get<std::string>());

    std::vector<std::string> state_names;
    for (const auto& s : need(spec, "states")) state_names.push_back(s.get<std::string>());
    d.state_count = static_cast<int>(state_names.size());
    auto state_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < state_names.size(); ++i)
            if (state_names[i] == name) return static_cast<int>(i);
        throw ConfigError("unknown dfa state '" + name + "'");
    };

    d.start = state_id(need_string(spec, "start"));
    d.accepting.assign(static_cast<std::size_t>(d.state_count), false);
    for (const auto& s : need(spec, "accepting"))
        d.accepting[static_cast<std::size_t>(state_id(s.get<std::string>()))] = true;

    d.table.assign(static_cast<std::size_t>(d.state_count) * d.alphabet.size(), -1);
    const json& rows = need(spec, "transitions");
    for (auto it = rows.begin(); it != rows.end(); ++it) {
        const int from = state_id(it.key());
        for (auto jt = it->begin(); jt != it->end(); ++jt) {
            const int sym = d.alphabet.require(jt.key());
            d.table[static_cast<std::size_t>(from * d.alphabet.size() + sym)] =
                state_id(jt->get<std::string>());
        }
    }
    for (int v : d.table)
        if (v < 0) throw ConfigError("dfa transition table is not total");
    d.validate();
    return d;
}

CnfGrammar parse_cnf(const json& spec) {
    CnfGrammar g;
    for (const auto& nt : need(spec, "nonterminals")) g.nonterminals.push_back(nt.get<std::string>());
    if (g.nonterminals.size() > 64) throw ConfigError("at most 64 nonterminals supported");
    auto nt_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < g.nonterminals.size(); ++i)
            if (g.nonterminals[i] == name) return static_cast<int>(i);
        throw ConfigError("unknown nonterminal '" + name + "'");
    };
    g.start = nt_id(need_string(spec, "start"));
    g.accepts_empty = spec.value("empty_word", false);

    for (const auto& rule : need(spec, "rules")) {
        const int lhs = nt_id(need_string(rule, "lhs"));
        const json& rhs = need(rule, "rhs");
        if (rhs.size() == 1) {
            g.terminal_lhs[rhs[0].get<std::string>()] |= 1ull << lhs;
        } else if (rhs.size() == 2) {
            g.rules.push_back(
                {lhs, nt_id(rhs[0].get<std::string>()), nt_id(rhs[1].get<std::string>())});
        } else {
            throw ConfigError("cnf rules need one terminal or two nonterminals");
        }
    }
    g.validate();
    return g;
}

int parse_read(const Npda& m, const std::string& text) {
    if (text == "eps") return Npda::kEps;
    if (text == "cent" || text == "¢") return Npda::kCent;
    if (text == "dollar" || text == "$") return Npda::kDollar;
    return m.input.require(text);
}

Caps parse_caps(const json& spec) {
    Caps caps;  // zero step_cap means "derive from word length"
    if (spec.contains("caps")) {
        const json& c = spec["caps"];
        caps.step_cap = c.value("step_cap", std::uint64_t{0});
        caps.stack_cap = c.value("stack_cap", 0);
        caps.path_cap = c.value("path_cap", std::uint64_t{10000});
    }
    return caps;
}

} // namespace

Npda load_npda(const json& spec) {
    Npda m;
    for (const auto& s : need(spec, "states")) m.add_state(s.get<std::string>());
    m.start = m.state_id(need_string(spec, "start"));
    for (const auto& s : need(spec, "finals"))
        m.finals[static_cast<std::size_t>(m.state_id(s.get<std::string>()))] = true;
    for (const auto& sym : need(spec, "input_alphabet")) m.input.intern(sym.get<std::string>());
    for (const auto& sym : need(spec, "stack_alphabet")) m.stack.intern(sym.get<std::string>());
    m.bottom = m.stack.require(need_string(spec, "bottom"));
    if (spec.contains("initial_symbol"))
        m.initial_symbol = m.stack.require(spec["initial_symbol"].get<std::string>());
    m.normalized = spec.value("normalized", false);

    for (const auto& t : need(spec, "transitions")) {
        std::vector<std::string> push;
        for (const auto& p : need(t, "push")) push.push_back(p.get<std::string>());
        m.add_transition(need_string(t, "state"), parse_read(m, need_string(t, "read")),
                         need_string(t, "pop"), push, need_string(t, "next"));
    }
    if (m.normalized) m.validate_normalized();
    return m;
}

Npda load_npda_file(const std::string& path) { return load_npda(read_json_file(path)); }

NpdaTransducer load_transducer(const json& spec) {
    NpdaTransducer t;
    t.machine = load_npda(spec);
    for (const auto& sym : need(spec, "output_alphabet")) t.output.intern(sym.get<std::string>());

    const json& rows = need(spec, "transitions");
    for (const auto& row : rows) {
        std::vector<int> emit;
        if (row.contains("emit")) {
            const json& e = row["emit"];
            if (e.is_string()) {
                for (char c : e.get<std::string>()) emit.push_back(t.output.require(std::string(1, c)));
            } else {
                for (const auto& sym : e) emit.push_back(t.output.require(sym.get<std::string>()));
            }
        }
        t.emits.push_back(std::move(emit));
    }
    t.validate();
    return t;
}

NpdaTransducer load_transducer_file(const std::string& path) {
    return load_transducer(read_json_file(path));
}

Adversary load_adversary(const json& spec, const std::string& name_hint) {
    const std::string type = need_string(spec, "type");
    const std::string name = spec.value("name", name_hint);
    if (type == "dfa") return Adversary::from_dfa(parse_dfa(spec), name);
    if (type == "cnf") return Adversary::from_cnf(parse_cnf(spec), name);
    if (type == "npda") return Adversary::from_npda(load_npda(spec), parse_caps(spec), name);
    if (type == "advised") {
        AdviceTable advice;
        for (auto it = need(spec, "advice").begin(); it != need(spec, "advice").end(); ++it) {
            int length;
            try {
                length = std::stoi(it.key());
            } catch (const std::exception&) {
                throw ConfigError("advice keys must be decimal lengths");
            }
            advice[length] = it->get<std::string>();
        }
        return Adversary::advised(load_adversary(need(spec, "base"), name + ".base"),
                                  std::move(advice), name);
    }
    throw ConfigError("unknown adversary type '" + type + "'");
}

Adversary load_adversary_file(const std::string& path) {
    return load_adversary(read_json_file(path), path);
}

namespace {

std::uint64_t parse_hex(const std::string& text) {
    if (text.empty()) throw ConfigError("empty hex word");
    std::uint64_t v = 0;
    for (char c : text) {
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else
            throw ConfigError("hex words use lowercase digits");
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    return v;
}

} // namespace

WordSet load_word_set(const json& spec) {
    const int length = need(spec, "length").get<int>();
    WordSet s = WordSet::empty_set(length);
    for (const auto& w : need(spec, "words")) {
        const std::uint64_t code = parse_hex(w.get<std::string>());
        if (length < 64 && (code >> length))
            throw ConfigError("word code does not fit the declared length");
        s.insert_index(code);
    }
    return s;
}

WordSet load_word_set_file(const std::string& path) { return load_word_set(read_json_file(path)); }

nlohmann::json word_set_to_json(const WordSet& s) {
    json words = json::array();
    std::ostringstream os;
    for (std::uint64_t i = 0; i < s.member.size(); ++i) {
        if (!s.member[i]) continue;
        os.str("");
        os << std::hex << i;
        words.push_back(os.str());
    }
    return json{{"length", s.length}, {"words", words}};
}

} // namespace prgfl
