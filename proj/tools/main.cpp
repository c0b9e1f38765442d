#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prgfl/discrepancy.hpp"
#include "prgfl/fixtures.hpp"
#include "prgfl/generator.hpp"
#include "prgfl/io.hpp"
#include "prgfl/iplang.hpp"
#include "prgfl/prg_eval.hpp"
#include "prgfl/swap.hpp"
#include "prgfl/transducer.hpp"

using namespace prgfl;
using ordered_json = nlohmann::ordered_json;
namespace fx = prgfl::fixtures;

namespace {

struct Settings {
    std::string format = "json";
    std::uint64_t enum_budget = kDefaultEnumBudget;
    std::uint64_t caps_factor = 64;
    std::uint64_t path_cap = 10000;
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw ConfigError(std::string("environment variable ") + name + " must be an integer");
    }
}

Caps caps_for(const Settings& s, int n) {
    Caps c = Caps::for_length(n, s.caps_factor);
    c.path_cap = s.path_cap;
    return c;
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", num_string(r)}, {"den", den_string(r)}};
}

ordered_json bigint_json(const BigInt& v) { return v.str(); }

void flatten(const ordered_json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten(node[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (node.is_string()) {
        rows.emplace_back(prefix, node.get<std::string>());
    } else {
        rows.emplace_back(prefix, node.dump());
    }
}

void emit(const ordered_json& report_in, const Settings& s) {
    ordered_json report = report_in;
    report["settings"] = ordered_json{{"format", s.format},
                                      {"enum_budget", s.enum_budget},
                                      {"caps_factor", s.caps_factor},
                                      {"path_cap", s.path_cap}};
    if (s.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(report, "", rows);
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows) {
            std::string cell = v;
            if (cell.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : cell) {
                    if (c == '"') quoted += "\"\"";
                    else quoted.push_back(c);
                }
                quoted += "\"";
                cell = std::move(quoted);
            }
            std::cout << k << "," << cell << "\n";
        }
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

ordered_json fool_json(const FoolReport& r) {
    ordered_json j{{"n", r.n},
                   {"mode", r.exhaustive ? "exhaustive" : "sampled"},
                   {"p_gen", rational_json(r.p_gen)},
                   {"p_unif", rational_json(r.p_unif)},
                   {"ell", rational_json(r.ell)}};
    if (r.sample) {
        j["samples"] = r.sample->samples;
        j["seed"] = r.sample->seed;
        j["delta"] = r.sample->delta;
        j["hoeffding_radius"] = r.sample->radius;
    }
    return j;
}

ordered_json equivalence_json(const EquivalenceReport& rep) {
    return ordered_json{{"n", rep.n},
                        {"m", rep.m},
                        {"fool", fool_json(rep.fool)},
                        {"u1", bigint_json(rep.gap.u1)},
                        {"u0", bigint_json(rep.gap.u0)},
                        {"gap", rational_json(rep.gap.gap)},
                        {"doubled_hits", bigint_json(rep.doubled_hits)},
                        {"identity", rational_json(rep.identity_value)},
                        {"identity_ok", rep.identity_ok},
                        {"bound", rational_json(rep.bound)},
                        {"bound_ok", rep.bound_ok}};
}

/// Adversary battery for the umbrella report: the trivial languages, two
/// small automata, the bracket grammar, and seeded random six-state
/// automata.
std::vector<Adversary> standard_adversaries(std::uint64_t seed) {
    std::vector<Adversary> out;
    out.push_back(Adversary::from_dfa(fx::all_words_dfa(), "all"));
    out.push_back(Adversary::from_dfa(fx::no_words_dfa(), "none"));
    out.push_back(Adversary::from_dfa(fx::odd_ones_dfa(), "odd-ones"));
    out.push_back(Adversary::from_dfa(fx::first_bit_one_dfa(), "first-bit-one"));
    out.push_back(Adversary::from_cnf(fx::dyck_cnf(), "dyck"));
    for (int i = 0; i < 6; ++i)
        out.push_back(Adversary::from_dfa(fx::random_dfa(6, seed * 1000 + i),
                                          "random-6-state-" + std::to_string(i)));
    return out;
}

std::uint64_t mix_seed(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

WordSet random_subset(int length, std::uint64_t& state, int density_percent) {
    WordSet s = WordSet::empty_set(length);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << length); ++i)
        if (mix_seed(state) % 100 < static_cast<std::uint64_t>(density_percent))
            s.insert_index(i);
    return s;
}

PairSet full_matrix(int n) {
    PairSet t;
    t.n = n;
    for (std::uint32_t x = 0; x < (1u << (2 * n)); ++x)
        for (std::uint32_t y = 0; y < (1u << (2 * n)); ++y) t.pairs.insert({x, y});
    return t;
}

ordered_json run_report_all(const Settings& s, int max_n, std::uint64_t seed) {
    ordered_json rows = ordered_json::array();
    auto push = [&rows](ordered_json row) { rows.push_back(std::move(row)); };

    for (int n : {3, 7, 11, 15}) {
        if (n > max_n) continue;
        const RangeIpCheck c = verify_range_equals_ip(n, s.enum_budget);
        push({{"check", "range-identity"}, {"n", n}, {"size", bigint_json(c.range_size)},
              {"ok", c.equal}});
    }
    for (int m = 1; 4 * m - 1 <= max_n && m <= 5; ++m) {
        const RangeStats st = range_stats(4 * m - 1, s.enum_budget);
        push({{"check", "almost-1-1-tau"}, {"n", 4 * m - 1},
              {"tau", rational_json(st.tau)}, {"ok", st.tau == pow2(-2 * m)}});
    }

    bool dense_ok = true;
    const int dense_limit = std::min(max_n, 20);
    for (int n = 0; n <= dense_limit; ++n)
        dense_ok = dense_ok && ip_dense_exhaustive(n, s.enum_budget) == ip_dense_closed_form(n);
    push({{"check", "density-closed-form"}, {"max_n", dense_limit}, {"ok", dense_ok}});

    bool stretch_ok = true;
    const int stretch_limit = std::min(max_n, 15);
    for (int n = 0; n <= stretch_limit; ++n)
        for_each_word(n, [&](const BitString& w) {
            const BitString u = generate(w);
            stretch_ok = stretch_ok && u.length() == n + 1 && (n < 3 || ip_member(u));
        });
    push({{"check", "stretch-soundness"}, {"max_n", stretch_limit}, {"ok", stretch_ok}});

    for (const Adversary& a : standard_adversaries(seed))
        for (int n : {3, 7, 11}) {
            if (n > max_n) continue;
            const EquivalenceReport rep = equivalence_report(a, n, s.enum_budget);
            push({{"check", "equivalence"}, {"adversary", a.name()}, {"n", n},
                  {"ell", rational_json(rep.fool.ell)}, {"gap", rational_json(rep.gap.gap)},
                  {"ok", rep.identity_ok && rep.bound_ok}});
        }

    for (int n = 1; n <= 3; ++n)
        push({{"check", "disc-full-matrix"}, {"n", n},
              {"ok", disc(full_matrix(n)) == pow2(-2 * n)}});

    std::uint64_t state = seed;
    {
        bool ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            const WordSet a = random_subset(4, state, 10 + (trial % 9) * 10);
            const WordSet b = random_subset(4, state, 10 + (trial % 7) * 12);
            ok = ok && rectangle_bound_check(a, b).ok;
        }
        push({{"check", "rectangle-bound"}, {"n", 2}, {"trials", 100}, {"ok", ok}});
    }
    for (int n = 2; n <= 3; ++n) {
        bool ok1 = true, ok2 = true;
        for (int j = n; j <= 2 * n; ++j)
            for (int trial = 0; trial < 50; ++trial) {
                CaseParams p{n, j, 1, random_subset(4 * n - j, state, 50),
                             random_subset(j, state, 50)};
                ok1 = ok1 && case_bound_check(p).ok;
            }
        for (int j = 2 * n + 1; j <= 3 * n; ++j)
            for (int trial = 0; trial < 50; ++trial) {
                CaseParams p{n, j, 2, random_subset(4 * n - j, state, 50),
                             random_subset(j, state, 50)};
                ok2 = ok2 && case_bound_check(p).ok;
            }
        push({{"check", "case1-bound"}, {"n", n}, {"trials_per_j", 50}, {"ok", ok1}});
        push({{"check", "case2-bound"}, {"n", n}, {"trials_per_j", 50}, {"ok", ok2}});
    }
    {
        bool ok = true;
        for (int j = 2; j <= 4; ++j) {
            CaseParams p{2, j, 1, WordSet::full(8 - j), WordSet::full(j)};
            ok = ok && mu_check(p);
        }
        CaseParams empty{2, 3, 1, WordSet::empty_set(5), WordSet::empty_set(3)};
        ok = ok && mu_check(empty);
        push({{"check", "mu-check"}, {"n", 2}, {"ok", ok}});
    }

    const std::vector<std::pair<std::string, Npda>> machines = {
        {"dyck", fx::dyck_npda()},
        {"even-palindrome", fx::even_palindrome_npda()},
        {"zeros-then-ones", fx::zeros_then_ones_npda()}};
    for (const auto& [name, m] : machines) {
        for (int n = 4; n <= std::min(8, max_n); ++n) {
            const Caps caps = caps_for(s, n);
            const SwapFamily f = build_swap_family(m, n, 2, 4, caps);
            const SwapVerification v = verify_swapping(f, m, n, caps);
            bool ideals = true;
            std::uint64_t path_count = 0;
            for_each_word(n, [&](const BitString& w) {
                for (const StackTransition& st :
                     accepting_transitions(m, m.word_from_bits(w), caps).paths) {
                    ++path_count;
                    try {
                        find_ideal_subinterval(st, 2, 4);
                    } catch (const ConsistencyError&) {
                        ideals = false;
                    }
                }
            });
            push({{"check", "swapping"}, {"machine", name}, {"n", n},
                  {"indices", f.entries.size()}, {"paths", path_count},
                  {"ok", v.ok() && ideals && !f.truncated}});
        }
    }

    const std::vector<std::pair<std::string, NpdaTransducer>> transducers = {
        {"append-zero", fx::append_zero_transducer()},
        {"identity", fx::identity_transducer()},
        {"const-one", fx::const_one_transducer()}};
    const int range_len = std::min(10, max_n);
    for (const auto& [name, t] : transducers) {
        const Npda m = range_acceptor(t);
        const Caps caps = caps_for(s, range_len + 2);
        std::set<std::string> range_words;
        for (int len = 0; len <= range_len; ++len)
            for_each_word(len, [&](const BitString& x) {
                for (const Word& out : transducer_outputs(t, t.machine.word_from_bits(x), caps)) {
                    std::string text;
                    for (int id : out) text += t.output.name(id);
                    if (static_cast<int>(text.size()) <= range_len) range_words.insert(text);
                }
            });
        bool equal = true;
        for (int len = 0; len <= range_len; ++len)
            for_each_word(len, [&](const BitString& y) {
                const bool in_l = accepts(m, m.word_from_bits(y), caps) == Outcome::kAccept;
                if (in_l != (range_words.count(y.str()) > 0)) equal = false;
            });
        push({{"check", "range-acceptor"}, {"transducer", name}, {"max_len", range_len},
              {"ok", equal}});
    }

    for (const auto& [name, a] :
         std::vector<std::pair<std::string, Adversary>>{
             {"odd-ones", Adversary::from_dfa(fx::odd_ones_dfa(), "odd-ones")},
             {"dyck", Adversary::from_cnf(fx::dyck_cnf(), "dyck")}}) {
        Rational previous = 2;
        bool ok = true;
        ordered_json points = ordered_json::array();
        for (int n : {3, 7, 11, 15}) {
            if (n > max_n) continue;
            const int m = (n + 1) / 4;
            const FoolReport fr = fool_exact(a, n, s.enum_budget);
            const GapStat gs = gap_stat(ip_member, a.predicate(), n + 1, s.enum_budget);
            ok = ok && fr.ell <= previous && fr.ell <= pow2(-2 * m) + gs.gap;
            previous = fr.ell;
            points.push_back({{"n", n}, {"ell", rational_json(fr.ell)},
                              {"gap", rational_json(gs.gap)}});
        }
        push({{"check", "fooling-trend"}, {"adversary", name}, {"points", points}, {"ok", ok}});
    }

    bool all_ok = true;
    for (const auto& row : rows) all_ok = all_ok && row.value("ok", false);

    return ordered_json{{"command", "report all"},
                        {"config",
                         {{"max_n", max_n}, {"seed", seed}, {"enum_budget", s.enum_budget},
                          {"caps_factor", s.caps_factor}}},
                        {"rows", rows},
                        {"all_ok", all_ok}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for a stretch-(n+1) generator against formal-language adversaries"};
    app.require_subcommand(1);

    Settings settings;
    ordered_json report;

    try {
        settings.enum_budget = env_or("PRGFL_ENUM_BUDGET", kDefaultEnumBudget);
        settings.caps_factor = env_or("PRGFL_CAPS_FACTOR", 64);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    app.add_option("--format", settings.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // --- ip ---
    auto* ip = app.add_subcommand("ip", "inner-product language queries");
    ip->require_subcommand(1);
    std::string ip_word;
    auto* ip_check = ip->add_subcommand("check", "membership of one word");
    ip_check->add_option("word", ip_word, "binary word")->required();
    ip_check->callback([&] {
        const BitString w(ip_word);
        const IpParse p = ip_parse(w);
        report = {{"command", "ip check"},
                  {"config", {{"word", ip_word}}},
                  {"parse",
                   {{"a", p.a.str()}, {"x", p.x.str()}, {"y", p.y.str()}, {"z", p.z.str()},
                    {"m", p.m()}}},
                  {"member", ip_member(w)}};
    });

    int dense_n = 0;
    bool dense_closed = false;
    auto* ip_dense_cmd = ip->add_subcommand("dense", "cardinality of one length slice");
    ip_dense_cmd->add_option("--n", dense_n, "word length")->required();
    ip_dense_cmd->add_flag("--closed-form", dense_closed, "skip the exhaustive count");
    ip_dense_cmd->callback([&] {
        report = {{"command", "ip dense"},
                  {"config", {{"n", dense_n}, {"closed_form", dense_closed}}},
                  {"count", bigint_json(dense_closed
                                            ? ip_dense_closed_form(dense_n)
                                            : ip_dense_exhaustive(dense_n, settings.enum_budget))}};
    });

    // --- gap ---
    std::string adversary_path;
    int gap_n = 0;
    auto* gap = app.add_subcommand("gap", "gap statistic against an adversary");
    gap->add_option("--adversary", adversary_path, "adversary file")->required();
    gap->add_option("--n", gap_n, "word length")->required();
    gap->callback([&] {
        const Adversary a = load_adversary_file(adversary_path);
        const GapStat st = gap_stat(ip_member, a.predicate(), gap_n, settings.enum_budget);
        report = {{"command", "gap"},
                  {"config", {{"adversary", adversary_path}, {"name", a.name()}, {"n", gap_n}}},
                  {"u1", bigint_json(st.u1)},
                  {"u0", bigint_json(st.u0)},
                  {"gap", rational_json(st.gap)}};
    });

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generator queries");
    gen->require_subcommand(1);
    std::string gen_word;
    auto* gen_apply = gen->add_subcommand("apply", "stretch one seed");
    gen_apply->add_option("word", gen_word, "binary seed")->required();
    gen_apply->callback([&] {
        report = {{"command", "gen apply"},
                  {"config", {{"word", gen_word}}},
                  {"output", generate(BitString(gen_word)).str()}};
    });

    std::string invert_word;
    auto* gen_invert = gen->add_subcommand("invert", "list the preimages of a word");
    gen_invert->add_option("word", invert_word, "binary word")->required();
    gen_invert->callback([&] {
        ordered_json pre = ordered_json::array();
        for (const BitString& w : invert(BitString(invert_word))) pre.push_back(w.str());
        report = {{"command", "gen invert"},
                  {"config", {{"word", invert_word}}},
                  {"preimages", pre}};
    });

    int range_n = 0;
    auto* gen_range = gen->add_subcommand("range", "image size and missing fraction");
    gen_range->add_option("--n", range_n, "seed length")->required();
    gen_range->callback([&] {
        const RangeStats st = range_stats(range_n, settings.enum_budget);
        report = {{"command", "gen range"},
                  {"config", {{"n", range_n}}},
                  {"range_size", bigint_json(st.range_size)},
                  {"tau", rational_json(st.tau)}};
    });

    int verify_n = 0;
    auto* gen_verify =
        gen->add_subcommand("verify-range", "compare the image with the language slice");
    gen_verify->add_option("--n", verify_n, "seed length")->required();
    gen_verify->callback([&] {
        const RangeIpCheck c = verify_range_equals_ip(verify_n, settings.enum_budget);
        report = {{"command", "gen verify-range"},
                  {"config", {{"n", verify_n}}},
                  {"equal", c.equal},
                  {"size", bigint_json(c.range_size)},
                  {"ip_size", bigint_json(c.ip_size)},
                  {"short_input_regime", c.short_input_regime}};
    });

    // --- fool ---
    int fool_n = 0;
    std::uint64_t fool_samples = 0, fool_seed = 1;
    double fool_delta = 0.05;
    auto* fool = app.add_subcommand("fool", "fooling statistic against an adversary");
    fool->add_option("--adversary", adversary_path, "adversary file")->required();
    fool->add_option("--n", fool_n, "seed length")->required();
    fool->add_option("--samples", fool_samples, "sample count (0 = exhaustive)");
    fool->add_option("--seed", fool_seed, "sampling seed");
    fool->add_option("--delta", fool_delta, "Hoeffding failure budget");
    fool->callback([&] {
        const Adversary a = load_adversary_file(adversary_path);
        const FoolReport r = fool_samples
                                 ? fool_sampled(a, fool_n, fool_samples, fool_seed, fool_delta)
                                 : fool_exact(a, fool_n, settings.enum_budget);
        report = {{"command", "fool"},
                  {"config",
                   {{"adversary", adversary_path}, {"name", a.name()}, {"n", fool_n},
                    {"samples", fool_samples}, {"seed", fool_seed}, {"delta", fool_delta}}},
                  {"result", fool_json(r)}};
    });

    // --- equiv ---
    int equiv_n = 0;
    auto* equiv = app.add_subcommand("equiv", "finite-length fooling/gap equivalence check");
    equiv->add_option("--adversary", adversary_path, "adversary file")->required();
    equiv->add_option("--n", equiv_n, "seed length, congruent to 3 mod 4")->required();
    equiv->callback([&] {
        const Adversary a = load_adversary_file(adversary_path);
        const EquivalenceReport rep = equivalence_report(a, equiv_n, settings.enum_budget);
        report = {{"command", "equiv"},
                  {"config", {{"adversary", adversary_path}, {"name", a.name()}, {"n", equiv_n}}},
                  {"result", equivalence_json(rep)}};
    });

    // --- disc ---
    auto* disc_cmd = app.add_subcommand("disc", "discrepancy computations");
    disc_cmd->require_subcommand(1);
    int disc_n = 0, disc_j = 0, disc_case = 1;
    std::string set_a_path, set_b_path;
    bool with_mu = false;

    auto* disc_full = disc_cmd->add_subcommand("full", "discrepancy of the whole matrix");
    disc_full->add_option("--n", disc_n, "half-length parameter")->required();
    disc_full->callback([&] {
        if (disc_n < 1 || disc_n > 3) throw ConfigError("full-matrix sweeps support n = 1..3");
        const PairSet t = full_matrix(disc_n);
        report = {{"command", "disc full"},
                  {"config", {{"n", disc_n}}},
                  {"pairs", t.size()},
                  {"disc", rational_json(disc(t))}};
    });

    auto* disc_rect = disc_cmd->add_subcommand("rect", "rectangle bound check");
    disc_rect->add_option("--n", disc_n, "half-length parameter")->required();
    disc_rect->add_option("--a", set_a_path, "word-set file for the rows")->required();
    disc_rect->add_option("--b", set_b_path, "word-set file for the columns")->required();
    disc_rect->callback([&] {
        const WordSet a = load_word_set_file(set_a_path);
        const WordSet b = load_word_set_file(set_b_path);
        if (a.length != 2 * disc_n || b.length != 2 * disc_n)
            throw ConfigError("rectangle sides must hold words of length 2n");
        const RectangleBoundCheck c = rectangle_bound_check(a, b);
        report = {{"command", "disc rect"},
                  {"config", {{"n", disc_n}, {"a", set_a_path}, {"b", set_b_path}}},
                  {"card_a", a.count()},
                  {"card_b", b.count()},
                  {"disc", rational_json(c.disc)},
                  {"bound", c.bound},
                  {"ok", c.ok}};
    });

    auto* disc_tset = disc_cmd->add_subcommand("t-set", "structured pair-set bound check");
    disc_tset->add_option("--case", disc_case, "construction case")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    disc_tset->add_option("--n", disc_n, "half-length parameter")->required();
    disc_tset->add_option("--j", disc_j, "split parameter")->required();
    disc_tset->add_option("--a", set_a_path, "word-set file for A")->required();
    disc_tset->add_option("--b", set_b_path, "word-set file for B")->required();
    disc_tset->add_flag("--mu-check", with_mu, "also run the tail-swap map check (case 1)");
    disc_tset->callback([&] {
        CaseParams p;
        p.n = disc_n;
        p.j = disc_j;
        p.case_tag = disc_case;
        p.a = load_word_set_file(set_a_path);
        p.b = load_word_set_file(set_b_path);
        const PairSet t = disc_case == 1 ? build_T_case1(p) : build_T_case2(p);
        const CaseBoundCheck c = case_bound_check(p);
        ordered_json result{{"command", "disc t-set"},
                            {"config",
                             {{"case", disc_case}, {"n", disc_n}, {"j", disc_j},
                              {"a", set_a_path}, {"b", set_b_path}}},
                            {"pairs", t.size()},
                            {"disc", rational_json(c.disc)},
                            {"bound", rational_json(c.bound)},
                            {"ok", c.ok}};
        if (with_mu) result["mu_ok"] = mu_check(p);
        report = std::move(result);
    });

    // --- swap ---
    auto* swap_cmd = app.add_subcommand("swap", "swapping-property decomposition");
    swap_cmd->require_subcommand(1);
    std::string machine_path;
    int swap_n = 0, swap_j0 = 2, swap_k = 4;
    auto add_swap_options = [&](CLI::App* cmd) {
        cmd->add_option("--machine", machine_path, "normalized machine file")->required();
        cmd->add_option("--n", swap_n, "word length")->required();
        cmd->add_option("--j0", swap_j0, "minimal middle width");
        cmd->add_option("--k", swap_k, "maximal middle width");
    };

    auto* swap_build = swap_cmd->add_subcommand("build", "build the index family");
    add_swap_options(swap_build);
    swap_build->callback([&] {
        const Npda m = load_npda_file(machine_path);
        const SwapFamily f =
            build_swap_family(m, swap_n, swap_j0, swap_k, caps_for(settings, swap_n));
        ordered_json entries = ordered_json::array();
        std::uint64_t total_a = 0, total_b = 0;
        for (const auto& [e, entry] : f.entries) {
            entries.push_back({{"i", e.i},
                               {"j", e.j},
                               {"u", m.stack.name(e.u)},
                               {"v", m.stack.name(e.v)},
                               {"a_pairs", entry.a_pairs.size()},
                               {"b_words", entry.b_words.size()}});
            total_a += entry.a_pairs.size();
            total_b += entry.b_words.size();
        }
        report = {{"command", "swap build"},
                  {"config",
                   {{"machine", machine_path}, {"n", swap_n}, {"j0", swap_j0}, {"k", swap_k},
                    {"caps_factor", settings.caps_factor}}},
                  {"indices", f.entries.size()},
                  {"total_a_pairs", total_a},
                  {"total_b_words", total_b},
                  {"truncated", f.truncated},
                  {"entries", entries}};
    });

    auto* swap_verify = swap_cmd->add_subcommand("verify", "build and verify the family");
    add_swap_options(swap_verify);
    swap_verify->callback([&] {
        const Npda m = load_npda_file(machine_path);
        const Caps caps = caps_for(settings, swap_n);
        const SwapFamily f = build_swap_family(m, swap_n, swap_j0, swap_k, caps);
        const SwapVerification v = verify_swapping(f, m, swap_n, caps);
        ordered_json ces = ordered_json::array();
        for (const auto& ce : v.counterexamples)
            ces.push_back({{"kind", ce.kind}, {"detail", ce.detail}});
        report = {{"command", "swap verify"},
                  {"config",
                   {{"machine", machine_path}, {"n", swap_n}, {"j0", swap_j0}, {"k", swap_k},
                    {"caps_factor", settings.caps_factor}}},
                  {"shape_ok", v.shape_ok},
                  {"coverage_ok", v.coverage_ok},
                  {"closure_ok", v.closure_ok},
                  {"counterexamples", ces}};
        if (!v.ok()) {
            emit(report, settings);
            throw ConsistencyError("swapping-property verification failed");
        }
    });

    // --- range-npda ---
    std::string transducer_path;
    int max_len = 10;
    auto* range_npda = app.add_subcommand("range-npda", "range acceptor construction check");
    range_npda->add_option("--transducer", transducer_path, "transducer file")->required();
    range_npda->add_option("--max-len", max_len, "compare up to this output length");
    range_npda->callback([&] {
        const NpdaTransducer t = load_transducer_file(transducer_path);
        const Npda m = range_acceptor(t);
        const Caps caps = caps_for(settings, max_len + 2);

        std::set<std::string> range_words;
        for (int len = 0; len <= max_len; ++len)
            for_each_word(len, [&](const BitString& x) {
                for (const Word& out : transducer_outputs(t, t.machine.word_from_bits(x), caps)) {
                    std::string text;
                    for (int id : out) text += t.output.name(id);
                    if (static_cast<int>(text.size()) <= max_len) range_words.insert(text);
                }
            });

        std::uint64_t accepted_count = 0;
        bool equal = true;
        for (int len = 0; len <= max_len; ++len)
            for_each_word(len, [&](const BitString& y) {
                const Outcome o = accepts(m, m.word_from_bits(y), caps);
                if (o == Outcome::kIndeterminate)
                    throw ResourceError("range acceptor hit its simulation caps");
                const bool in_l = o == Outcome::kAccept;
                accepted_count += in_l ? 1 : 0;
                if (in_l != (range_words.count(y.str()) > 0)) equal = false;
            });

        report = {{"command", "range-npda"},
                  {"config",
                   {{"transducer", transducer_path}, {"max_len", max_len},
                    {"caps_factor", settings.caps_factor}}},
                  {"acceptor_states", m.states.size()},
                  {"acceptor_transitions", m.transitions.size()},
                  {"accepted_words", accepted_count},
                  {"range_words", range_words.size()},
                  {"equal", equal}};
    });

    // --- report ---
    auto* report_cmd = app.add_subcommand("report", "umbrella experiment reports");
    report_cmd->require_subcommand(1);
    int report_max_n = 11;
    std::uint64_t report_seed = 1;
    auto* report_all = report_cmd->add_subcommand("all", "run the whole verification battery");
    report_all->add_option("--max-n", report_max_n, "largest length to sweep");
    report_all->add_option("--seed", report_seed, "seed for the randomized batteries");
    report_all->callback(
        [&] { report = run_report_all(settings, report_max_n, report_seed); });

    // Let --format appear after a subcommand as well.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
        emit(report, settings);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const AlphabetError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BoundsError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
