// follres: patterns, sequent and proof-net search, sentence parsing from the command line.
// exit codes: 0 success, 1 not derivable / no parse, 2 usage, 3 input that does not parse,
// 4 the two provers disagree

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "follres/parse.hpp"
#include "follres/pattern.hpp"
#include "follres/proofnet.hpp"
#include "follres/prover.hpp"
#include "follres/sentence.hpp"
#include "follres/translate.hpp"

using namespace follres;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kInput = 3, kDiscrepancy = 4 };

struct Report {
    std::string outcome;
    std::size_t proofs = 0, matchings_explored = 0, backtracks = 0;
    double elapsed = 0;

    json to_json() const {
        return {{"outcome", outcome},
                {"proofs", proofs},
                {"matchings_explored", matchings_explored},
                {"backtracks", backtracks},
                {"elapsed", elapsed}};
    }
};

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string var_list(const std::vector<int>& v) {
    std::string s;
    for (int i : v) s += (s.empty() ? "" : " ") + ("x" + std::to_string(i));
    return s;
}

std::string tuple(const std::string& name, const std::vector<int>& t) {
    std::string s = name + "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + ("x" + std::to_string(t[i]));
    return s + ")";
}

std::string quantified(const char* q, const std::vector<int>& vars, const std::string& body) {
    if (vars.empty()) return body;
    return std::string(q) + " " + var_list(vars) + ".[" + body + "]";
}

std::string facts_text(const std::vector<IndexFact>& fs) {
    if (fs.empty()) return "none";
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : ", ") + ("x" + std::to_string(f.lo) + "<=x" + std::to_string(f.hi));
    return s;
}

void print_schema(const ConnectiveSchema& s, const std::string& indent) {
    std::string A = tuple("A", s.tuple_A), B = tuple("B", s.tuple_B), C = tuple("C", s.tuple_C);
    std::cout << indent << "A*B  " << C << " = " << quantified("exists", s.exist_vars, A + " * " + B)
              << "   requires " << facts_text(s.required_facts.at(Role::Product)) << "\n";
    std::cout << indent << "A\\C  " << B << " = " << quantified("forall", s.under_vars, A + " -o " + C)
              << "   requires " << facts_text(s.required_facts.at(Role::Under)) << "\n";
    std::cout << indent << "C/B  " << A << " = " << quantified("forall", s.over_vars, B + " -o " + C)
              << "   requires " << facts_text(s.required_facts.at(Role::Over)) << "\n";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_pairs(const ProofStructure& ps, const Matching& m) {
    auto pairs = m.pairs;
    std::sort(pairs.begin(), pairs.end());
    for (auto [p, n] : pairs)
        std::cout << "  " << ps.text(p) << " - " << ps.text(n) << "   [" << to_string(substitute(ps.occ[p].f, m.state.subst))
                  << "]\n";
}

void print_contraction(const ProofStructure& ps, const Matching& m) {
    auto r = contract(abstract(ps, m.pairs, m.state.subst));
    for (const auto& s : r.trace) {
        std::cout << "  " << s.kind << " " << s.from << " -> " << s.into;
        if (!s.x.empty()) std::cout << " (" << s.x << ")";
        std::cout << "\n";
    }
    std::cout << "  " << (r.success ? "single vertex" : "stuck") << "\n";
}

void emit(const Report& r, bool as_json, bool stats, bool deterministic) {
    Report out = r;
    if (deterministic) out.elapsed = 0;
    if (as_json) {
        std::cout << out.to_json().dump() << "\n";
        return;
    }
    if (!stats) return;
    std::cout << "matchings explored: " << out.matchings_explored << "\nbacktracks: " << out.backtracks << "\n";
    if (!deterministic) std::cout << "elapsed: " << out.elapsed << " ms\n";
}

// ---- subcommands

int cmd_count(int max, bool wn) {
    for (int k = 1; k <= max; ++k) std::cout << (k > 1 ? "," : "") << (wn ? count_wellnested_fsa(k) : count_patterns_fsa(k));
    std::cout << "\n";
    return kOk;
}

int cmd_enumerate(int k, bool wn, bool schemas) {
    auto all = enumerate_patterns(k);
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool nested = is_well_nested(all[i]);
        if (wn && !nested) continue;
        std::cout << pattern_label(k, i) << " " << all[i] << (nested ? "" : "  (not well-nested)") << "\n";
        if (schemas) print_schema(schema(all[i]), "    ");
    }
    return kOk;
}

int cmd_schema(const std::string& p) {
    if (!validate_pattern(p)) throw ParseError("not a pattern: " + p);
    auto s = schema(p);
    std::cout << "pattern " << p << (is_well_nested(p) ? "" : " (not well-nested)") << ", positions x0..x"
              << s.n_positions - 1 << "\n";
    print_schema(s, "");
    return kOk;
}

struct ProveArgs {
    std::string sequent, order, method = "net", dot;
    bool trace = false, all = false, as_json = false, stats = false, deterministic = false;
    std::size_t max = 100;
};

int cmd_prove(const ProveArgs& a) {
    Timer timer;
    Sequent seq = parse_sequent(a.sequent);
    std::vector<OrderFact> facts = a.order.empty() ? std::vector<OrderFact>{} : parse_order_facts(a.order);
    auto start = seed_constraints(seq, facts);
    Report rep;
    bool use_net = a.method != "sequent", use_seq = a.method != "net";
    bool net_yes = false, seq_yes = false;
    std::size_t limit = a.all ? a.max : 1;
    bool text = !a.as_json;

    if (start && use_net) {
        NetOptions o;
        o.max_nets = limit;
        auto r = prove_net(seq, *start, o);
        net_yes = !r.nets.empty();
        rep.proofs = r.nets.size();
        rep.matchings_explored = r.stats.matchings_explored;
        rep.backtracks = r.stats.backtracks;
        if (text)
            for (std::size_t i = 0; i < r.nets.size(); ++i) {
                std::cout << "net " << i + 1 << ":\n";
                print_pairs(r.structure, r.nets[i]);
                if (a.trace) print_contraction(r.structure, r.nets[i]);
            }
        if (!a.dot.empty()) write_file(a.dot, to_dot(r.structure, r.nets.empty() ? nullptr : &r.nets[0]));
    }
    if (start && use_seq) {
        ProveOptions o;
        o.max_proofs = limit;
        auto r = prove_all(seq, *start, o);
        seq_yes = !r.proofs.empty();
        if (!use_net) {
            // each derivation fixes one complete axiom matching
            rep.proofs = rep.matchings_explored = r.proofs.size();
        }
        if (text && a.trace)
            for (const auto& d : r.proofs) std::cout << to_string(d) << "\n";
        if (r.limit_hit) std::cerr << "follres: sequent search hit its step limit\n";
    }
    bool yes = use_net ? net_yes : seq_yes;
    rep.outcome = yes ? "derivable" : "not-derivable";
    rep.elapsed = timer.ms();
    if (text) std::cout << (yes ? "derivable" : "not derivable") << "\n";
    if (a.method == "both") {
        if (net_yes != seq_yes) {
            std::cerr << "follres: discrepancy: proof nets say " << (net_yes ? "derivable" : "not derivable")
                      << ", sequent search says " << (seq_yes ? "derivable" : "not derivable") << "\n";
            emit(rep, a.as_json, a.stats, a.deterministic);
            return kDiscrepancy;
        }
        if (text) std::cout << "methods agree\n";
    }
    emit(rep, a.as_json, a.stats, a.deterministic);
    return yes ? kOk : kNo;
}

struct ParseArgs {
    std::string lexicon, goal, sentence, dot;
    bool all = false, as_json = false, stats = false, deterministic = false;
};

int cmd_parse(const ParseArgs& a) {
    Timer timer;
    Lexicon lex = load_lexicon(a.lexicon);
    auto words = split_words(a.sentence);
    auto result = parse_sentence(lex, words, a.goal);
    Report rep;
    rep.outcome = "parse-count";
    rep.proofs = result.parses;
    rep.matchings_explored = result.stats.matchings_explored;
    rep.backtracks = result.stats.backtracks;
    rep.elapsed = timer.ms();
    if (!a.as_json) {
        std::cout << result.parses << (result.parses == 1 ? " parse" : " parses") << "\n";
        std::size_t shown = 0;
        for (const auto& r : result.readings) {
            for (const auto& net : r.result.nets) {
                if (shown == 1 && !a.all) break;
                ++shown;
                std::cout << "parse " << shown << ":\n";
                for (std::size_t w = 0; w < words.size(); ++w)
                    std::cout << "  " << words[w] << " := " << to_string(lex[r.instance.entry_choice[w]].cat) << "\n";
                std::cout << "  " << to_string(r.instance.sequent) << "\n";
                print_pairs(r.result.structure, net);
            }
        }
        if (a.stats)
            std::cout << "branches: " << result.stats.branches << "\nforced: " << result.stats.forced << "\n";
    }
    if (!a.dot.empty())
        for (const auto& r : result.readings)
            if (!r.result.nets.empty()) {
                write_file(a.dot, to_dot(r.result.structure, &r.result.nets[0]));
                break;
            }
    emit(rep, a.as_json, a.stats, a.deterministic);
    return result.parses ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order linear logic proof search for residuated connectives"};
    app.require_subcommand(1);

    int count_max = 0;
    bool count_wn = false;
    auto* count = app.add_subcommand("count", "number of patterns per segment count");
    count->add_option("--max", count_max, "largest segment count")->required()->check(CLI::Range(1, 64));
    count->add_flag("--well-nested", count_wn, "count well-nested patterns only");

    int segs = 0;
    bool enum_wn = false, enum_schemas = false;
    auto* enumerate = app.add_subcommand("enumerate", "list the patterns with K segments");
    enumerate->add_option("--segments", segs, "segment count K")->required()->check(CLI::Range(1, 20));
    enumerate->add_flag("--well-nested", enum_wn, "well-nested patterns only");
    enumerate->add_flag("--schemas", enum_schemas, "print each pattern's translation");

    std::string pattern;
    auto* sch = app.add_subcommand("schema", "translation of the connectives for a pattern");
    sch->add_option("pattern", pattern, "string over a, b and 1")->required();

    ProveArgs pa;
    auto* prove_cmd = app.add_subcommand("prove", "decide a sequent F1, ..., Fn |- G");
    prove_cmd->add_option("sequent", pa.sequent)->required();
    prove_cmd->add_option("--order", pa.order, "order facts, e.g. \"0<1,1<=X\"");
    prove_cmd->add_option("--method", pa.method, "net, sequent or both")
        ->check(CLI::IsMember({"net", "sequent", "both"}));
    prove_cmd->add_option("--dot", pa.dot, "write the proof structure as DOT");
    prove_cmd->add_flag("--trace", pa.trace, "show contractions or derivations");
    prove_cmd->add_flag("--all", pa.all, "find every proof, up to --max");
    prove_cmd->add_option("--max", pa.max, "bound for --all")->check(CLI::PositiveNumber);
    prove_cmd->add_flag("--json", pa.as_json, "print the run report as JSON");
    prove_cmd->add_flag("--stats", pa.stats, "search statistics");
    prove_cmd->add_flag("--deterministic", pa.deterministic, "leave timings out of the output");

    ParseArgs ra;
    auto* parse_cmd = app.add_subcommand("parse", "parse a sentence with a lexicon");
    parse_cmd->add_option("sentence", ra.sentence)->required();
    parse_cmd->add_option("--lexicon", ra.lexicon, "lexicon file, one 'word := category' per line")->required();
    parse_cmd->add_option("--goal", ra.goal, "goal category atom")->required();
    parse_cmd->add_option("--dot", ra.dot, "write the first parse as DOT");
    parse_cmd->add_flag("--all", ra.all, "show every parse");
    parse_cmd->add_flag("--json", ra.as_json, "print the run report as JSON");
    parse_cmd->add_flag("--stats", ra.stats, "search statistics");
    parse_cmd->add_flag("--deterministic", ra.deterministic, "leave timings out of the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*count) return cmd_count(count_max, count_wn);
        if (*enumerate) return cmd_enumerate(segs, enum_wn, enum_schemas);
        if (*sch) return cmd_schema(pattern);
        if (*prove_cmd) return cmd_prove(pa);
        if (*parse_cmd) return cmd_parse(ra);
    } catch (const ParseError& e) {
        std::cerr << "follres: " << e.what() << "\n";
        return kInput;
    } catch (const TranslateError& e) {
        std::cerr << "follres: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "follres: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
