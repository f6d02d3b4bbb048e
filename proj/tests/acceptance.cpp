// Runs the ten acceptance checks, one line each; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "follres/parse.hpp"
#include "follres/pattern.hpp"
#include "follres/proofnet.hpp"
#include "follres/prover.hpp"
#include "follres/sentence.hpp"
#include "follres/translate.hpp"
#include "random_sequents.hpp"

using namespace follres;

namespace {

// collects the first few failures of one criterion
struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok && problems.size() < 5) problems.push_back(what);
    }
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "[" + s + "]";
}

using PairSet = std::set<std::pair<std::string, std::string>>;

std::string renamed(const Formula& f) {
    static const std::map<std::string, std::string> m(fixtures::kDidRenaming.begin(), fixtures::kDidRenaming.end());
    std::string s = f->pred + "(";
    for (std::size_t i = 0; i < f->args.size(); ++i) {
        const Term& t = f->args[i];
        auto it = m.find(t.name);
        s += (i ? "," : "") + ((t.is_pos() || it == m.end()) ? t.str() : it->second);
    }
    return s + ")";
}

NetOptions unfiltered() {
    NetOptions o;
    o.filter_unify = o.filter_order = o.filter_eigen = o.lookahead = o.unit_propagation = false;
    return o;
}

void counting(Check& c) {
    std::vector<std::uint64_t> p = {0, 1, 2, 5, 10, 21, 42, 85, 170, 341, 682};
    std::vector<std::uint64_t> w = {0, 1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36};
    for (int k = 1; k <= 11; ++k) c.expect(count_patterns_fsa(k) == p[k - 1], "patterns k=" + std::to_string(k));
    for (int k = 1; k <= 12; ++k) c.expect(count_wellnested_fsa(k) == w[k - 1], "well-nested k=" + std::to_string(k));
    for (int k = 1; k <= 16; ++k) {
        std::string kk = std::to_string(k);
        c.expect(count_patterns_fsa(k) == count_patterns_recurrence(k), "recurrence k=" + kk);
        c.expect(count_patterns_fsa(k) == count_patterns_closed(k), "closed form k=" + kk);
        c.expect(count_wellnested_fsa(k) == count_wellnested_closed(k), "well-nested closed form k=" + kk);
    }
}

void catalogs(Check& c) {
    std::vector<Pattern> four = {"abab", "ab1a", "ab1b", "a1ab", "a1ba"};
    std::vector<Pattern> five = {"ababa", "aba1a", "aba1b", "ab1ab", "ab1ba", "a1aba", "a1a1b", "a1bab", "a1b1a", "a1b1b"};
    c.expect(enumerate_patterns(4) == four, "four-segment table");
    c.expect(enumerate_patterns(5) == five, "five-segment table");
    auto exceptions = [](int k, const std::vector<Pattern>& ps) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (!is_well_nested(ps[i])) out.push_back(pattern_label(k, i));
        return out;
    };
    c.expect(exceptions(4, four) == std::vector<std::string>{"4a"}, "four-segment exceptions");
    c.expect(exceptions(5, five) == std::vector<std::string>{"5a", "5c", "5d", "5h"}, "five-segment exceptions");
    c.expect(pattern_label(5, 9) == "5j", "labels");
}

void schemas(Check& c) {
    struct Want {
        Pattern p;
        std::vector<int> A, B, C, ex, under, over;
    };
    std::vector<Want> wants = {
        {"ab", {0, 1}, {1, 2}, {0, 2}, {1}, {0}, {2}},
        {"aba", {0, 1, 2, 3}, {1, 2}, {0, 3}, {1, 2}, {0, 3}, {}},
        {"a1b", {0, 1}, {2, 3}, {0, 1, 2, 3}, {}, {0, 1}, {2, 3}},
        {"abab", {0, 1, 2, 3}, {1, 2, 3, 4}, {0, 4}, {1, 2, 3}, {0}, {4}},
        {"a1ab", {0, 1, 2, 3}, {3, 4}, {0, 1, 2, 4}, {3}, {0, 1, 2}, {4}},
        {"aba1a", {0, 1, 2, 3, 4, 5}, {1, 2}, {0, 3, 4, 5}, {1, 2}, {0, 3, 4, 5}, {}},
    };
    for (const auto& w : wants) {
        auto s = schema(w.p);
        c.expect(s.tuple_A == w.A, w.p + " A " + join(s.tuple_A));
        c.expect(s.tuple_B == w.B, w.p + " B " + join(s.tuple_B));
        c.expect(s.tuple_C == w.C, w.p + " C " + join(s.tuple_C));
        c.expect(s.exist_vars == w.ex, w.p + " product quantifiers " + join(s.exist_vars));
        c.expect(s.under_vars == w.under, w.p + " under quantifiers " + join(s.under_vars));
        c.expect(s.over_vars == w.over, w.p + " over quantifiers " + join(s.over_vars));
    }
    c.expect(required_facts("a1b", Role::Product) == std::vector<IndexFact>{{1, 2}}, "a1b facts");
    c.expect(required_facts("aba1a", Role::Over) == std::vector<IndexFact>{{2, 3}}, "aba1a facts");
    for (const char* p : {"ab", "aba", "abab"})
        for (Role r : {Role::Product, Role::Under, Role::Over})
            c.expect(required_facts(p, r).empty(), std::string(p) + " facts " + role_name(r));
    c.expect(required_facts("a1ab", Role::Product).empty(), "a1ab product facts");
}

void derivability(Check& c) {
    auto both = [&](const std::string& s, bool want) {
        Sequent seq = parse_sequent(s);
        c.expect(prove(seq).has_value() == want, "prover on " + s);
        c.expect(prove_net(seq).nets.empty() != want, "nets on " + s);
    };
    both(fixtures::kNotNet, false);
    for (const auto& s : fixtures::kComponentSequents) both(s, true);
    for (const auto& s : fixtures::kCancellation) both(s, true);
}

void residuation(Check& c, std::string& detail) {
    int n = 0;
    for (int k = 2; k <= 4; ++k)
        for (const auto& p : enumerate_patterns(k))
            for (const auto& it : residuation_suite(p)) {
                ++n;
                auto start = seed_constraints(it.sequent, it.facts);
                c.expect(start.has_value(), p + " " + it.name + " store");
                if (!start) continue;
                auto d = prove(it.sequent, *start);
                c.expect(d.has_value(), p + " " + it.name + ": " + to_string(it.sequent));
                if (d) c.expect(validate_derivation(*d), p + " " + it.name + " derivation check");
            }
    detail = std::to_string(n) + " sequents";
}

void gave(Check& c, std::string& detail) {
    auto lex = load_lexicon(fixtures::kDemoLexicon);
    auto words = split_words("John gave Mary flowers");
    auto parse = parse_sentence(lex, words, "s");
    c.expect(parse.parses == 1, "parses = " + std::to_string(parse.parses));
    auto inst = instantiate_sentence(lex, words, "s");
    if (inst.size() != 1) return c.expect(false, "lexical choices");
    auto start = seed_constraints(inst[0].sequent, inst[0].facts);
    auto ps = unfold(inst[0].sequent);
    int john = -1, yz = -1;
    for (int n : ps.neg_atoms)
        if (ps.text(n) == "np(0,1)") john = n;
    for (int p : ps.pos_atoms) {
        const auto& a = ps.occ[p].f->args;
        if (ps.occ[p].f->pred == "np" && a[0].is_meta() && a[1].is_meta()) yz = p;
    }
    if (john < 0 || yz < 0 || !start) return c.expect(false, "atoms");
    NetOptions local;
    local.lookahead = false;
    auto with_store = candidate_table(ps, *start, {}, local)[yz];
    auto without = candidate_table(ps, {}, {}, local)[yz];
    auto has = [&](const std::vector<int>& row) { return std::find(row.begin(), row.end(), john) != row.end(); };
    c.expect(!has(with_store), "store keeps np(0,1) as a candidate of " + ps.text(yz));
    c.expect(has(without), "unification alone already rejects np(0,1)");
    detail = ps.text(yz) + " loses np(0,1) to the order store";
}

void did(Check& c, std::string& detail) {
    const PairSet table(fixtures::kDidLinks.begin(), fixtures::kDidLinks.end());
    auto lex = load_lexicon(fixtures::kDemoLexicon);
    auto parse = parse_sentence(lex, split_words("John left before Mary did"), "s");
    c.expect(parse.parses == 1, "parses = " + std::to_string(parse.parses));
    c.expect(parse.stats.backtracks == 0, "pipeline backtracks = " + std::to_string(parse.stats.backtracks));
    for (const auto& r : parse.readings)
        for (const auto& m : r.result.nets) {
            PairSet got;
            for (auto [p, n] : m.pairs) got.insert({renamed(r.result.structure.occ[p].f), renamed(r.result.structure.occ[n].f)});
            c.expect(got == table, "pipeline matching differs from the table");
        }

    // the same sequent written with the letters of the worked example
    Sequent seq = parse_sequent(fixtures::did_sequent());
    auto start = seed_constraints(seq, parse_order_facts(fixtures::kDidFacts));
    if (!start) return c.expect(false, "worked store");
    auto r = prove_net(seq, *start);
    c.expect(r.nets.size() == 1, "nets = " + std::to_string(r.nets.size()));
    c.expect(r.stats.backtracks == 0, "backtracks = " + std::to_string(r.stats.backtracks));
    for (const auto& m : r.nets) {
        PairSet got;
        for (auto [p, n] : m.pairs) got.insert({r.structure.text(p), r.structure.text(n)});
        c.expect(got == table, "matching differs from the table");
    }
    std::uint64_t space = unpruned_matchings(r.structure);
    c.expect(space == 14400, "unpruned = " + std::to_string(space));
    auto all = prove_net(seq, *start, unfiltered());
    c.expect(all.stats.matchings_explored == 14400, "exhaustive search saw " + std::to_string(all.stats.matchings_explored));
    c.expect(all.nets.size() == 1, "exhaustive search nets = " + std::to_string(all.nets.size()));
    std::ostringstream os;
    os << "1 parse, 10 cells, " << space << " unpruned, " << r.stats.backtracks << " backtracks, " << r.stats.forced
       << " forced";
    detail = os.str();
}

void oracle(Check& c, std::string& detail) {
    gen::SequentGen g(20240);
    int yes = 0, n = 500;
    NetOptions o;
    o.max_nets = 1;
    for (int i = 0; i < n; ++i) {
        Sequent s = g.next();
        bool a = prove(s).has_value();
        bool b = !prove_net(s, {}, o).nets.empty();
        c.expect(a == b, "disagree on " + to_string(s));
        yes += a;
    }
    detail = std::to_string(n) + " sequents, " + std::to_string(yes) + " derivable";
}

void confluence(Check& c, std::string& detail) {
    std::mt19937 rng(99);
    int nets = 0, stuck = 0;
    auto orders = [&](const ProofStructure& ps, const Matching& m, bool want) {
        auto aps = abstract(ps, m.pairs, m.state.subst);
        for (int i = 0; i < 100; ++i) {
            auto r = contract(aps, &rng);
            c.expect(r.success == want, "an order disagrees");
            c.expect(aps.edges.size() - r.residual.edges.size() == r.trace.size(), "edge count");
        }
        (want ? nets : stuck)++;
    };
    std::vector<std::string> texts(fixtures::kComponentSequents.begin(), fixtures::kComponentSequents.end());
    texts.insert(texts.end(), fixtures::kCancellation.begin(), fixtures::kCancellation.end());
    texts.push_back(fixtures::kNotNet);
    for (const auto& t : texts) {
        auto ps = unfold(parse_sequent(t));
        enumerate_matchings(ps, {}, unfiltered(), [&](const Matching& m) {
            orders(ps, m, is_proof_net(ps, m));
            return false;
        });
    }
    Sequent seq = parse_sequent(fixtures::did_sequent());
    auto start = seed_constraints(seq, parse_order_facts(fixtures::kDidFacts));
    auto ps = unfold(seq);
    NetOptions o;
    o.lookahead = false;  // lets a few non-nets through
    if (start)
        enumerate_matchings(ps, *start, o, [&](const Matching& m) {
            orders(ps, m, is_proof_net(ps, m));
            return false;
        });
    c.expect(nets > 0 && stuck > 0, "need both nets and non-nets");
    detail = std::to_string(nets) + " nets, " + std::to_string(stuck) + " non-nets, 100 orders each";
}

void empty_string(Check& c) {
    // the gap itself spans (x,x); the host spans (0,1)
    NameSupply ns;
    auto a = translate_gap(parse_category("s |>! (np\\s)"), Term::pos(0), Term::pos(1), ns);
    auto b = translate_gap(parse_category("s |>! (s/np)"), Term::pos(0), Term::pos(1), ns);
    c.expect(a.mill->op == Op::Limp && alpha_equal(a.mill->left, parse_formula("forall x1 forall x0.[np(x0,x1) -o s(x0,x1)]")),
             "naive np\\s gap: " + to_string(a.mill));
    c.expect(alpha_equal(a.mill, b.mill), "naive variants differ: " + to_string(a.mill) + " / " + to_string(b.mill));
    auto d = translate_gap(parse_category("s |> (np\\s)"), Term::pos(0), Term::pos(1), ns);
    auto e = translate_gap(parse_category("s |> (s/np)"), Term::pos(0), Term::pos(1), ns);
    c.expect(!alpha_equal(d.mill, e.mill), "scoped variants coincide: " + to_string(d.mill));
}

struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<void(Check&, std::string&)> run;
};

}  // namespace

int main() {
    auto plain = [](void (*f)(Check&)) { return [f](Check& c, std::string&) { f(c); }; };
    std::vector<Criterion> all = {
        {1, "counting", 1000, plain(counting)},
        {2, "pattern catalogs", 1000, plain(catalogs)},
        {3, "schema fidelity", 1000, plain(schemas)},
        {4, "derivability fixtures", 1000, plain(derivability)},
        {5, "residuation suite", 30000, residuation},
        {6, "John gave Mary flowers", 1000, gave},
        {7, "John left before Mary did", 5000, did},
        {8, "oracle equivalence", 60000, oracle},
        {9, "contraction confluence", 10000, confluence},
        {10, "empty string", 1000, plain(empty_string)},
    };
    int failed = 0;
    for (const auto& cr : all) {
        Check c;
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c, detail);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms > cr.limit_ms) c.problems.push_back("took longer than " + std::to_string(int(cr.limit_ms)) + " ms");
        bool ok = c.problems.empty();
        failed += !ok;
        std::printf("criterion %2d %-28s %s  %8.1f ms", cr.id, cr.name, ok ? "PASS" : "FAIL", ms);
        if (!detail.empty()) std::printf("  (%s)", detail.c_str());
        std::printf("\n");
        for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
