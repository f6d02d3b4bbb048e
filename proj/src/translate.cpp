#include "follres/translate.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "follres/constraints.hpp"
#include "follres/parse.hpp"

namespace follres {

namespace {

void add_chain(const std::vector<Term>& t, std::vector<OrderFact>& out) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] != t[i]) out.push_back({t[i - 1], t[i], false});
}

struct Translator {
    NameSupply& names;
    DecoratedFormula out;

    Formula note(Formula f, const std::vector<Term>& span) {
        out.node_tuples.emplace_back(f, span);
        return f;
    }

    Formula run(const Cat& c, const std::vector<Term>& span) {
        add_chain(span, out.facts);
        switch (c->op) {
        case CatOp::Atom: {
            if (static_cast<int>(span.size()) != 2 * c->dim)
                throw TranslateError("atom " + c->name + " needs " + std::to_string(2 * c->dim) + " positions");
            return note(atom(c->name, span), span);
        }
        case CatOp::Gap: {
            if (span.size() != 2) throw TranslateError("a gap category spans a single segment");
            return gap(c, span[0], span[1]);
        }
        default: break;
        }

        Pattern p;
        try {
            p = effective_pattern(c);
        } catch (const std::invalid_argument& e) {
            throw TranslateError(e.what());
        }
        ConnectiveSchema s = schema(p);
        const std::vector<int>* own = nullptr;
        const std::vector<int>* bound = nullptr;
        Role role;
        switch (c->op) {
        case CatOp::Prod: own = &s.tuple_C; bound = &s.exist_vars; role = Role::Product; break;
        case CatOp::Under: own = &s.tuple_B; bound = &s.under_vars; role = Role::Under; break;
        default: own = &s.tuple_A; bound = &s.over_vars; role = Role::Over; break;
        }
        if (span.size() != own->size())
            throw TranslateError("span of " + std::to_string(span.size()) + " positions for " + to_string(c) +
                                 ", expected " + std::to_string(own->size()));

        std::map<int, Term> at;
        for (std::size_t i = 0; i < own->size(); ++i) at[(*own)[i]] = span[i];
        std::vector<std::string> vars;
        for (int i : *bound) {
            vars.push_back(names.fresh_bound("x"));
            at[i] = Term::var(vars.back());
        }
        auto tuple = [&](const std::vector<int>& idx) {
            std::vector<Term> t;
            for (int i : idx) t.push_back(at.at(i));
            return t;
        };
        for (const auto& f : s.required_facts.at(role)) out.facts.push_back({at.at(f.lo), at.at(f.hi), false});

        Formula body;
        Op q = Op::Forall;
        switch (c->op) {
        case CatOp::Prod: {
            Formula a = run(c->left, tuple(s.tuple_A));
            Formula b = run(c->right, tuple(s.tuple_B));
            body = tensor(a, b);
            q = Op::Exists;
            break;
        }
        case CatOp::Under: {
            Formula a = run(c->left, tuple(s.tuple_A));
            Formula r = run(c->right, tuple(s.tuple_C));
            body = limp(a, r);
            break;
        }
        default: {
            Formula b = run(c->right, tuple(s.tuple_B));
            Formula r = run(c->left, tuple(s.tuple_C));
            body = limp(b, r);
            break;
        }
        }
        note(body, span);
        Formula f = body;
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            f = q == Op::Forall ? forall(*it, f) : exists(*it, f);
            note(f, span);
        }
        return f;
    }

    Formula gap(const Cat& g, const Term& y, const Term& z) {
        if (cat_dim(g->right) != 1 || cat_dim(g->left) != 1)
            throw TranslateError("gap categories must be single-segment");
        std::string x = names.fresh_bound("x");
        Term xv = Term::var(x);
        Formula inner = run(g->right, {xv, xv});
        Formula result = run(g->left, {y, z});
        Formula f;
        if (g->variant == GapVariant::Scoped) {
            Formula body = note(limp(inner, result), {y, z});
            f = exists(x, body);
        } else {
            Formula hole = note(forall(x, inner), {xv, xv});
            f = limp(hole, result);
        }
        return note(f, {y, z});
    }
};

}  // namespace

const std::vector<Term>* DecoratedFormula::tuple_of(const Formula& f) const {
    for (const auto& [g, t] : node_tuples)
        if (g.get() == f.get()) return &t;
    return nullptr;
}

DecoratedFormula translate(const Cat& cat, const std::vector<Term>& span, NameSupply& names) {
    Translator tr{names, {}};
    tr.out.mill = tr.run(expand_abbreviations(cat), span);
    return std::move(tr.out);
}

DecoratedFormula translate_gap(const Cat& gap, const Term& y, const Term& z, NameSupply& names) {
    if (gap->op != CatOp::Gap) throw TranslateError("not a gap category: " + to_string(gap));
    return translate(gap, {y, z}, names);
}

Lexicon parse_lexicon(std::istream& in) {
    Lexicon lex;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto sep = line.find(":=");
        if (sep == std::string::npos) throw ParseError("lexicon line " + std::to_string(lineno) + ": missing ':='");
        std::istringstream w(line.substr(0, sep));
        std::string word, extra;
        w >> word;
        if (word.empty() || (w >> extra))
            throw ParseError("lexicon line " + std::to_string(lineno) + ": expected a single word");
        try {
            lex.push_back({word, parse_category(line.substr(sep + 2))});
        } catch (const ParseError& e) {
            throw ParseError("lexicon line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read lexicon " + path);
    return parse_lexicon(in);
}

std::vector<std::string> split_words(const std::string& sentence) {
    std::istringstream in(sentence);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<SentenceInstance> instantiate_sentence(const Lexicon& lex, const std::vector<std::string>& words,
                                                   const std::string& goal) {
    std::vector<std::vector<std::size_t>> options;
    for (const auto& w : words) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < lex.size(); ++i)
            if (lex[i].word == w) ids.push_back(i);
        if (ids.empty()) throw TranslateError("unknown word: " + w);
        options.push_back(std::move(ids));
    }
    Cat goal_cat = parse_category(goal);
    if (cat_dim(goal_cat) != 1) throw TranslateError("goal must be a single-segment category");

    std::vector<SentenceInstance> out;
    std::vector<std::size_t> pick(words.size(), 0);
    const int n = static_cast<int>(words.size());
    for (;;) {
        SentenceInstance inst;
        NameSupply names;
        for (int i = 0; i < n; ++i) {
            std::size_t e = options[i][pick[i]];
            inst.entry_choice.push_back(e);
            auto d = translate(lex[e].cat, {Term::pos(i), Term::pos(i + 1)}, names);
            inst.sequent.antecedent.push_back(d.mill);
            inst.facts.insert(inst.facts.end(), d.facts.begin(), d.facts.end());
            inst.decorations.push_back(std::move(d));
        }
        auto g = translate(goal_cat, {Term::pos(0), Term::pos(n)}, names);
        inst.sequent.succedent = g.mill;
        inst.facts.insert(inst.facts.end(), g.facts.begin(), g.facts.end());
        inst.decorations.push_back(std::move(g));
        // words are non-empty, so consecutive positions are strictly ordered
        std::vector<OrderFact> chain;
        for (int i = 0; i < n; ++i) chain.push_back({Term::pos(i), Term::pos(i + 1), true});
        if (n == 0) chain.push_back({Term::pos(0), Term::pos(0), false});
        inst.facts.insert(inst.facts.begin(), chain.begin(), chain.end());
        out.push_back(std::move(inst));

        int i = n - 1;
        while (i >= 0 && ++pick[i] == options[i].size()) pick[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::optional<Constraints> seed_constraints(const Sequent& seq, const std::vector<OrderFact>& facts) {
    Constraints c;
    for (const auto& f : resolve_terms(facts, binder_kinds(seq)))
        if (!c.assert_fact(f)) return std::nullopt;
    return c;
}

}  // namespace follres
