#include "follres/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "follres/category.hpp"
#include "follres/translate.hpp"

namespace follres {

namespace {

struct Node;
using NodeP = std::shared_ptr<const Node>;

struct Node {
    std::string rule;
    int principal = -1;
    std::vector<int> produced;
    int axiom = -1;
    Formula goal;
    Term term;
    std::vector<NodeP> prem;
};

// context entry: formula id plus the goal scope that introduced it
struct Entry {
    int id;
    int level;
};

struct St {
    Constraints c;
    std::map<std::string, int> meta_level;
    std::map<std::string, int> eigen_level;
};

using Ctx = std::vector<Entry>;
using K = std::function<bool(St&, Ctx&, NodeP)>;

class Search {
public:
    Search(const ProveOptions& opt) : opt_(opt) {}

    ProveResult run(const Sequent& seq, const Constraints& start) {
        St st;
        st.c = start;
        std::vector<int> in;
        for (const auto& f : seq.antecedent) in.push_back(add(f));
        K root = [&](St& s, Ctx& left, NodeP d) {
            if (!left.empty()) return false;
            Derivation der = build(*d, s.c.subst).first;
            result_.proofs.push_back(std::move(der));
            return result_.proofs.size() >= opt_.max_proofs;
        };
        goal(st, {}, in, seq.succedent, 1, root);
        result_.steps = steps_;
        return std::move(result_);
    }

private:
    int add(Formula f) {
        table_.push_back(std::move(f));
        return static_cast<int>(table_.size()) - 1;
    }

    static bool scope_ok(const St& st) {
        for (const auto& [name, m] : st.c.subst.metas()) {
            Term v = st.c.subst.apply(Term::meta(name));
            if (!v.is_eigen()) continue;
            auto ml = st.meta_level.find(name);
            auto el = st.eigen_level.find(v.name);
            int mlv = ml == st.meta_level.end() ? 0 : ml->second;
            int elv = el == st.eigen_level.end() ? 0 : el->second;
            // a metavariable may only stand for an eigenvariable that already existed
            if (elv >= mlv) return false;
        }
        return true;
    }

    NodeP node(std::string rule, Formula goal) {
        auto n = std::make_shared<Node>();
        n->rule = std::move(rule);
        n->goal = std::move(goal);
        return n;
    }

    bool goal(St st, Ctx ctx, std::vector<int> incoming, Formula g, int scope, const K& k) {
        if (++steps_ > opt_.step_limit) {
            result_.limit_hit = true;
            return true;
        }
        std::vector<std::shared_ptr<Node>> chain;  // unary invertible steps, bottom first
        std::vector<int> work(incoming.rbegin(), incoming.rend());
        auto drain = [&] {
            while (!work.empty()) {
                int id = work.back();
                work.pop_back();
                Formula f = table_[id];
                if (f->op == Op::Tensor) {
                    int a = add(f->left), b = add(f->right);
                    auto n = std::make_shared<Node>();
                    n->rule = "L*";
                    n->principal = id;
                    n->produced = {a, b};
                    n->goal = g;
                    chain.push_back(n);
                    work.push_back(b);
                    work.push_back(a);
                } else if (f->op == Op::Exists) {
                    Term e = names_.fresh_eigen(f->var);
                    st.eigen_level[e.name] = e.level;
                    int a = add(instantiate(f->left, f->var, e));
                    auto n = std::make_shared<Node>();
                    n->rule = "Lexists";
                    n->principal = id;
                    n->produced = {a};
                    n->goal = g;
                    n->term = e;
                    chain.push_back(n);
                    work.push_back(a);
                } else {
                    ctx.push_back({id, scope});
                }
            }
        };
        drain();
        while (g->op == Op::Limp || g->op == Op::Forall) {
            auto n = std::make_shared<Node>();
            n->goal = g;
            if (g->op == Op::Limp) {
                int a = add(g->left);
                n->rule = "R-o";
                n->produced = {a};
                chain.push_back(n);
                work.push_back(a);
                g = g->right;
                drain();
            } else {
                Term e = names_.fresh_eigen(g->var);
                st.eigen_level[e.name] = e.level;
                n->rule = "Rforall";
                n->term = e;
                chain.push_back(n);
                g = instantiate(g->left, g->var, e);
            }
        }
        K wrapped = [&k, chain, scope](St& s, Ctx& left, NodeP d) {
            for (const auto& e : left)
                if (e.level >= scope) return false;
            NodeP cur = d;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                auto n = std::make_shared<Node>(**it);
                n->prem = {cur};
                cur = n;
            }
            return k(s, left, cur);
        };
        return decide(st, ctx, g, scope, wrapped);
    }

    bool decide(const St& st, const Ctx& ctx, const Formula& g, int scope, const K& k) {
        if (g->op == Op::Atom) {
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                const Formula& f = table_[ctx[i].id];
                if (f->op != Op::Atom || f->pred != g->pred || f->args.size() != g->args.size()) continue;
                St s2 = st;
                if (!s2.c.unify_atoms(f, g) || !scope_ok(s2)) continue;
                Ctx left = ctx;
                left.erase(left.begin() + static_cast<long>(i));
                auto n = std::make_shared<Node>();
                n->rule = "Ax";
                n->axiom = ctx[i].id;
                n->goal = g;
                if (k(s2, left, n)) return true;
            }
        } else if (g->op == Op::Tensor) {
            K k1 = [&](St& s1, Ctx& left1, NodeP da) {
                K k2 = [&](St& s2, Ctx& left2, NodeP db) {
                    auto n = std::make_shared<Node>();
                    n->rule = "R*";
                    n->goal = g;
                    n->prem = {da, db};
                    return k(s2, left2, n);
                };
                return goal(s1, left1, {}, g->right, scope + 1, k2);
            };
            if (goal(st, ctx, {}, g->left, scope + 1, k1)) return true;
        } else if (g->op == Op::Exists) {
            St s2 = st;
            Term m = names_.fresh_meta(g->var);
            s2.meta_level[m.name] = m.level;
            K k1 = [&](St& s, Ctx& left, NodeP d) {
                auto n = std::make_shared<Node>();
                n->rule = "Rexists";
                n->goal = g;
                n->term = m;
                n->prem = {d};
                return k(s, left, n);
            };
            if (goal(s2, ctx, {}, instantiate(g->left, g->var, m), scope + 1, k1)) return true;
        }

        for (std::size_t i = 0; i < ctx.size(); ++i) {
            const int id = ctx[i].id;
            const Formula f = table_[id];
            Ctx rest = ctx;
            rest.erase(rest.begin() + static_cast<long>(i));
            if (f->op == Op::Limp) {
                K k1 = [&](St& s1, Ctx& left1, NodeP da) {
                    int b = add(f->right);
                    K k2 = [&, b](St& s2, Ctx& left2, NodeP dc) {
                        auto n = std::make_shared<Node>();
                        n->rule = "L-o";
                        n->principal = id;
                        n->produced = {b};
                        n->goal = g;
                        n->prem = {da, dc};
                        return k(s2, left2, n);
                    };
                    return goal(s1, left1, {b}, g, scope + 1, k2);
                };
                if (goal(st, rest, {}, f->left, scope + 1, k1)) return true;
            } else if (f->op == Op::Forall) {
                St s2 = st;
                Term m = names_.fresh_meta(f->var);
                s2.meta_level[m.name] = m.level;
                int a = add(instantiate(f->left, f->var, m));
                K k1 = [&, a, m](St& s, Ctx& left, NodeP d) {
                    auto n = std::make_shared<Node>();
                    n->rule = "Lforall";
                    n->principal = id;
                    n->produced = {a};
                    n->goal = g;
                    n->term = m;
                    n->prem = {d};
                    return k(s, left, n);
                };
                if (goal(s2, rest, {a}, g, scope + 1, k1)) return true;
            }
        }
        return false;
    }

    static void remove_one(std::vector<int>& v, int id) {
        auto it = std::find(v.begin(), v.end(), id);
        if (it != v.end()) v.erase(it);
    }

    std::pair<Derivation, std::vector<int>> build(const Node& n, const Substitution& s) {
        Derivation d;
        d.rule = n.rule;
        std::vector<int> ant;
        std::vector<std::vector<int>> pants;
        for (const auto& p : n.prem) {
            auto [pd, pa] = build(*p, s);
            d.premisses.push_back(std::move(pd));
            pants.push_back(std::move(pa));
        }
        if (n.rule == "Ax") {
            ant = {n.axiom};
            d.unifier = s;
        } else if (n.rule == "R*") {
            ant = pants[0];
            ant.insert(ant.end(), pants[1].begin(), pants[1].end());
        } else if (n.rule == "R-o") {
            ant = pants[0];
            remove_one(ant, n.produced[0]);
        } else if (n.rule == "Rforall" || n.rule == "Rexists") {
            ant = pants[0];
        } else if (n.rule == "L-o") {
            ant = pants[0];
            std::vector<int> right = pants[1];
            remove_one(right, n.produced[0]);
            ant.insert(ant.end(), right.begin(), right.end());
            ant.push_back(n.principal);
        } else {  // L*, Lforall, Lexists
            ant = pants[0];
            for (int p : n.produced) remove_one(ant, p);
            ant.push_back(n.principal);
        }
        std::sort(ant.begin(), ant.end());
        for (int id : ant) d.conclusion.antecedent.push_back(substitute(table_[id], s));
        d.conclusion.succedent = substitute(n.goal, s);
        if (n.principal >= 0) d.principal = substitute(table_[n.principal], s);
        if (!n.term.name.empty()) d.term = s.apply(n.term);
        return {std::move(d), std::move(ant)};
    }

    ProveOptions opt_;
    ProveResult result_;
    std::vector<Formula> table_;
    NameSupply names_;
    std::size_t steps_ = 0;
};

// ---- validation

std::vector<std::string> keys(const std::vector<Formula>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(to_string(f));
    std::sort(out.begin(), out.end());
    return out;
}

bool take(std::vector<std::string>& from, const std::string& what) {
    auto it = std::find(from.begin(), from.end(), what);
    if (it == from.end()) return false;
    from.erase(it);
    return true;
}

bool check(const Derivation& d, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = d.rule + " at " + to_string(d.conclusion) + ": " + m;
        return false;
    };
    const Formula& g = d.conclusion.succedent;
    auto ant = keys(d.conclusion.antecedent);
    const auto& P = d.premisses;
    auto arity = [&](std::size_t n) { return P.size() == n; };
    auto same = [](const Formula& a, const Formula& b) { return to_string(a) == to_string(b); };

    if (d.rule == "Ax") {
        if (!arity(0) || ant.size() != 1 || ant[0] != to_string(g)) return fail("not an identity");
    } else if (d.rule == "R*") {
        if (!arity(2) || g->op != Op::Tensor) return fail("shape");
        if (!same(P[0].conclusion.succedent, g->left) || !same(P[1].conclusion.succedent, g->right))
            return fail("premiss goals");
        auto both = P[0].conclusion.antecedent;
        both.insert(both.end(), P[1].conclusion.antecedent.begin(), P[1].conclusion.antecedent.end());
        if (keys(both) != ant) return fail("context split");
    } else if (d.rule == "R-o") {
        if (!arity(1) || g->op != Op::Limp || !same(P[0].conclusion.succedent, g->right)) return fail("shape");
        auto want = ant;
        want.push_back(to_string(g->left));
        std::sort(want.begin(), want.end());
        if (keys(P[0].conclusion.antecedent) != want) return fail("context");
    } else if (d.rule == "Rforall" || d.rule == "Rexists") {
        Op q = d.rule == "Rforall" ? Op::Forall : Op::Exists;
        if (!arity(1) || g->op != q) return fail("shape");
        if (!same(P[0].conclusion.succedent, instantiate(g->left, g->var, d.term))) return fail("instance");
        if (keys(P[0].conclusion.antecedent) != ant) return fail("context");
        if (q == Op::Forall) {
            if (!d.term.is_eigen()) return fail("eigenvariable is not a variable");
            bool free_below = has_free_term(g, d.term);
            for (const auto& f : d.conclusion.antecedent) free_below = free_below || has_free_term(f, d.term);
            if (free_below) return fail("eigenvariable free in conclusion");
        }
    } else if (d.rule == "L*" || d.rule == "Lforall" || d.rule == "Lexists") {
        if (!arity(1) || !d.principal) return fail("shape");
        auto rest = ant;
        if (!take(rest, to_string(d.principal))) return fail("principal missing");
        const Formula& f = d.principal;
        if (d.rule == "L*") {
            if (f->op != Op::Tensor) return fail("principal shape");
            rest.push_back(to_string(f->left));
            rest.push_back(to_string(f->right));
        } else {
            if (f->op != (d.rule == "Lforall" ? Op::Forall : Op::Exists)) return fail("principal shape");
            rest.push_back(to_string(instantiate(f->left, f->var, d.term)));
            if (d.rule == "Lexists") {
                if (!d.term.is_eigen()) return fail("eigenvariable is not a variable");
                bool free_below = has_free_term(g, d.term);
                for (const auto& h : d.conclusion.antecedent) free_below = free_below || has_free_term(h, d.term);
                if (free_below) return fail("eigenvariable free in conclusion");
            }
        }
        std::sort(rest.begin(), rest.end());
        if (keys(P[0].conclusion.antecedent) != rest || !same(P[0].conclusion.succedent, g))
            return fail("premiss");
    } else if (d.rule == "L-o") {
        if (!arity(2) || !d.principal || d.principal->op != Op::Limp) return fail("shape");
        auto rest = ant;
        if (!take(rest, to_string(d.principal))) return fail("principal missing");
        if (!same(P[0].conclusion.succedent, d.principal->left) || !same(P[1].conclusion.succedent, g))
            return fail("premiss goals");
        auto right = keys(P[1].conclusion.antecedent);
        if (!take(right, to_string(d.principal->right))) return fail("consequent not in right premiss");
        auto both = P[0].conclusion.antecedent;
        std::vector<std::string> combined = keys(both);
        combined.insert(combined.end(), right.begin(), right.end());
        std::sort(combined.begin(), combined.end());
        if (combined != rest) return fail("context split");
    } else {
        return fail("unknown rule");
    }
    for (const auto& p : P)
        if (!check(p, why)) return false;
    return true;
}

void print(const Derivation& d, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += d.rule + "  " + to_string(d.conclusion);
    if ((d.rule == "Rforall" || d.rule == "Lexists" || d.rule == "Lforall" || d.rule == "Rexists"))
        out += "   [" + d.term.str() + "]";
    out += '\n';
    for (const auto& p : d.premisses) print(p, depth + 1, out);
}

}  // namespace

std::string to_string(const Derivation& d) {
    std::string out;
    print(d, 0, out);
    return out;
}

bool validate_derivation(const Derivation& d, std::string* why) { return check(d, why); }

std::size_t derivation_size(const Derivation& d) {
    std::size_t n = 1;
    for (const auto& p : d.premisses) n += derivation_size(p);
    return n;
}

ProveResult prove_all(const Sequent& seq, const Constraints& start, const ProveOptions& opt) {
    Search s(opt);
    return s.run(seq, start);
}

std::optional<Derivation> prove(const Sequent& seq, const Constraints& start) {
    auto r = prove_all(seq, start);
    if (r.proofs.empty()) return std::nullopt;
    return std::move(r.proofs.front());
}

std::vector<SuiteItem> residuation_suite(const Pattern& p) {
    ConnectiveSchema s = schema(p);
    Cat a = cat_atom("a", s.dim_a());
    Cat b = cat_atom("b", s.dim_b());
    Cat c = cat_atom("c", s.dim_c());
    auto span = [](const std::vector<int>& idx) {
        std::vector<Term> t;
        for (int i : idx) t.push_back(Term::pos(i));
        return t;
    };
    std::vector<SuiteItem> out;
    auto item = [&](std::string name, std::vector<Cat> lhs, Cat rhs, const std::vector<int>& idx) {
        SuiteItem it;
        it.name = p + " " + name;
        NameSupply names;
        for (const auto& l : lhs) {
            auto d = translate(l, span(idx), names);
            it.sequent.antecedent.push_back(d.mill);
            it.facts.insert(it.facts.end(), d.facts.begin(), d.facts.end());
        }
        auto d = translate(rhs, span(idx), names);
        it.sequent.succedent = d.mill;
        it.facts.insert(it.facts.end(), d.facts.begin(), d.facts.end());
        out.push_back(std::move(it));
    };
    item("application /", {cat_prod(cat_over(c, b, p), b, p)}, c, s.tuple_C);
    item("application \\", {cat_prod(a, cat_under(a, c, p), p)}, c, s.tuple_C);
    item("co-application /", {a}, cat_over(cat_prod(a, b, p), b, p), s.tuple_A);
    item("co-application \\", {b}, cat_under(a, cat_prod(a, b, p), p), s.tuple_B);
    item("monotonicity \\", {cat_under(a, c, p)}, cat_under(a, c, p), s.tuple_B);
    item("monotonicity *", {cat_prod(a, b, p)}, cat_prod(a, b, p), s.tuple_C);
    item("monotonicity /", {cat_over(c, b, p)}, cat_over(c, b, p), s.tuple_A);
    return out;
}

}  // namespace follres
