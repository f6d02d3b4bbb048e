#include "follres/formula.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace follres {

namespace {

Formula make(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }

void print(const Formula& f, std::string& out, bool operand) {
    switch (f->op) {
    case Op::Atom:
        out += f->pred;
        if (!f->args.empty()) {
            out += '(';
            for (std::size_t i = 0; i < f->args.size(); ++i) {
                if (i) out += ',';
                out += f->args[i].str();
            }
            out += ')';
        }
        return;
    case Op::Tensor:
    case Op::Limp:
        if (operand) out += '(';
        print(f->left, out, true);
        out += f->op == Op::Tensor ? " * " : " -o ";
        print(f->right, out, true);
        if (operand) out += ')';
        return;
    case Op::Forall:
    case Op::Exists: {
        if (operand) out += '(';
        out += f->op == Op::Forall ? "forall " : "exists ";
        out += f->var;
        out += '.';
        const Formula& b = f->left;
        if (is_binary(b)) {
            out += '[';
            print(b, out, false);
            out += ']';
        } else {
            out += ' ';
            print(b, out, false);
        }
        if (operand) out += ')';
        return;
    }
    }
}

}  // namespace

Formula atom(std::string pred, std::vector<Term> args) {
    FormulaNode n;
    n.op = Op::Atom;
    n.pred = std::move(pred);
    n.args = std::move(args);
    return make(std::move(n));
}

Formula tensor(Formula a, Formula b) {
    FormulaNode n;
    n.op = Op::Tensor;
    n.left = std::move(a);
    n.right = std::move(b);
    return make(std::move(n));
}

Formula limp(Formula a, Formula b) {
    FormulaNode n;
    n.op = Op::Limp;
    n.left = std::move(a);
    n.right = std::move(b);
    return make(std::move(n));
}

Formula forall(std::string var, Formula body) {
    FormulaNode n;
    n.op = Op::Forall;
    n.var = std::move(var);
    n.left = std::move(body);
    return make(std::move(n));
}

Formula exists(std::string var, Formula body) {
    FormulaNode n;
    n.op = Op::Exists;
    n.var = std::move(var);
    n.left = std::move(body);
    return make(std::move(n));
}

Formula quantify(Op q, const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = q == Op::Forall ? forall(*it, body) : exists(*it, body);
    return body;
}

std::string to_string(const Formula& f) {
    std::string out;
    // a quantifier can sit unbracketed at the top
    print(f, out, false);
    return out;
}

std::string to_string(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s.antecedent[i]);
    }
    out += out.empty() ? "|- " : " |- ";
    out += to_string(s.succedent);
    return out;
}

Formula instantiate(const Formula& body, const std::string& var, const Term& t) {
    return map_terms(body, [&](const Term& x) {
        return x.kind == TermKind::Var && x.name == var ? t : x;
    });
}

Formula substitute(const Formula& f, const Substitution& s) {
    if (s.empty()) return f;
    return map_terms(f, [&](const Term& x) { return s.apply(x); });
}

void collect_terms(const Formula& f, std::vector<Term>& out) {
    if (f->op == Op::Atom) {
        out.insert(out.end(), f->args.begin(), f->args.end());
        return;
    }
    collect_terms(f->left, out);
    if (f->right) collect_terms(f->right, out);
}

std::set<std::string> free_eigenvariables(const Formula& f) {
    std::vector<Term> ts;
    collect_terms(f, ts);
    std::set<std::string> out;
    for (const auto& t : ts)
        if (t.is_eigen()) out.insert(t.name);
    return out;
}

bool has_free_term(const Formula& f, const Term& t) {
    std::vector<Term> ts;
    collect_terms(f, ts);
    return std::find(ts.begin(), ts.end(), t) != ts.end();
}

bool same_formula(const Formula& a, const Formula& b) {
    if (a->op != b->op) return false;
    switch (a->op) {
    case Op::Atom: return a->pred == b->pred && a->args == b->args;
    case Op::Tensor:
    case Op::Limp: return same_formula(a->left, b->left) && same_formula(a->right, b->right);
    case Op::Forall:
    case Op::Exists: return a->var == b->var && same_formula(a->left, b->left);
    }
    return false;
}

namespace {

using Env = std::map<std::string, std::string>;

bool alpha(const Formula& a, const Formula& b, const Env& ab, const Env& ba) {
    if (a->op != b->op) return false;
    switch (a->op) {
    case Op::Atom: {
        if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
        for (std::size_t i = 0; i < a->args.size(); ++i) {
            const Term& x = a->args[i];
            const Term& y = b->args[i];
            bool xb = x.kind == TermKind::Var && ab.count(x.name);
            bool yb = y.kind == TermKind::Var && ba.count(y.name);
            if (xb != yb) return false;
            if (xb) {
                if (ab.at(x.name) != y.name) return false;
            } else if (x != y) {
                return false;
            }
        }
        return true;
    }
    case Op::Tensor:
    case Op::Limp:
        return alpha(a->left, b->left, ab, ba) && alpha(a->right, b->right, ab, ba);
    case Op::Forall:
    case Op::Exists: {
        // adjacent binders of one kind commute, so compare whole blocks
        std::vector<std::string> va, vb;
        Formula ia = a, ib = b;
        while (ia->op == a->op) { va.push_back(ia->var); ia = ia->left; }
        while (ib->op == a->op) { vb.push_back(ib->var); ib = ib->left; }
        if (va.size() != vb.size()) return false;
        std::vector<std::size_t> perm(vb.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Env ab2 = ab, ba2 = ba;
            for (std::size_t i = 0; i < va.size(); ++i) {
                ab2[va[i]] = vb[perm[i]];
                ba2[vb[perm[i]]] = va[i];
            }
            if (alpha(ia, ib, ab2, ba2)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
    }
    return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) { return alpha(a, b, {}, {}); }

std::optional<Substitution> unify_atoms(const Formula& a1, const Formula& a2, Substitution s) {
    if (a1->op != Op::Atom || a2->op != Op::Atom) return std::nullopt;
    if (a1->pred != a2->pred || a1->args.size() != a2->args.size()) return std::nullopt;
    for (std::size_t i = 0; i < a1->args.size(); ++i) {
        auto r = unify(a1->args[i], a2->args[i], std::move(s));
        if (!r) return std::nullopt;
        s = std::move(*r);
    }
    return s;
}

}  // namespace follres
