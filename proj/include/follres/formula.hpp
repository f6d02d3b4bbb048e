#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "follres/term.hpp"

namespace follres {

enum class Op { Atom, Tensor, Limp, Forall, Exists };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    Op op = Op::Atom;
    std::string pred;          // Atom
    std::vector<Term> args;    // Atom
    Formula left, right;       // Tensor, Limp (antecedent, consequent)
    std::string var;           // Forall, Exists
    Formula body() const { return left; }
};

Formula atom(std::string pred, std::vector<Term> args = {});
Formula tensor(Formula a, Formula b);
Formula limp(Formula a, Formula b);
Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);
Formula quantify(Op q, const std::vector<std::string>& vars, Formula body);

inline bool is_binary(const Formula& f) { return f->op == Op::Tensor || f->op == Op::Limp; }
inline bool is_quant(const Formula& f) { return f->op == Op::Forall || f->op == Op::Exists; }

std::string to_string(const Formula& f);

// replace bound variable occurrences Var(var) by t (the binder itself is dropped by the caller)
Formula instantiate(const Formula& body, const std::string& var, const Term& t);
Formula substitute(const Formula& f, const Substitution& s);

// rename every Term via fn (used for skolemising and for mapping store terms)
template <class Fn>
Formula map_terms(const Formula& f, Fn fn);

std::set<std::string> free_eigenvariables(const Formula& f);
bool has_free_term(const Formula& f, const Term& t);
void collect_terms(const Formula& f, std::vector<Term>& out);

bool same_formula(const Formula& a, const Formula& b);  // syntactic identity
bool alpha_equal(const Formula& a, const Formula& b);

std::optional<Substitution> unify_atoms(const Formula& a1, const Formula& a2, Substitution s);

struct Sequent {
    std::vector<Formula> antecedent;
    Formula succedent;
};

std::string to_string(const Sequent& s);

// ---- template implementation

template <class Fn>
Formula map_terms(const Formula& f, Fn fn) {
    switch (f->op) {
    case Op::Atom: {
        std::vector<Term> args;
        args.reserve(f->args.size());
        for (const auto& t : f->args) args.push_back(fn(t));
        return atom(f->pred, std::move(args));
    }
    case Op::Tensor: return tensor(map_terms(f->left, fn), map_terms(f->right, fn));
    case Op::Limp: return limp(map_terms(f->left, fn), map_terms(f->right, fn));
    case Op::Forall: return forall(f->var, map_terms(f->left, fn));
    case Op::Exists: return exists(f->var, map_terms(f->left, fn));
    }
    return f;
}

}  // namespace follres
