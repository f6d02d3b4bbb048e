#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace follres {

// Var is a bound variable occurrence inside a quantified formula. The other
// four kinds are the free terms that proof search manipulates.
enum class TermKind { Var, Meta, Eigen, Pos, Const };

struct Term {
    TermKind kind = TermKind::Const;
    std::string name;
    int level = 0;   // creation index, Meta and Eigen only
    int value = 0;   // Pos only

    static Term var(std::string n);
    static Term meta(std::string n, int level = 0);
    static Term eigen(std::string n, int level = 0);
    static Term pos(int v);
    static Term constant(std::string n);

    bool is_meta() const { return kind == TermKind::Meta; }
    bool is_eigen() const { return kind == TermKind::Eigen; }
    bool is_pos() const { return kind == TermKind::Pos; }
    bool rigid() const {
        return kind == TermKind::Eigen || kind == TermKind::Pos || kind == TermKind::Const;
    }
    std::string str() const;
};

// identity ignores the creation level
bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
bool operator<(const Term& a, const Term& b);

// Triangular substitution keyed by Meta name. apply() chases bindings, so the
// result of apply is always fully resolved and applying twice is a no-op.
class Substitution {
public:
    Term apply(const Term& t) const;
    bool bound(const std::string& meta) const { return map_.count(meta) != 0; }
    void bind(const Term& meta, const Term& value);
    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }
    const std::map<std::string, Term>& bindings() const { return map_; }
    // metas (with their levels) that have been bound
    const std::map<std::string, Term>& metas() const { return metas_; }
    std::string str() const;

private:
    std::map<std::string, Term> map_;
    std::map<std::string, Term> metas_;
};

std::optional<Substitution> unify(const Term& t1, const Term& t2, Substitution s);

// Per-attempt supply of creation levels and fresh names.
class NameSupply {
public:
    int next_level() { return ++level_; }
    Term fresh_meta(const std::string& base) { return Term::meta(base, next_level()); }
    Term fresh_eigen(const std::string& base) { return Term::eigen(base, next_level()); }
    std::string fresh_bound(const std::string& base = "x");
    void reserve(const std::string& name) { used_[name] = 0; }

private:
    int level_ = 0;
    std::map<std::string, int> used_;
};

}  // namespace follres
