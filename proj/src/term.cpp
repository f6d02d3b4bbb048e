#include "follres/term.hpp"

#include <sstream>
#include <tuple>

namespace follres {

Term Term::var(std::string n) { return Term{TermKind::Var, std::move(n), 0, 0}; }
Term Term::meta(std::string n, int level) { return Term{TermKind::Meta, std::move(n), level, 0}; }
Term Term::eigen(std::string n, int level) { return Term{TermKind::Eigen, std::move(n), level, 0}; }
Term Term::pos(int v) { return Term{TermKind::Pos, std::to_string(v), 0, v}; }
Term Term::constant(std::string n) { return Term{TermKind::Const, std::move(n), 0, 0}; }

std::string Term::str() const { return name; }

bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name;
}

bool operator<(const Term& a, const Term& b) {
    return std::tie(a.kind, a.value, a.name) < std::tie(b.kind, b.value, b.name);
}

Term Substitution::apply(const Term& t) const {
    Term cur = t;
    // flat terms: a chain of meta bindings, never a cycle (bind refuses those)
    while (cur.is_meta()) {
        auto it = map_.find(cur.name);
        if (it == map_.end()) break;
        cur = it->second;
    }
    return cur;
}

void Substitution::bind(const Term& meta, const Term& value) {
    map_[meta.name] = value;
    metas_[meta.name] = meta;
}

std::string Substitution::str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [k, v] : map_) {
        if (!first) out << ", ";
        first = false;
        out << k << ":=" << apply(v).str();
    }
    out << "}";
    return out.str();
}

std::optional<Substitution> unify(const Term& t1, const Term& t2, Substitution s) {
    Term a = s.apply(t1);
    Term b = s.apply(t2);
    if (a == b) return s;
    if (a.is_meta()) {
        s.bind(a, b);
        return s;
    }
    if (b.is_meta()) {
        s.bind(b, a);
        return s;
    }
    return std::nullopt;  // two distinct rigid terms (or a stray bound variable)
}

std::string NameSupply::fresh_bound(const std::string& base) {
    int& n = used_.try_emplace(base, 0).first->second;
    for (;;) {
        std::string cand = base + std::to_string(n++);
        if (!used_.count(cand)) {
            used_[cand] = 0;
            return cand;
        }
    }
}

}  // namespace follres
