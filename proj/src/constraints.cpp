#include "follres/constraints.hpp"

namespace follres {

bool Constraints::absorb(const OrderStore::Result& r) {
    if (!r.consistent) return false;
    for (const auto& [a, b] : r.equalities)
        if (!unify_terms(a, b)) return false;
    return true;
}

bool Constraints::settle(const Substitution& before) {
    // merge each meta bound since `before` with its value
    std::vector<Term> fresh;
    for (const auto& [name, meta] : subst.metas())
        if (!before.bound(name)) fresh.push_back(meta);
    for (const auto& meta : fresh) {
        Term value = subst.apply(meta);
        if (!absorb(order.merge(meta, value))) return false;
    }
    return true;
}

bool Constraints::unify_terms(const Term& a, const Term& b) {
    Substitution before = subst;
    auto r = unify(a, b, subst);
    if (!r) return false;
    subst = std::move(*r);
    return settle(before);
}

bool Constraints::unify_atoms(const Formula& a, const Formula& b) {
    Substitution before = subst;
    auto r = follres::unify_atoms(a, b, subst);
    if (!r) return false;
    subst = std::move(*r);
    return settle(before);
}

bool Constraints::assert_fact(const OrderFact& f) {
    return absorb(order.assert_order(subst.apply(f.lo), subst.apply(f.hi), f.strict));
}

}  // namespace follres
