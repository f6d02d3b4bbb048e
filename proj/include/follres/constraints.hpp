#pragma once

#include <vector>

#include "follres/formula.hpp"
#include "follres/order.hpp"

namespace follres {

// Substitution and order store kept in step: every new binding is merged into
// the store, and every equality the store derives is unified back.
struct Constraints {
    Substitution subst;
    OrderStore order;

    bool unify_atoms(const Formula& a, const Formula& b);
    bool unify_terms(const Term& a, const Term& b);
    bool assert_fact(const OrderFact& f);

private:
    bool settle(const Substitution& before);
    bool absorb(const OrderStore::Result& r);
};

}  // namespace follres
