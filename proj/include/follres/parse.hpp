#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "follres/category.hpp"
#include "follres/formula.hpp"
#include "follres/order.hpp"

namespace follres {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bound variables are renamed apart on the way in, so every binder of the
// result (or of the whole sequent) has its own name. Free identifiers starting
// with an upper-case letter are metavariables, other free identifiers are
// constants, numbers are string positions.
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);
Cat parse_category(const std::string& text);

// "0<1,X<=1"; identifiers come back as bound-variable terms, see resolve_terms
std::vector<OrderFact> parse_order_facts(const std::string& text);

// kind each binder of the sequent gets during proof search: negative forall
// and positive exists give metavariables, the other two eigenvariables
std::map<std::string, TermKind> binder_kinds(const Sequent& s);

// map bound-variable terms onto the metavariables/eigenvariables that proof
// search will create for them; unknown upper-case names become metavariables,
// unknown lower-case names constants
Term resolve_term(const Term& t, const std::map<std::string, TermKind>& kinds);
std::vector<OrderFact> resolve_terms(const std::vector<OrderFact>& facts,
                                     const std::map<std::string, TermKind>& kinds);

}  // namespace follres
