#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "follres/constraints.hpp"
#include "follres/formula.hpp"
#include "follres/pattern.hpp"

namespace follres {

// Rule names: Ax, R*, L*, R-o, L-o, Rforall, Lforall, Rexists, Lexists
struct Derivation {
    std::string rule;
    Sequent conclusion;
    std::vector<Derivation> premisses;
    Formula principal;  // left rules
    Term term;          // eigenvariable or witness of quantifier rules
    Substitution unifier;  // final substitution, filled in at axioms
};

std::string to_string(const Derivation& d);
// checks every node against its rule; on failure describes the first bad node
bool validate_derivation(const Derivation& d, std::string* why = nullptr);
std::size_t derivation_size(const Derivation& d);

struct ProveOptions {
    std::size_t max_proofs = 1;
    std::size_t step_limit = 5'000'000;
};

struct ProveResult {
    std::vector<Derivation> proofs;
    std::size_t steps = 0;
    bool limit_hit = false;
};

ProveResult prove_all(const Sequent& seq, const Constraints& start = {}, const ProveOptions& opt = {});
std::optional<Derivation> prove(const Sequent& seq, const Constraints& start = {});

struct SuiteItem {
    std::string name;
    Sequent sequent;
    std::vector<OrderFact> facts;
    bool expected = true;
};

// Application, Co-Application and Monotonicity sequents for pattern p over
// atoms a, b, c whose dimensions fit the pattern, at the pattern's own indices
std::vector<SuiteItem> residuation_suite(const Pattern& p);

}  // namespace follres
