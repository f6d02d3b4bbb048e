#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "follres/category.hpp"
#include "follres/constraints.hpp"
#include "follres/formula.hpp"
#include "follres/order.hpp"

namespace follres {

struct DecoratedFormula {
    Formula mill;
    // every subformula occurrence (by node identity) with its position tuple
    std::vector<std::pair<Formula, std::vector<Term>>> node_tuples;
    std::vector<OrderFact> facts;  // over positions and bound-variable terms

    const std::vector<Term>* tuple_of(const Formula& f) const;
};

struct TranslateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DecoratedFormula translate(const Cat& cat, const std::vector<Term>& span, NameSupply& names);
DecoratedFormula translate_gap(const Cat& gap, const Term& y, const Term& z, NameSupply& names);

struct LexEntry {
    std::string word;
    Cat cat;
};
using Lexicon = std::vector<LexEntry>;

Lexicon parse_lexicon(std::istream& in);
Lexicon load_lexicon(const std::string& path);

struct SentenceInstance {
    Sequent sequent;
    std::vector<OrderFact> facts;  // sentence chain plus every decoration fact
    std::vector<DecoratedFormula> decorations;
    std::vector<std::size_t> entry_choice;  // index into the lexicon, per word
};

// one instance per combination of lexical entries; throws TranslateError on an unknown word
std::vector<SentenceInstance> instantiate_sentence(const Lexicon& lex, const std::vector<std::string>& words,
                                                   const std::string& goal);

std::vector<std::string> split_words(const std::string& sentence);

// substitution and store over the terms proof search uses for this sequent;
// nullopt if the facts clash
std::optional<Constraints> seed_constraints(const Sequent& seq, const std::vector<OrderFact>& facts);

}  // namespace follres
