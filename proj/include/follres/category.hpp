#pragma once

#include <memory>
#include <string>

#include "follres/pattern.hpp"

namespace follres {

enum class CatOp { Atom, Prod, Under, Over, Gap };
enum class GapVariant { Scoped, Naive };

struct CatNode;
using Cat = std::shared_ptr<const CatNode>;

// Prod(p, A, B), Under(p, A, C) and Over(p, C, B) keep their operands in
// left/right textual order. An empty pattern means a plain connective whose
// pattern follows from the operand dimensions. Gap keeps result in left and
// the gapped category in right.
struct CatNode {
    CatOp op = CatOp::Atom;
    std::string name;
    int dim = 1;  // Atom only
    Pattern pattern;
    Cat left, right;
    GapVariant variant = GapVariant::Scoped;
};

Cat cat_atom(std::string name, int dim = 1);
Cat cat_prod(Cat a, Cat b, Pattern p = {});
Cat cat_under(Cat a, Cat c, Pattern p = {});
Cat cat_over(Cat c, Cat b, Pattern p = {});
Cat cat_gap(Cat result, Cat gap, GapVariant v);

// number of string segments the category denotes
int cat_dim(const Cat& c);
// explicit pattern, or the one inferred for a plain connective; throws on mismatch
Pattern effective_pattern(const Cat& c);
// vp is shorthand for np\s
Cat expand_abbreviations(const Cat& c);

std::string to_string(const Cat& c);

}  // namespace follres
