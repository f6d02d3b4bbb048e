#include "follres/category.hpp"

#include <stdexcept>

namespace follres {

namespace {

Cat make(CatNode n) { return std::make_shared<const CatNode>(std::move(n)); }

Cat binary(CatOp op, Cat l, Cat r, Pattern p) {
    if (!p.empty() && !validate_pattern(p)) throw std::invalid_argument("invalid pattern: " + p);
    CatNode n;
    n.op = op;
    n.left = std::move(l);
    n.right = std::move(r);
    n.pattern = std::move(p);
    return make(std::move(n));
}

int count_sym(const Pattern& p, char c) {
    int n = 0;
    for (char x : p) n += x == c;
    return n;
}

int count_runs(const Pattern& p) {
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != '1' && (i == 0 || p[i - 1] == '1')) ++n;
    return n;
}

void print(const Cat& c, std::string& out, bool operand) {
    if (c->op == CatOp::Atom) {
        out += c->name;
        return;
    }
    if (operand) out += '(';
    print(c->left, out, true);
    switch (c->op) {
    case CatOp::Prod: out += '*'; break;
    case CatOp::Under: out += '\\'; break;
    case CatOp::Over: out += '/'; break;
    case CatOp::Gap: out += c->variant == GapVariant::Naive ? " |>! " : " |> "; break;
    default: break;
    }
    if (!c->pattern.empty()) out += "[" + c->pattern + "]";
    print(c->right, out, true);
    if (operand) out += ')';
}

}  // namespace

Cat cat_atom(std::string name, int dim) {
    CatNode n;
    n.op = CatOp::Atom;
    n.name = std::move(name);
    n.dim = dim;
    return make(std::move(n));
}

Cat cat_prod(Cat a, Cat b, Pattern p) { return binary(CatOp::Prod, std::move(a), std::move(b), std::move(p)); }
Cat cat_under(Cat a, Cat c, Pattern p) { return binary(CatOp::Under, std::move(a), std::move(c), std::move(p)); }
Cat cat_over(Cat c, Cat b, Pattern p) { return binary(CatOp::Over, std::move(c), std::move(b), std::move(p)); }

Cat cat_gap(Cat result, Cat gap, GapVariant v) {
    CatNode n;
    n.op = CatOp::Gap;
    n.left = std::move(result);
    n.right = std::move(gap);
    n.variant = v;
    return make(std::move(n));
}

Pattern effective_pattern(const Cat& c) {
    if (c->op == CatOp::Atom || c->op == CatOp::Gap) return {};
    int dl = cat_dim(c->left), dr = cat_dim(c->right);
    Pattern p = c->pattern;
    if (p.empty()) {
        int m = 0, n = 0;
        switch (c->op) {
        case CatOp::Prod: m = dl; n = dr; break;
        case CatOp::Under: m = dl; n = dr - dl + 1; break;
        case CatOp::Over: n = dr; m = dl - dr + 1; break;
        default: break;
        }
        if (m < 1 || n < 1)
            throw std::invalid_argument("no plain connective fits operand dimensions in " + to_string(c));
        p = default_pattern(m, n);
    }
    int a = count_sym(p, 'a'), b = count_sym(p, 'b'), runs = count_runs(p);
    bool ok = true;
    switch (c->op) {
    case CatOp::Prod: ok = dl == a && dr == b; break;
    case CatOp::Under: ok = dl == a && dr == runs; break;
    case CatOp::Over: ok = dl == runs && dr == b; break;
    default: break;
    }
    if (!ok) throw std::invalid_argument("pattern " + p + " does not fit operands of " + to_string(c));
    return p;
}

int cat_dim(const Cat& c) {
    switch (c->op) {
    case CatOp::Atom: return c->dim;
    case CatOp::Gap: return cat_dim(c->left);
    case CatOp::Prod: return count_runs(effective_pattern(c));
    case CatOp::Under: return count_sym(effective_pattern(c), 'b');
    case CatOp::Over: return count_sym(effective_pattern(c), 'a');
    }
    return 1;
}

Cat expand_abbreviations(const Cat& c) {
    if (c->op == CatOp::Atom) {
        if (c->name == "vp") return cat_under(cat_atom("np"), cat_atom("s"));
        return c;
    }
    CatNode n = *c;
    n.left = expand_abbreviations(c->left);
    n.right = expand_abbreviations(c->right);
    return make(std::move(n));
}

std::string to_string(const Cat& c) {
    std::string out;
    print(c, out, false);
    return out;
}

}  // namespace follres
