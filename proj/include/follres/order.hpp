#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "follres/term.hpp"

namespace follres {

struct OrderFact {
    Term lo, hi;
    bool strict = false;
};

enum class Relation { Leq, Lt, Eq, Geq, Gt, Incomparable };
const char* relation_name(Relation r);

// Partial order over position terms. Value type: search branches copy it.
// Nodes are union-find classes of terms; edges are <= or < between nodes.
// Pos constants are implicitly ordered by their integer value.
class OrderStore {
public:
    struct Result {
        bool consistent = true;
        std::vector<std::pair<Term, Term>> equalities;  // induced by <=-cycles
        std::string witness;
        explicit operator bool() const { return consistent; }
    };

    Result assert_order(const Term& a, const Term& b, bool strict);
    Result assert_fact(const OrderFact& f) { return assert_order(f.lo, f.hi, f.strict); }
    Result merge(const Term& a, const Term& b);

    Relation entails(const Term& a, const Term& b) const;
    bool consistent() const { return ok_; }
    bool contains(const Term& t) const { return index_.count(t) != 0; }

    std::vector<Term> terms() const { return terms_; }
    // covering pairs (a, b) with a < b or a <= b and nothing strictly in between,
    // over class representatives
    std::vector<std::pair<Term, Term>> hasse() const;
    Term representative(const Term& t) const;
    std::string str() const;

private:
    struct Edge {
        int from, to;
        bool strict;
    };

    int node(const Term& t);
    int find(int x) const;
    Result normalize();
    bool unite(int a, int b, Result& r);
    std::vector<Edge> class_edges() const;
    // best path a->b: 0 none, 1 non-strict, 2 strict
    int reach(int a, int b) const;

    std::vector<Term> terms_;
    mutable std::vector<int> parent_;
    std::map<Term, int> index_;
    std::vector<Edge> edges_;
    bool ok_ = true;
};

}  // namespace follres
