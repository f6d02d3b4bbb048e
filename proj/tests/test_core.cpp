#include <gtest/gtest.h>

#include <random>

#include "follres/formula.hpp"
#include "follres/parse.hpp"

using namespace follres;

namespace {

Substitution bind1(const std::string& m, const Term& v) {
    Substitution s;
    s.bind(Term::meta(m), v);
    return s;
}

}  // namespace

TEST(Substitute, MetaReplaced) {
    Formula f = parse_formula("b(Y)");
    Formula g = substitute(f, bind1("Y", Term::eigen("x")));
    EXPECT_EQ(to_string(g), "b(x)");
    EXPECT_TRUE(g->args[0].is_eigen());
}

TEST(Substitute, EmptyIsIdentity) {
    Formula f = parse_formula("a");
    EXPECT_TRUE(same_formula(substitute(f, {}), f));
}

TEST(Substitute, BoundVariableUntouched) {
    Formula f = parse_formula("forall z. p(z,Y)");
    Formula g = substitute(f, bind1("Y", Term::pos(0)));
    EXPECT_TRUE(alpha_equal(g, parse_formula("forall z. p(z,0)")));
    EXPECT_EQ(g->left->args[0].kind, TermKind::Var);
}

TEST(Unify, MetaAgainstEigen) {
    auto s = unify(Term::meta("Y"), Term::eigen("x"), {});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->apply(Term::meta("Y")), Term::eigen("x"));
}

TEST(Unify, RigidClash) {
    EXPECT_FALSE(unify(Term::eigen("x1"), Term::pos(2), {}));
    EXPECT_FALSE(unify(Term::pos(2), Term::pos(5), {}));
    EXPECT_FALSE(unify(Term::eigen("x"), Term::constant("x"), {}));
}

TEST(Unify, IdentityLeavesSubstitution) {
    auto s = unify(Term::meta("A"), Term::meta("A"), {});
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->empty());
}

TEST(Unify, ChainsResolve) {
    auto s = unify(Term::meta("X"), Term::meta("Y"), {});
    s = unify(Term::meta("Y"), Term::pos(3), *s);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->apply(Term::meta("X")), Term::pos(3));
    EXPECT_FALSE(unify(Term::meta("X"), Term::pos(4), *s));
}

TEST(UnifyAtoms, Binds) {
    auto s = unify_atoms(parse_formula("np(Y,Z)"), parse_formula("np(0,1)"), {});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->apply(Term::meta("Y")), Term::pos(0));
    EXPECT_EQ(s->apply(Term::meta("Z")), Term::pos(1));
}

TEST(UnifyAtoms, EigenAgainstPosition) {
    Formula a = atom("s", {Term::eigen("x2"), Term::eigen("x1")});
    EXPECT_FALSE(unify_atoms(a, parse_formula("s(A,2)"), {}));
}

TEST(UnifyAtoms, PredicateMismatch) {
    EXPECT_FALSE(unify_atoms(parse_formula("np(C,D)"), parse_formula("s(C,D)"), {}));
    EXPECT_FALSE(unify_atoms(parse_formula("np(C)"), parse_formula("np(C,D)"), {}));
}

TEST(FreeEigen, Examples) {
    Formula ab = tensor(atom("a"), atom("b", {Term::eigen("x")}));
    EXPECT_EQ(free_eigenvariables(ab), std::set<std::string>{"x"});
    EXPECT_TRUE(free_eigenvariables(parse_formula("forall x. b(x)")).empty());
    EXPECT_TRUE(free_eigenvariables(parse_formula("a")).empty());
}

TEST(Alpha, QuantifierBlocksCommute) {
    EXPECT_TRUE(alpha_equal(parse_formula("forall x1 forall x0.[np(x0,x1) -o s(x0,x1)]"),
                            parse_formula("forall y1 forall y2.[np(y1,y2) -o s(y1,y2)]")));
}

TEST(Alpha, ScopeMatters) {
    EXPECT_FALSE(alpha_equal(parse_formula("exists x.[np(x,x) -o s(y,z)]"),
                             parse_formula("forall x.[np(x,x)] -o s(y,z)")));
    EXPECT_FALSE(alpha_equal(parse_formula("forall x.[p(x) -o q(x)]"), parse_formula("exists x.[p(x) -o q(x)]")));
    EXPECT_TRUE(alpha_equal(parse_formula("a"), parse_formula("a")));
}

TEST(Parse, RenamesApart) {
    Sequent s = parse_sequent("forall x. p(x), forall x. q(x) |- forall x. r(x)");
    std::set<std::string> vars = {s.antecedent[0]->var, s.antecedent[1]->var, s.succedent->var};
    EXPECT_EQ(vars.size(), 3u);
}

TEST(Parse, RoundTrip) {
    for (const char* t : {"forall A.[np(A,1) -o s(A,2)]", "exists y.[a(0,y) * b(y,1)]", "a * forall x. b(x)",
                          "forall x.[np(x,x)] -o s(y,z)"}) {
        Formula f = parse_formula(t);
        EXPECT_TRUE(same_formula(parse_formula(to_string(f)), f)) << t;
    }
}

TEST(Parse, QuantifierScopeIsOneGroup) {
    Formula f = parse_formula("forall x.[p(x)] -o q");
    EXPECT_EQ(f->op, Op::Limp);
    EXPECT_EQ(f->left->op, Op::Forall);
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_formula("a -o b -o c"), ParseError);
    EXPECT_THROW(parse_formula("forall . a"), ParseError);
    EXPECT_THROW(parse_sequent("a, b"), ParseError);
    EXPECT_THROW(parse_formula("p(1,"), ParseError);
}

// unification is symmetric and really equates the atoms
TEST(UnifyProperty, SymmetricAndSound) {
    std::mt19937 rng(7);
    auto pick = [&]() {
        switch (rng() % 4) {
        case 0: return Term::meta(std::string(1, static_cast<char>('A' + rng() % 3)));
        case 1: return Term::eigen(std::string(1, static_cast<char>('x' + rng() % 2)));
        case 2: return Term::pos(static_cast<int>(rng() % 3));
        default: return Term::constant("c");
        }
    };
    for (int i = 0; i < 500; ++i) {
        Formula a = atom("p", {pick(), pick(), pick()});
        Formula b = atom("p", {pick(), pick(), pick()});
        auto s1 = unify_atoms(a, b, {});
        auto s2 = unify_atoms(b, a, {});
        ASSERT_EQ(s1.has_value(), s2.has_value());
        if (!s1) continue;
        EXPECT_TRUE(same_formula(substitute(a, *s1), substitute(b, *s1)));
        EXPECT_TRUE(same_formula(substitute(a, *s2), substitute(b, *s2)));
        // idempotent
        EXPECT_TRUE(same_formula(substitute(substitute(a, *s1), *s1), substitute(a, *s1)));
    }
}
