#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "follres/parse.hpp"
#include "follres/translate.hpp"
#include "fixtures.hpp"

using namespace follres;

namespace {

DecoratedFormula tr(const std::string& cat, std::vector<Term> span) {
    NameSupply ns;
    return translate(parse_category(cat), span, ns);
}

std::vector<Term> P(std::initializer_list<int> l) {
    std::vector<Term> out;
    for (int v : l) out.push_back(Term::pos(v));
    return out;
}

std::string rename(const Term& t) {
    static const std::map<std::string, std::string> m(fixtures::kDidRenaming.begin(), fixtures::kDidRenaming.end());
    auto it = m.find(t.name);
    return (t.is_pos() || it == m.end()) ? t.str() : it->second;
}

// every binder binds exactly two argument occurrences
void count_binders(const Formula& f, std::map<std::string, int>& uses, std::set<std::string>& binders) {
    switch (f->op) {
    case Op::Atom:
        for (const auto& t : f->args)
            if (t.kind == TermKind::Var) ++uses[t.name];
        return;
    case Op::Forall:
    case Op::Exists: binders.insert(f->var); count_binders(f->left, uses, binders); return;
    default: count_binders(f->left, uses, binders); count_binders(f->right, uses, binders);
    }
}

}  // namespace

TEST(Translate, Atom) {
    EXPECT_TRUE(same_formula(tr("np", P({0, 1})).mill, parse_formula("np(0,1)")));
}

TEST(Translate, IntransitiveVerb) {
    EXPECT_TRUE(alpha_equal(tr("np\\s", P({1, 2})).mill, parse_formula("forall A.[np(A,1) -o s(A,2)]")));
}

TEST(Translate, Before) {
    EXPECT_TRUE(alpha_equal(tr("(vp\\vp)/s", P({2, 3})).mill, parse_formula(fixtures::kDidFormulas[2])));
}

TEST(Translate, Did) {
    auto d = tr("((vp/[aba]vp)/vp)\\[a1ab](vp/[aba]vp)", P({4, 5}));
    EXPECT_TRUE(alpha_equal(d.mill, parse_formula(fixtures::kDidFormulas[4]))) << to_string(d.mill);
}

TEST(Translate, HoleNeedsOrder) {
    // a1b product: both segments with the hole between them
    auto d = tr("a *[a1b] b", P({0, 1, 2, 3}));
    EXPECT_TRUE(alpha_equal(d.mill, parse_formula("a(0,1) * b(2,3)")));
}

TEST(Translate, ArityMismatch) {
    EXPECT_THROW(tr("np\\s", P({1, 2, 3, 4})), TranslateError);
    EXPECT_THROW(parse_category("np \\[abab] s"), ParseError);
}

TEST(Translate, NodeTuples) {
    auto d = tr("np\\s", P({1, 2}));
    const auto* t = d.tuple_of(d.mill);
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, P({1, 2}));
    for (const auto& [f, tuple] : d.node_tuples) EXPECT_EQ(tuple.size() % 2, 0u);
}

TEST(Translate, ExactlyOnceQuantification) {
    std::vector<Cat> cats = {
        cat_prod(cat_atom("a", 2), cat_atom("b", 1), "aba"),
        cat_under(cat_atom("a", 2), cat_atom("c", 2), "a1ab"),
        cat_over(cat_atom("c", 1), cat_atom("b", 2), "abab"),
        cat_prod(cat_atom("a", 3), cat_atom("b", 1), "a1ba1a"),
        parse_category("((vp/[aba]vp)/vp)\\[a1ab](vp/[aba]vp)"),
        parse_category("(vp\\vp)/s"),
        parse_category("((np\\s)/np)/np"),
    };
    for (const Cat& cat : cats) {
        std::string c = to_string(cat);
        std::vector<Term> span;
        for (int i = 0; i < 2 * cat_dim(cat); ++i) span.push_back(Term::pos(i));
        NameSupply ns;
        auto d = translate(cat, span, ns);
        std::map<std::string, int> uses;
        std::set<std::string> binders;
        count_binders(d.mill, uses, binders);
        for (const auto& b : binders) EXPECT_EQ(uses[b], 2) << c << " " << b;
    }
}

TEST(Gap, NaiveVariantsCollapse) {
    NameSupply ns;
    auto a = translate_gap(parse_category("s |>! (np\\s)"), Term::pos(0), Term::pos(1), ns);
    auto b = translate_gap(parse_category("s |>! (s/np)"), Term::pos(0), Term::pos(1), ns);
    ASSERT_EQ(a.mill->op, Op::Limp);
    EXPECT_TRUE(alpha_equal(a.mill->left, parse_formula("forall x1 forall x0.[np(x0,x1) -o s(x0,x1)]")));
    EXPECT_TRUE(alpha_equal(a.mill, b.mill));
}

TEST(Gap, ScopedVariantsDiffer) {
    NameSupply ns;
    auto a = translate_gap(parse_category("s |> (np\\s)"), Term::pos(0), Term::pos(1), ns);
    auto b = translate_gap(parse_category("s |> (s/np)"), Term::pos(0), Term::pos(1), ns);
    EXPECT_EQ(a.mill->op, Op::Exists);
    EXPECT_FALSE(alpha_equal(a.mill, b.mill));
    EXPECT_THROW(translate_gap(parse_category("np\\s"), Term::pos(0), Term::pos(1), ns), TranslateError);
}

TEST(Lexicon, Parse) {
    std::istringstream in("# comment\nJohn := np\n\nleft := np\\s   # verb\nJohn := s/s\n");
    auto lex = parse_lexicon(in);
    ASSERT_EQ(lex.size(), 3u);
    EXPECT_EQ(lex[1].word, "left");
    std::istringstream bad("John np\n");
    EXPECT_THROW(parse_lexicon(bad), ParseError);
    std::istringstream bad2("John := (np\n");
    EXPECT_THROW(parse_lexicon(bad2), ParseError);
}

TEST(Sentence, AmbiguityMultipliesInstances) {
    std::istringstream in("John := np\nJohn := s/s\nleft := np\\s\n");
    auto lex = parse_lexicon(in);
    EXPECT_EQ(instantiate_sentence(lex, {"John", "left"}, "s").size(), 2u);
    EXPECT_THROW(instantiate_sentence(lex, {"Bill"}, "s"), TranslateError);
}

TEST(Sentence, Empty) {
    auto lex = load_lexicon(fixtures::kDemoLexicon);
    auto inst = instantiate_sentence(lex, {}, "s");
    ASSERT_EQ(inst.size(), 1u);
    EXPECT_TRUE(inst[0].sequent.antecedent.empty());
    EXPECT_TRUE(same_formula(inst[0].sequent.succedent, parse_formula("s(0,0)")));
    auto c = seed_constraints(inst[0].sequent, inst[0].facts);
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->order.hasse().empty());
}

TEST(Sentence, GaveStore) {
    auto lex = load_lexicon(fixtures::kDemoLexicon);
    auto inst = instantiate_sentence(lex, split_words("John gave Mary flowers"), "s");
    ASSERT_EQ(inst.size(), 1u);
    const Sequent& seq = inst[0].sequent;
    EXPECT_TRUE(same_formula(seq.antecedent[0], parse_formula("np(0,1)")));
    auto c = seed_constraints(seq, inst[0].facts);
    ASSERT_TRUE(c);
    // gave = forall Y.[np(2,Y) -o forall Z.[np(Y,Z) -o forall X.[np(X,1) -o s(X,Z)]]]
    Formula gave = seq.antecedent[1];
    EXPECT_TRUE(alpha_equal(gave, parse_formula("forall Y.[np(2,Y) -o forall Z.[np(Y,Z) -o forall X.[np(X,1) -o s(X,Z)]]]")));
    auto kinds = binder_kinds(seq);
    Term Y = resolve_term(Term::var(gave->var), kinds);
    Term Z = resolve_term(Term::var(gave->left->right->var), kinds);
    Term X = resolve_term(Term::var(gave->left->right->left->right->var), kinds);
    EXPECT_TRUE(Y.is_meta());
    EXPECT_EQ(c->order.entails(X, Term::pos(1)), Relation::Leq);
    EXPECT_EQ(c->order.entails(Term::pos(1), Term::pos(2)), Relation::Lt);
    EXPECT_EQ(c->order.entails(Term::pos(2), Y), Relation::Leq);
    EXPECT_EQ(c->order.entails(Y, Z), Relation::Leq);
    EXPECT_EQ(c->order.entails(X, Z), Relation::Lt);
    Constraints bad = *c;
    EXPECT_FALSE(bad.unify_terms(Y, Term::pos(0)));
}

TEST(Sentence, DidStoreMatchesWorkedOrder) {
    auto lex = load_lexicon(fixtures::kDemoLexicon);
    auto inst = instantiate_sentence(lex, split_words("John left before Mary did"), "s");
    ASSERT_EQ(inst.size(), 1u);
    const Sequent& seq = inst[0].sequent;
    ASSERT_EQ(seq.antecedent.size(), fixtures::kDidFormulas.size());
    for (std::size_t i = 0; i < seq.antecedent.size(); ++i)
        EXPECT_TRUE(alpha_equal(seq.antecedent[i], parse_formula(fixtures::kDidFormulas[i]))) << i;
    auto c = seed_constraints(seq, inst[0].facts);
    ASSERT_TRUE(c);
    std::set<std::pair<std::string, std::string>> got, want(fixtures::kDidHasse.begin(), fixtures::kDidHasse.end());
    for (const auto& [a, b] : c->order.hasse()) got.insert({rename(a), rename(b)});
    EXPECT_EQ(got, want);
}
