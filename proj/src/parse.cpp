#include "follres/parse.hpp"

#include <cctype>
#include <set>

namespace follres {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t at;
};

const char* const kSyms[] = {"|>!", "|>", "|-", "-o", "<=", ":=", "(", ")", "[", "]",
                             ",",   ".",  "*",  "\\", "/",  "<"};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) { ++i; continue; }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        bool found = false;
        for (const char* sym : kSyms) {
            std::string t(sym);
            if (s.compare(i, t.size(), t) == 0) {
                out.push_back({Tok::Sym, t, i});
                i += t.size();
                found = true;
                break;
            }
        }
        if (!found) throw ParseError("unexpected character '" + std::string(1, s[i]) + "' at " + std::to_string(i));
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_end() const { return peek().kind == Tok::End; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + " at " + std::to_string(t.at) +
                         (t.kind == Tok::End ? " (end of input)" : " near '" + t.text + "'"));
    }

    void expect(const char* s) {
        if (!at_sym(s)) fail(std::string("expected '") + s + "'");
        next();
    }

    void expect_end() {
        if (!at_end()) fail("trailing input");
    }

    // ---- MILL1 formulas

    Formula top() {
        Formula a = unary();
        if (at_sym("*") || at_sym("-o")) {
            bool is_tensor = next().text == "*";
            Formula b = unary();
            if (at_sym("*") || at_sym("-o")) fail("binary operators need parentheses");
            return is_tensor ? tensor(a, b) : limp(a, b);
        }
        return a;
    }

    Formula unary() {
        const Token& t = peek();
        if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) return quant();
        return primary();
    }

    Formula quant() {
        Op q = next().text == "forall" ? Op::Forall : Op::Exists;
        std::vector<std::string> names;
        for (;;) {
            const Token& t = peek();
            if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
                if ((t.text == "forall") != (q == Op::Forall)) fail("mixed quantifier list");
                next();
                continue;
            }
            if (t.kind == Tok::Ident) {
                names.push_back(next().text);
                continue;
            }
            if (at_sym(",")) { next(); continue; }
            break;
        }
        if (names.empty()) fail("quantifier without variable");
        expect(".");
        std::vector<std::string> fresh;
        for (const auto& n : names) {
            std::string u = unique(n);
            scopes_.emplace_back(n, u);
            fresh.push_back(u);
        }
        // scope is one bracket group, atom or quantifier: forall x.[a] -o b
        Formula body = unary();
        scopes_.resize(scopes_.size() - names.size());
        return quantify(q, fresh, body);
    }

    Formula primary() {
        if (at_sym("(") || at_sym("[")) {
            std::string close = next().text == "(" ? ")" : "]";
            Formula f = top();
            expect(close.c_str());
            return f;
        }
        if (peek().kind != Tok::Ident) fail("expected formula");
        std::string pred = next().text;
        std::vector<Term> args;
        if (at_sym("(")) {
            next();
            if (!at_sym(")")) {
                for (;;) {
                    args.push_back(term());
                    if (at_sym(",")) { next(); continue; }
                    break;
                }
            }
            expect(")");
        }
        return atom(pred, args);
    }

    Term term() {
        Token t = next();
        if (t.kind == Tok::Number) {
            for (char c : t.text)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad position '" + t.text + "'");
            return Term::pos(std::stoi(t.text));
        }
        if (t.kind != Tok::Ident) {
            --pos_;
            fail("expected term");
        }
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
            if (it->first == t.text) return Term::var(it->second);
        if (std::isupper(static_cast<unsigned char>(t.text[0]))) return Term::meta(t.text);
        return Term::constant(t.text);
    }

    std::string unique(const std::string& n) {
        if (!bound_.count(n)) {
            bound_.insert(n);
            return n;
        }
        for (int k = 1;; ++k) {
            std::string c = n + "_" + std::to_string(k);
            if (!bound_.count(c)) {
                bound_.insert(c);
                return c;
            }
        }
    }

    // ---- categories

    Cat cat_top() {
        Cat a = cat_primary();
        if (at_sym("*") || at_sym("\\") || at_sym("/") || at_sym("|>") || at_sym("|>!")) {
            std::string op = next().text;
            Pattern p;
            if (op != "|>" && op != "|>!" && at_sym("[") && peek(1).kind == Tok::Ident &&
                peek(2).kind == Tok::Sym && peek(2).text == "]" && looks_like_pattern(peek(1).text)) {
                next();
                p = next().text;
                next();
                if (!validate_pattern(p)) throw ParseError("invalid pattern '" + p + "'");
            }
            Cat b = cat_primary();
            if (at_sym("*") || at_sym("\\") || at_sym("/") || at_sym("|>") || at_sym("|>!"))
                fail("binary operators need parentheses");
            if (op == "*") return cat_prod(a, b, p);
            if (op == "\\") return cat_under(a, b, p);
            if (op == "/") return cat_over(a, b, p);
            return cat_gap(a, b, op == "|>" ? GapVariant::Scoped : GapVariant::Naive);
        }
        return a;
    }

    Cat cat_primary() {
        if (at_sym("(") || at_sym("[")) {
            std::string close = next().text == "(" ? ")" : "]";
            Cat c = cat_top();
            expect(close.c_str());
            return c;
        }
        if (peek().kind != Tok::Ident) fail("expected category");
        return cat_atom(next().text);
    }

    static bool looks_like_pattern(const std::string& s) {
        for (char c : s)
            if (c != 'a' && c != 'b' && c != '1') return false;
        return !s.empty();
    }

    // ---- order facts

    std::vector<OrderFact> facts() {
        std::vector<OrderFact> out;
        if (at_end()) return out;
        for (;;) {
            Term a = fact_term();
            bool strict;
            if (at_sym("<")) strict = true;
            else if (at_sym("<=")) strict = false;
            else fail("expected '<' or '<='");
            next();
            Term b = fact_term();
            out.push_back({a, b, strict});
            if (at_sym(",")) { next(); continue; }
            break;
        }
        expect_end();
        return out;
    }

    Term fact_term() {
        Token t = next();
        if (t.kind == Tok::Number) return Term::pos(std::stoi(t.text));
        if (t.kind == Tok::Ident) return Term::var(t.text);
        --pos_;
        fail("expected term");
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::pair<std::string, std::string>> scopes_;
    std::set<std::string> bound_;
};

void kinds_of(const Formula& f, bool positive, std::map<std::string, TermKind>& out) {
    switch (f->op) {
    case Op::Atom: return;
    case Op::Tensor:
        kinds_of(f->left, positive, out);
        kinds_of(f->right, positive, out);
        return;
    case Op::Limp:
        kinds_of(f->left, !positive, out);
        kinds_of(f->right, positive, out);
        return;
    case Op::Forall:
        out[f->var] = positive ? TermKind::Eigen : TermKind::Meta;
        kinds_of(f->left, positive, out);
        return;
    case Op::Exists:
        out[f->var] = positive ? TermKind::Meta : TermKind::Eigen;
        kinds_of(f->left, positive, out);
        return;
    }
}

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser p(text);
    Formula f = p.top();
    p.expect_end();
    return f;
}

Sequent parse_sequent(const std::string& text) {
    Parser p(text);
    Sequent s;
    if (!p.at_sym("|-")) {
        for (;;) {
            s.antecedent.push_back(p.top());
            if (p.at_sym(",")) { p.next(); continue; }
            break;
        }
    }
    p.expect("|-");
    s.succedent = p.top();
    p.expect_end();
    return s;
}

Cat parse_category(const std::string& text) {
    Parser p(text);
    Cat c = p.cat_top();
    p.expect_end();
    try {
        cat_dim(c);  // rejects connectives whose operand dimensions do not fit
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return c;
}

std::vector<OrderFact> parse_order_facts(const std::string& text) {
    Parser p(text);
    return p.facts();
}

std::map<std::string, TermKind> binder_kinds(const Sequent& s) {
    std::map<std::string, TermKind> out;
    for (const auto& f : s.antecedent) kinds_of(f, false, out);
    kinds_of(s.succedent, true, out);
    return out;
}

Term resolve_term(const Term& t, const std::map<std::string, TermKind>& kinds) {
    if (t.kind != TermKind::Var) return t;
    auto it = kinds.find(t.name);
    if (it != kinds.end()) return it->second == TermKind::Meta ? Term::meta(t.name) : Term::eigen(t.name);
    if (std::isupper(static_cast<unsigned char>(t.name[0]))) return Term::meta(t.name);
    return Term::constant(t.name);
}

std::vector<OrderFact> resolve_terms(const std::vector<OrderFact>& facts,
                                     const std::map<std::string, TermKind>& kinds) {
    std::vector<OrderFact> out;
    for (const auto& f : facts) out.push_back({resolve_term(f.lo, kinds), resolve_term(f.hi, kinds), f.strict});
    return out;
}

}  // namespace follres
