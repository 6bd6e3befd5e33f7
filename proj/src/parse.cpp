#include "bezgw/parse.hpp"

#include <cctype>
#include <vector>

namespace bezgw {

namespace {

enum class Tok { Num, Var, Gen, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    mpq_class value;
    size_t column;  // 1-based
};

std::vector<Token> lex(const std::string& text, const std::string& var) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        size_t col = i + 1;
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            // tightly written rational literal: digits '/' digits, no spaces;
            // suppressed right after the fraction bar so "x/2/3" stays an error
            bool after_slash = !out.empty() && out.back().kind == Tok::Slash;
            if (!after_slash && j < text.size() && text[j] == '/' && j + 1 < text.size() &&
                std::isdigit((unsigned char)text[j + 1])) {
                size_t k = j + 1;
                while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
                mpq_class v(text.substr(i, k - i));
                v.canonicalize();
                out.push_back({Tok::Num, v, col});
                i = k;
            } else {
                out.push_back({Tok::Num, mpq_class(text.substr(i, j - i)), col});
                i = j;
            }
            continue;
        }
        if (std::isalpha((unsigned char)c)) {
            size_t j = i;
            while (j < text.size() && std::isalnum((unsigned char)text[j])) ++j;
            std::string name = text.substr(i, j - i);
            if (name == var)
                out.push_back({Tok::Var, 0, col});
            else if (name == "t")
                out.push_back({Tok::Gen, 0, col});
            else
                throw ParseError("unknown symbol '" + name + "'", col);
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", col);
        }
        out.push_back({k, 0, col});
        ++i;
    }
    out.push_back({Tok::End, 0, text.size() + 1});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, FieldPtr field, std::string var)
        : toks_(std::move(toks)), field_(std::move(field)), var_(std::move(var)) {}

    // expr ['/' expr]
    std::pair<Polynomial, Polynomial> rational() {
        Polynomial num = expr();
        Polynomial den = Polynomial::constant(field_->one());
        if (peek().kind == Tok::Slash) {
            next();
            den = expr();
        }
        expect(Tok::End, "unexpected trailing input");
        return {num, den};
    }

    Polynomial single() {
        Polynomial p = expr();
        if (peek().kind == Tok::Slash)
            throw ParseError("only one top-level /", peek().column);
        expect(Tok::End, "unexpected trailing input");
        return p;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    void expect(Tok k, const std::string& msg) {
        if (peek().kind != k) throw ParseError(msg, peek().column);
        next();
    }

    Polynomial expr() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        } else if (peek().kind == Tok::Plus) {
            next();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Tok::Star) {
            next();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& e = peek();
            if (e.kind != Tok::Num || e.value.get_den() != 1 || e.value < 0)
                throw ParseError("exponent must be a nonnegative integer", e.column);
            next();
            unsigned long n = mpz_class(e.value.get_num()).get_ui();
            Polynomial acc = Polynomial::constant(field_->one());
            for (unsigned long i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Num:
                next();
                return Polynomial::constant(field_->element(t.value));
            case Tok::Var:
                next();
                return Polynomial::x(field_);
            case Tok::Gen: {
                if (field_->kind() != Field::Kind::Extension)
                    throw ParseError("'t' requires an extension field", t.column);
                next();
                return Polynomial::constant(field_->element(Rep{mpq_class(0), mpq_class(1)}));
            }
            case Tok::LParen: {
                next();
                Polynomial p = expr();
                if (peek().kind == Tok::Slash)
                    throw ParseError("only one top-level /", peek().column);
                expect(Tok::RParen, "expected ')'");
                return p;
            }
            case Tok::Minus:
                // '^' binds tighter than unary minus; handled in expr(), and a
                // nested minus starts a sub-expression
                next();
                return -primary();
            default:
                throw ParseError("expected a value", t.column);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    FieldPtr field_;
    std::string var_;
};

}  // namespace

std::pair<Polynomial, Polynomial> parse_rational_function(const std::string& text,
                                                          const FieldPtr& field,
                                                          const std::string& var) {
    return Parser(lex(text, var), field, var).rational();
}

Polynomial parse_polynomial(const std::string& text, const FieldPtr& field,
                            const std::string& var) {
    return Parser(lex(text, var), field, var).single();
}

FieldElement parse_element(const std::string& text, const FieldPtr& field) {
    // the generator 't' is handled as a constant; any 'x' is rejected below
    Polynomial p = parse_polynomial(text, field, "x");
    if (p.degree() > 0) throw Error("not a field element: " + text);
    return p.is_zero() ? field->zero() : p.coeff(0);
}

}  // namespace bezgw
