#include "quartic/parse.hpp"

#include <cctype>

namespace quartic {

namespace {

struct Token {
    enum Kind { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma,
                LBracket, RBracket, End } kind;
    std::size_t pos;
    Int value;  // Number
    int var;    // Variable: 0,1,2
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = s_[i_];
        switch (c) {
            case '+': tok_.kind = Token::Plus; ++i_; return;
            case '-': tok_.kind = Token::Minus; ++i_; return;
            case '*': tok_.kind = Token::Star; ++i_; return;
            case '/': tok_.kind = Token::Slash; ++i_; return;
            case '^': tok_.kind = Token::Caret; ++i_; return;
            case '(': tok_.kind = Token::LParen; ++i_; return;
            case ')': tok_.kind = Token::RParen; ++i_; return;
            case ',': tok_.kind = Token::Comma; ++i_; return;
            case '[': tok_.kind = Token::LBracket; ++i_; return;
            case ']': tok_.kind = Token::RBracket; ++i_; return;
            case 'x': case 'y': case 'z':
                tok_.kind = Token::Variable;
                tok_.var = c == 'x' ? 0 : c == 'y' ? 1 : 2;
                ++i_;
                if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                    throw ParseError("digit after variable; write 2*x or x^2", i_);
                return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Number;
            tok_.value = Int(s_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lx_(s) {}

    TernaryForm parse_all() {
        TernaryForm f = expr();
        if (lx_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input", lx_.peek().pos);
        return f;
    }

private:
    TernaryForm expr() {
        bool neg = false;
        if (lx_.peek().kind == Token::Plus) lx_.take();
        else if (lx_.peek().kind == Token::Minus) { lx_.take(); neg = true; }
        TernaryForm acc = term();
        if (neg) acc = -acc;
        for (;;) {
            auto k = lx_.peek().kind;
            if (k == Token::Plus) {
                lx_.take();
                acc = acc + term();
            } else if (k == Token::Minus) {
                lx_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    // Implicit multiplication binds a variable or '(' directly after a factor.
    TernaryForm term() {
        TernaryForm acc = factor();
        for (;;) {
            auto k = lx_.peek().kind;
            if (k == Token::Star) {
                lx_.take();
                acc = acc * factor();
            } else if (k == Token::Slash) {
                Token slash = lx_.take();
                TernaryForm d = factor();
                if (d.degree() > 0)
                    throw ParseError("division by a non-constant", slash.pos);
                if (d.zero())
                    throw ParseError("division by zero", slash.pos);
                acc = acc * (Rat(1) / d.coeff({0, 0, 0}));
            } else if (k == Token::Variable || k == Token::LParen) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    TernaryForm factor() {
        TernaryForm base = primary();
        if (lx_.peek().kind == Token::Caret) {
            Token caret = lx_.take();
            if (lx_.peek().kind != Token::Number)
                throw ParseError("exponent must be a nonnegative integer", lx_.peek().pos);
            Token e = lx_.take();
            if (e.value > 256)
                throw ParseError("exponent too large", e.pos);
            long n = e.value.get_si();
            TernaryForm acc = TernaryForm::monomial({0, 0, 0}, Rat(1));
            for (long t = 0; t < n; ++t) acc = acc * base;
            return acc;
        }
        return base;
    }

    TernaryForm primary() {
        Token t = lx_.peek();
        switch (t.kind) {
            case Token::Number:
                lx_.take();
                return TernaryForm::monomial({0, 0, 0}, Rat(t.value));
            case Token::Variable: {
                lx_.take();
                Mono3 m{0, 0, 0};
                m[t.var] = 1;
                return TernaryForm::monomial(m, Rat(1));
            }
            case Token::LParen: {
                lx_.take();
                TernaryForm inner = expr();
                if (lx_.peek().kind != Token::RParen)
                    throw ParseError("expected ')'", lx_.peek().pos);
                lx_.take();
                return inner;
            }
            case Token::End:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("expected a number, variable, or '('", t.pos);
        }
    }

    Lexer lx_;
};

Rat signed_rational(Lexer& lx) {
    bool neg = false;
    if (lx.peek().kind == Token::Plus) lx.take();
    else if (lx.peek().kind == Token::Minus) { lx.take(); neg = true; }
    if (lx.peek().kind != Token::Number)
        throw ParseError("expected a number", lx.peek().pos);
    Int num = lx.take().value;
    Int den(1);
    if (lx.peek().kind == Token::Slash) {
        Token slash = lx.take();
        if (lx.peek().kind != Token::Number)
            throw ParseError("expected a denominator", lx.peek().pos);
        den = lx.take().value;
        if (den == 0) throw ParseError("zero denominator", slash.pos);
    }
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

TernaryForm parse_bracketed_slots(const std::string& text) {
    Lexer lx(text);
    if (lx.peek().kind != Token::LBracket)
        throw ParseError("expected '['", lx.peek().pos);
    lx.take();
    std::vector<Rat> slots;
    if (lx.peek().kind != Token::RBracket) {
        slots.push_back(signed_rational(lx));
        while (lx.peek().kind == Token::Comma) {
            lx.take();
            slots.push_back(signed_rational(lx));
        }
    }
    if (lx.peek().kind != Token::RBracket)
        throw ParseError("expected ',' or ']'", lx.peek().pos);
    Token close = lx.take();
    if (lx.peek().kind != Token::End)
        throw ParseError("unexpected trailing input", lx.peek().pos);
    if (slots.size() != 15)
        throw ParseError("expected 15 coefficients, got " + std::to_string(slots.size()),
                         close.pos);
    return quartic_from_coefficients(slots);
}

} // namespace

TernaryForm parse_ternary_polynomial(const std::string& text) {
    Parser p(text);
    return p.parse_all();
}

Rat parse_rational(const std::string& text) {
    Lexer lx(text);
    Rat r = signed_rational(lx);
    if (lx.peek().kind != Token::End)
        throw ParseError("unexpected trailing input", lx.peek().pos);
    return r;
}

const std::vector<Mono3>& quartic_monomial_order() {
    static const std::vector<Mono3> order = monomials3(4);
    return order;
}

TernaryForm quartic_from_coefficients(const std::vector<Rat>& slots) {
    const auto& order = quartic_monomial_order();
    if (slots.size() != order.size())
        throw std::domain_error("quartic_from_coefficients: 15 slots expected");
    TernaryForm f;
    for (std::size_t i = 0; i < order.size(); ++i) f.set(order[i], slots[i]);
    return f;
}

std::vector<Rat> quartic_coefficients(const TernaryForm& F) {
    if (!F.homogeneous(4))
        throw std::domain_error("quartic_coefficients: homogeneous quartic expected");
    std::vector<Rat> slots;
    for (const auto& m : quartic_monomial_order()) slots.push_back(F.coeff(m));
    return slots;
}

TernaryForm parse_quartic_input(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input", 0);
    TernaryForm f = text[first] == '['
                        ? parse_bracketed_slots(text)
                        : parse_ternary_polynomial(text);
    if (f.zero()) throw ParseError("zero polynomial", first);
    if (!f.homogeneous(4))
        throw ParseError("not a homogeneous quartic", first);
    return f;
}

} // namespace quartic
