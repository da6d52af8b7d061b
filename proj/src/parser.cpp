#include "logres/parser.hpp"

#include <cctype>

namespace logres {

namespace {

struct Token {
    enum Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        size_t start = pos_;
        if (pos_ >= text_.size())
            return {Token::End, "", start};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Integer, text_.substr(start, pos_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, text_.substr(start, pos_ - start), start};
        }
        ++pos_;
        switch (c) {
        case '+': return {Token::Plus, "+", start};
        case '-': return {Token::Minus, "-", start};
        case '*': return {Token::Star, "*", start};
        case '/': return {Token::Slash, "/", start};
        case '^': return {Token::Caret, "^", start};
        case '(': return {Token::LParen, "(", start};
        case ')': return {Token::RParen, ")", start};
        default:
            raise(ErrorCode::Parse,
                  "unexpected character '" + std::string(1, c) + "' at position " +
                      std::to_string(start));
        }
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring)
        : lexer_(text), ring_(std::move(ring)), cur_(lexer_.next()) {}

    Polynomial parse() {
        Polynomial p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind kind, const std::string& what) {
        if (cur_.kind != kind)
            raise(ErrorCode::Parse, "expected " + what + " at position " + std::to_string(cur_.pos));
    }

    Polynomial expr() {
        bool negate = false;
        if (cur_.kind == Token::Plus) {
            advance();
        } else if (cur_.kind == Token::Minus) {
            negate = true;
            advance();
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
            bool divide = cur_.kind == Token::Slash;
            size_t at = cur_.pos;
            advance();
            Polynomial rhs = power();
            if (divide) {
                if (!rhs.is_constant())
                    raise(ErrorCode::Parse,
                          "division by a non-constant at position " + std::to_string(at));
                FieldElement c = rhs.constant_coeff();
                if (c.is_zero())
                    raise(ErrorCode::Parse, "division by zero at position " + std::to_string(at));
                acc = acc.scaled(c.inverse());
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (cur_.kind != Token::Caret)
            return base;
        size_t at = cur_.pos;
        advance();
        expect(Token::Integer, "integer exponent");
        long e = std::stol(cur_.text);
        advance();
        if (e < 1)
            raise(ErrorCode::Parse, "exponent must be positive at position " + std::to_string(at));
        Polynomial acc = base;
        for (long i = 1; i < e; ++i)
            acc = acc * base;
        return acc;
    }

    Polynomial atom() {
        switch (cur_.kind) {
        case Token::Integer: {
            FieldElement c = FieldElement::from_rational(ring_->kind(), Rational(BigInt(cur_.text)));
            advance();
            return Polynomial::constant(ring_, c);
        }
        case Token::Ident: {
            std::string name = cur_.text;
            size_t at = cur_.pos;
            advance();
            for (int i = 0; i < ring_->nvars(); ++i)
                if (ring_->name(i) == name)
                    return Polynomial::variable(ring_, i);
            if (ring_->kind() == FieldKind::Qt && name == ring_->param_name())
                return Polynomial::constant(ring_, FieldElement::parameter());
            raise(ErrorCode::Parse,
                  "unknown variable '" + name + "' at position " + std::to_string(at));
        }
        case Token::LParen: {
            advance();
            Polynomial p = expr();
            expect(Token::RParen, "')'");
            advance();
            return p;
        }
        default:
            raise(ErrorCode::Parse,
                  "expected a value at position " + std::to_string(cur_.pos));
        }
    }

    Lexer lexer_;
    RingPtr ring_;
    Token cur_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

} // namespace logres
