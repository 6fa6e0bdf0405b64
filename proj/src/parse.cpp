#include <cctype>

#include "nt/cli.hpp"
#include "nt/errors.hpp"

namespace nt {

namespace {

// Recursive descent over
//   list  := '[' expr (',' expr)* ']'
//   expr  := term (('+'|'-') term)*
//   term  := unary ('*' unary)*
//   unary := ('+'|'-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    std::vector<BiPoly> list() {
        expect('[');
        std::vector<BiPoly> out;
        skip();
        if (peek() == ']') {
            ++pos_;
            finish();
            return out;
        }
        out.push_back(expr());
        while (accept(',')) out.push_back(expr());
        expect(']');
        finish();
        return out;
    }

    BiPoly single() {
        BiPoly p = expr();
        finish();
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void finish() {
        if (peek() != '\0') fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) {
        std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
        throw ParseError(pos_, what + ", found " + found);
    }

    BigInt integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    BiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = atom();
        if (!accept('^')) return base;
        BigInt e = integer();
        if (e > 4096) fail("exponent too large");
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    BiPoly atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            BigInt den = 1;
            if (accept('/')) {
                std::size_t at = pos_;
                den = integer();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            return BiPoly(make_rational(num, den));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BiPoly::x() : BiPoly::y();
        }
        if (accept('(')) {
            BiPoly inner = expr();
            expect(')');
            return inner;
        }
        fail("expected number, variable or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).single(); }

Ideal parse_ideal(std::string_view text) {
    Ideal ideal(Parser(text).list());
    ideal.require_proper();
    return ideal;
}

}  // namespace nt
