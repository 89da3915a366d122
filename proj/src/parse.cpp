#include "plc/parse.hpp"

#include <cctype>

namespace plc {

namespace {

class Parser {
public:
    Parser(const std::string& s, Field f, int nvars) : s_(s), f_(f), nvars_(nvars) {}

    TriPoly run() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError("empty input", pos_);
        TriPoly r = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TriPoly expr() {
        TriPoly r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    TriPoly term() {
        TriPoly r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                TriPoly d = unary();
                if (d.degree() > 0) throw SyntaxError("division by a non-constant", at);
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                r = r * d.terms().begin()->second.inv();
            } else {
                return r;
            }
        }
    }

    TriPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    TriPoly power() {
        TriPoly base = atom();
        if (accept('^')) {
            skip();
            const std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw SyntaxError("expected exponent", at);
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
            if (end - pos_ > 4) throw SyntaxError("exponent too large", at);
            const int e = std::stoi(s_.substr(pos_, end - pos_));
            pos_ = end;
            return base.pow(e);
        }
        return base;
    }

    TriPoly atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TriPoly r = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
            const mpz_class v(s_.substr(pos_, end - pos_));
            pos_ = end;
            return TriPoly::constant(f_->from_mpz(v));
        }
        if (c == 'a') {
            ++pos_;
            if (f_->degree() == 1) throw SyntaxError("field has no generator 'a'", pos_ - 1);
            return TriPoly::constant(f_->gen());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            int k = -1;
            if (l == 'x') k = 0;
            if (l == 'y') k = 1;
            if (l == 'z') k = 2;
            if (k < 0 || k >= nvars_ || (nvars_ == 2 && c != l))
                throw WrongVariables(std::string("unexpected variable '") + c + "' at position " + std::to_string(pos_));
            ++pos_;
            return TriPoly::var(f_, k);
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& s_;
    Field f_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly parse_poly(const std::string& src, Field f) { return Parser(src, f, 2).run().to_bipoly(); }

TriPoly parse_projective(const std::string& src, Field f) { return Parser(src, f, 3).run(); }

Elem parse_element(const std::string& src, Field f) {
    TriPoly p = Parser(src, f, 0).run();
    return p.is_zero() ? f->zero() : p.terms().begin()->second;
}

} // namespace plc
