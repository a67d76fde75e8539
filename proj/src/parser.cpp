#include "mls/parser.hpp"

#include <cctype>

namespace mls {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Chart& chart) : s_(text), chart_(chart) {}

    RationalExpr run() {
        RationalExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    const Chart& chart_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        input_error("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalExpr expr() {
        RationalExpr e = term();
        while (true) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }

    RationalExpr term() {
        RationalExpr e = factor();
        while (true) {
            if (eat('*')) {
                e = e * factor();
            } else if (eat('/')) {
                RationalExpr d = factor();
                if (d.is_zero()) math_error("division by the zero polynomial");
                e = e / d;
            } else {
                return e;
            }
        }
    }

    RationalExpr factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return power();
    }

    RationalExpr power() {
        RationalExpr base = atom();
        if (eat('^')) {
            int k = exponent();
            if (k < 0 && base.is_zero()) math_error("negative power of zero");
            return base.pow(k);
        }
        return base;
    }

    int exponent() {
        skip_ws();
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("expected integer exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        if (paren && !eat(')')) fail("expected ')' after exponent");
        return neg ? (int)-v : (int)v;
    }

    RationalExpr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) digits += s_[pos_++];
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not supported; use rationals like 1/2");
            return RationalExpr(chart_.nsyms(), Rat(digits));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = chart_.index_of(name);
            if (idx < 0) input_error("unknown identifier '" + name + "' at position " +
                                     std::to_string(pos_ - name.size()));
            return RationalExpr::variable(chart_.nsyms(), idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RationalExpr parse_expr(const std::string& text, const Chart& chart) {
    return Parser(text, chart).run();
}

} // namespace mls
