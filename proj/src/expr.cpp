#include "k3ff/expr.hpp"

#include <cctype>

namespace k3ff {

namespace {

class Parser {
public:
    Parser(const std::string& text, std::int64_t disc) : s_(text), disc_(disc) {}

    KT parse() {
        KT v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("expression parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
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

    KT expr() {
        KT v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    KT term() {
        KT v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/')) {
                KT d = factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else
                return v;
        }
    }

    KT factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        KT base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            KT p(1);
            KT b = base;
            for (long i = 0; i < e; ++i) p = p * b;
            if (neg) {
                if (p.is_zero()) fail("zero to a negative power");
                p = KT(1) / p;
            }
            return p;
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    KT atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            KT v = expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(s_.substr(start, pos_ - start));
            return KT(TPoly(KS(SPoly(Scalar(z)))));
        }
        if (c == 't') {
            ++pos_;
            return var_t();
        }
        if (c == 's') {
            ++pos_;
            return kt(var_s());
        }
        if (c == 'r') {
            ++pos_;
            if (disc_ == 1) fail("r used but the catalog field is plain Q");
            return KT(TPoly(KS(SPoly(Scalar::sqrt_gen(disc_)))));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::int64_t disc_;
    size_t pos_ = 0;
};

}  // namespace

KT parse_expr(const std::string& text, std::int64_t disc) { return Parser(text, disc).parse(); }

}  // namespace k3ff
