#pragma once
// Small recursive-descent parser shared by the scalar and tensor parsers.
// Ops supplies: number(Rational), name(string), add, sub, mul, div, neg,
// pow(V, long).

#include <cctype>
#include <string>

#include "hopfcy/scalars.hpp"

namespace hopfcy::detail {

template <class V, class Ops>
class ExprParser {
public:
    ExprParser(const std::string& text, Ops& ops) : s_(text), ops_(ops) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ConfigError("expression \"" + s_ + "\" at column " + std::to_string(pos_ + 1) +
                          ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        V acc = term();
        if (neg) acc = ops_.neg(acc);
        for (;;) {
            if (eat('+')) acc = ops_.add(acc, term());
            else if (eat('-')) acc = ops_.sub(acc, term());
            else return acc;
        }
    }

    V term() {
        V acc = factor();
        for (;;) {
            if (eat('*')) acc = ops_.mul(acc, factor());
            else if (eat('/')) acc = ops_.div(acc, factor());
            else return acc;
        }
    }

    V factor() {
        if (eat('-')) return ops_.neg(factor());
        V base = atom();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            else eat('+');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("integer exponent expected");
            long e = std::stol(s_.substr(start, pos_ - start));
            base = ops_.pow(base, neg ? -e : e);
        }
        return base;
    }

    V atom() {
        skip();
        if (pos_ >= s_.size()) fail("operand expected");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.number(Rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string n = s_.substr(start, pos_ - start);
            try {
                return ops_.name(n);
            } catch (const ConfigError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    Ops& ops_;
};

}  // namespace hopfcy::detail
