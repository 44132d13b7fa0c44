#pragma once

// Rational expressions over named parameters, for parametric algebra templates.
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' unary)?        exponent must evaluate to an integer
//   atom   := integer | identifier | '(' expr ')'

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace homdef {

using ParameterMap = std::map<std::string, Rational, std::less<>>;

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const ParameterMap& params) : s_(text), params_(params) {}

    Rational parse() {
        Rational v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression '" + std::string(s_) + "' at position " + std::to_string(pos_ + 1) + ": " + what);
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

    Rational expr() {
        Rational v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Rational term() {
        Rational v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                Rational d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }
    Rational unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Rational power() {
        Rational b = atom();
        if (!eat('^')) return b;
        Rational e = unary();
        if (!e.is_integer()) fail("non-integer exponent");
        if (b.is_zero() && e.sign() < 0) fail("zero to a negative power");
        return pow(b, e.numerator().get_si());
    }
    Rational atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Rational v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto it = params_.find(name);
            if (it == params_.end()) throw UnboundParameter("parameter '" + name + "' is not bound");
            return it->second;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const ParameterMap& params_;
    std::size_t pos_ = 0;
};

inline Rational evaluate_expression(std::string_view text, const ParameterMap& params = {}) {
    return ExpressionParser(text, params).parse();
}

/// "a=1,b=0,c=1/2" -> map. Values may themselves be expressions without parameters.
inline ParameterMap parse_parameter_list(std::string_view text) {
    ParameterMap out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        if (!item.empty()) {
            auto eq = item.find('=');
            if (eq == std::string_view::npos) throw ParseError("parameter '" + std::string(item) + "' lacks '='");
            std::string key(item.substr(0, eq));
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front()))) key.erase(0, 1);
            if (key.empty()) throw ParseError("empty parameter name");
            out[key] = evaluate_expression(item.substr(eq + 1));
        }
        start = end + 1;
    }
    return out;
}

} // namespace homdef
