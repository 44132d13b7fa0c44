#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace homdef {

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every operation leaves the
/// value canonical, so structural equality is numeric equality and the
/// string form is unique ("p/q", or "p" when q == 1).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                       // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}     // NOLINT(implicit)
    Rational(long num, long den) {
        if (den == 0) throw InvalidArgument("zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Whitespace around the token is ignored.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto first = s.find_first_not_of(" \t");
        auto last = s.find_last_not_of(" \t");
        if (first == std::string::npos) throw ParseError("empty rational");
        s = s.substr(first, last - first + 1);
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("malformed rational '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        Rational r;
        r.q_ = mpq_class(n, d);
        r.q_.canonicalize();
        return r;
    }

    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgument("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Integer power; negative exponents invert.
    friend Rational pow(const Rational& base, long e) {
        Rational result(1);
        Rational b = e < 0 ? Rational(1) / base : base;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        while (k) {
            if (k & 1u) result *= b;
            b *= b;
            k >>= 1u;
        }
        return result;
    }

private:
    mpq_class q_;
};

} // namespace homdef
