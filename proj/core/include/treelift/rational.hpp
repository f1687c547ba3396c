#ifndef TREELIFT_RATIONAL_HPP
#define TREELIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "treelift/errors.hpp"

namespace treelift {

/// Exact rational scalar backed by GMP. Always in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const;

    /// Canonical form: "p" when integral, else "p/q".
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

inline Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    if (is_zero() && neg) throw DomainError("0 raised to a negative power");
    unsigned long k = static_cast<unsigned long>(neg ? -e : e);
    mpq_class out;
    // lowest terms and positive denominator survive powering
    mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), k);
    if (neg) out = 1 / out;
    return Rational(out);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

} // namespace treelift

#endif
