#ifndef TREELIFT_UNIPOLY_HPP
#define TREELIFT_UNIPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "treelift/multipoly.hpp"
#include "treelift/rational.hpp"

namespace treelift {

/// Dense univariate polynomial over Rational; coefficient i belongs to the
/// i-th power of the (anonymous) series variable. Used for det(I - sP)
/// style characteristic polynomials and for R(s).
class UniPoly {
public:
    UniPoly() = default; // zero
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(const Rational& c) : c_{c} { trim(); }

    static UniPoly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned long e) const;

    /// Exact quotient; throws InexactDivision if a remainder is left.
    UniPoly divide_exact(const UniPoly& den) const;

    UniPoly derivative() const;
    Rational evaluate(const Rational& x) const;

    static UniPoly from_multipoly(const MultiPoly& p, const std::string& var);
    MultiPoly to_multipoly(const std::string& var) const;

    std::string str(const std::string& var = "s") const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    std::vector<Rational> c_;
    void trim();
};

/// Exact polynomial through the points (xs[i], ys[i]) (Lagrange form).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace treelift

#endif
