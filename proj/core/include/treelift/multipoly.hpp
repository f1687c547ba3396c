#ifndef TREELIFT_MULTIPOLY_HPP
#define TREELIFT_MULTIPOLY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treelift/rational.hpp"

namespace treelift {

/// Sparse multivariate polynomial over Rational.
///
/// This is the scalar ring shared by all graph computations: plain rational
/// weights are constant polynomials, symbolic edge and vertex weights are
/// variables. Terms map an exponent vector (one slot per registered
/// variable, registry sorted by name) to a nonzero coefficient. Keys are
/// kept in lexicographic-descending order so begin() is the leading term
/// of the lex monomial order, which is what exact division peels.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

    MultiPoly() = default; // zero
    MultiPoly(int n) : MultiPoly(Rational(n)) {}
    MultiPoly(const Rational& c);

    static MultiPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    bool is_constant() const { return vars_.empty(); }
    /// Value of a constant polynomial; DomainError if variables remain.
    Rational constant_value() const;

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Nonnegative exponent for general polynomials; constants also accept
    /// negative exponents (rational powers).
    MultiPoly pow(long e) const;

    /// Exact quotient q with q*den == *this. Throws InexactDivision when a
    /// remainder would be left, and DomainError on a zero divisor.
    MultiPoly divide_exact(const MultiPoly& den) const;

    /// Substitutes rationals for all variables. Every variable appearing in
    /// the polynomial must be assigned; extra assignments are ignored.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(const std::string& var, std::uint32_t k) const;

    /// Canonical rendering, terms in lex-descending order, e.g.
    /// "x_0_1^2*y_0 - 2*x_1_0 + 1/3".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    std::vector<std::string> vars_; // sorted; every entry used by some term
    TermMap terms_;                 // no zero coefficients

    void normalize();
    // Remaps this polynomial's terms onto a superset registry.
    TermMap remapped(const std::vector<std::string>& target) const;
    static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b);
};

using Weight = MultiPoly;

} // namespace treelift

#endif
