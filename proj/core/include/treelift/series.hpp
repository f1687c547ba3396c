#ifndef TREELIFT_SERIES_HPP
#define TREELIFT_SERIES_HPP

#include <string>
#include <vector>

#include "treelift/rational.hpp"
#include "treelift/unipoly.hpp"

namespace treelift {

/// Univariate formal power series over Rational, truncated at a fixed
/// order N (N+1 stored coefficients). All arithmetic truncates to N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    static TruncatedSeries from_unipoly(const UniPoly& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(std::size_t k) const { return c_.at(k); }
    void set_coeff(std::size_t k, const Rational& v) { c_.at(k) = v; }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;
    /// exp; requires constant term 0.
    TruncatedSeries exp() const;
    /// log; requires constant term 1.
    TruncatedSeries log() const;
    /// Formal derivative, truncated at order N-1.
    TruncatedSeries derivative() const;

    /// Index of the first coefficient differing from `o`, or -1 if equal
    /// up to the common order.
    int first_mismatch(const TruncatedSeries& o) const;

    std::string str(const std::string& var = "s") const;

private:
    std::vector<Rational> c_;
};

} // namespace treelift

#endif
