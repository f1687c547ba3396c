#include "treelift/series.hpp"

#include <algorithm>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::from_unipoly(const UniPoly& p, int order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = p.coeff(k);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw DomainError("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() != order()) throw DomainError("series order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    if (o.order() != order()) throw DomainError("series order mismatch");
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw DomainError("series inverse needs a nonzero constant term");
    TruncatedSeries out(order());
    out.c_[0] = Rational(1) / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
        out.c_[n] = -acc / c_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!c_[0].is_zero()) throw DomainError("series exp needs constant term 0");
    // g' = f' g, i.e. n*g_n = sum_{k=1..n} k f_k g_{n-k}
    TruncatedSeries out(order());
    out.c_[0] = Rational(1);
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rational(static_cast<long>(k)) * c_[k] * out.c_[n - k];
        out.c_[n] = acc / Rational(static_cast<long>(n));
    }
    return out;
}

TruncatedSeries TruncatedSeries::log() const {
    if (!c_[0].is_one()) throw DomainError("series log needs constant term 1");
    // log f = integral of f'/f
    TruncatedSeries inv = inverse();
    TruncatedSeries out(order());
    if (order() == 0) return out;
    // (f' * inv) has order N-1 worth of valid coefficients; integrate termwise
    std::vector<Rational> d(c_.size(), Rational(0));
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += d[k] * inv.c_[n - 1 - k];
        out.c_[n] = acc / Rational(static_cast<long>(n));
    }
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw DomainError("cannot differentiate an order-0 series");
    TruncatedSeries out(order() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        out.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return out;
}

int TruncatedSeries::first_mismatch(const TruncatedSeries& o) const {
    std::size_t upto = std::min(c_.size(), o.c_.size());
    for (std::size_t k = 0; k < upto; ++k)
        if (c_[k] != o.c_[k]) return static_cast<int>(k);
    return -1;
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (any) os << " + ";
        if (k == 0) {
            os << c_[k].str();
        } else {
            if (!c_[k].is_one()) os << c_[k].str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        any = true;
    }
    if (!any) os << "0";
    os << " + O(" << var << "^" << (order() + 1) << ")";
    return os.str();
}

} // namespace treelift
