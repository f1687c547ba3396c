#include "treelift/unipoly.hpp"

#include <ostream>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly acc(Rational(1));
    UniPoly base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

UniPoly UniPoly::divide_exact(const UniPoly& den) const {
    if (den.is_zero()) throw DomainError("exact division by zero polynomial");
    if (is_zero()) return UniPoly();
    if (degree() < den.degree())
        throw InexactDivision("polynomial division leaves a remainder");
    std::vector<Rational> rem = c_;
    const Rational lead = den.c_.back();
    std::size_t dn = den.c_.size();
    std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dn - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= q * den.c_[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
    return UniPoly(std::move(quot));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
    for (const auto& v : p.variables())
        if (v != var)
            throw DomainError("polynomial is not univariate in '" + var + "'");
    std::vector<Rational> out(p.degree_in(var) + 1, Rational(0));
    for (const auto& [exps, c] : p.terms()) {
        std::uint32_t k = exps.empty() ? 0 : exps[0];
        out[k] = c;
    }
    return UniPoly(std::move(out));
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
    MultiPoly s = MultiPoly::variable(var);
    MultiPoly acc;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += MultiPoly(c_[i]) * s.pow(static_cast<long>(i));
    }
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational coef = c_[i];
        if (first) {
            if (coef.sign() < 0) {
                os << "-";
                coef = -coef;
            }
            first = false;
        } else if (coef.sign() < 0) {
            os << " - ";
            coef = -coef;
        } else {
            os << " + ";
        }
        if (i == 0) {
            os << coef.str();
        } else {
            if (!coef.is_one()) os << coef.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.str();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= UniPoly(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        UniPoly scaled = basis * UniPoly(ys[i] / denom);
        acc += scaled;
    }
    return acc;
}

} // namespace treelift
