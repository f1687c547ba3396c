#include "treelift/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) throw DomainError("empty variable name");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [exps, c] : terms_) {
        std::uint32_t t = 0;
        for (auto e : exps) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::uint32_t MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t d = 0;
    for (const auto& [exps, c] : terms_) d = std::max(d, exps[pos]);
    return d;
}

std::vector<std::string> MultiPoly::merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MultiPoly::TermMap MultiPoly::remapped(const std::vector<std::string>& target) const {
    if (target == vars_) return terms_;
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
        slot[i] = static_cast<std::size_t>(it - target.begin());
    }
    TermMap out;
    for (const auto& [exps, c] : terms_) {
        Exponents e(target.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) e[slot[i]] = exps[i];
        out.emplace(std::move(e), c);
    }
    return out;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (vars_.empty()) return;
    // drop registry slots no term uses
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exps, c] : terms_)
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(vars_[i]);
    TermMap out;
    for (const auto& [exps, c] : terms_) {
        Exponents e;
        e.reserve(keep.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (used[i]) e.push_back(exps[i]);
        out.emplace(std::move(e), c);
    }
    vars_ = std::move(keep);
    terms_ = std::move(out);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [exps, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (vars_ == o.vars_) {
        for (const auto& [exps, c] : o.terms_) {
            auto [it, fresh] = terms_.emplace(exps, c);
            if (!fresh) it->second += c;
        }
    } else {
        auto merged = merged_vars(vars_, o.vars_);
        TermMap mine = remapped(merged);
        TermMap theirs = o.remapped(merged);
        for (const auto& [exps, c] : theirs) {
            auto [it, fresh] = mine.emplace(exps, c);
            if (!fresh) it->second += c;
        }
        vars_ = std::move(merged);
        terms_ = std::move(mine);
    }
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    return *this += -o;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    if (terms_.empty() || o.terms_.empty()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    auto merged = merged_vars(vars_, o.vars_);
    TermMap a = remapped(merged);
    TermMap b = o.remapped(merged);
    TermMap prod;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(merged.size());
            for (std::size_t i = 0; i < merged.size(); ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, fresh] = prod.try_emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    vars_ = std::move(merged);
    terms_ = std::move(prod);
    normalize();
    return *this;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) {
        if (!is_constant()) throw DomainError("negative power of a non-constant polynomial");
        return MultiPoly(constant_value().pow(e));
    }
    MultiPoly acc(Rational(1));
    MultiPoly base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& den) const {
    if (den.is_zero()) throw DomainError("exact division by zero");
    if (is_zero()) return MultiPoly();
    if (den.is_constant()) {
        Rational d = den.constant_value();
        MultiPoly out(*this);
        for (auto& [exps, c] : out.terms_) c /= d;
        return out;
    }
    auto merged = merged_vars(vars_, den.vars_);
    TermMap rem = remapped(merged);
    TermMap divisor = den.remapped(merged);
    const Exponents& dlead = divisor.begin()->first;
    const Rational& dcoef = divisor.begin()->second;

    TermMap quot;
    while (!rem.empty()) {
        const Exponents& rlead = rem.begin()->first;
        Exponents qe(merged.size());
        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (rlead[i] < dlead[i])
                throw InexactDivision("polynomial division leaves a remainder");
            qe[i] = rlead[i] - dlead[i];
        }
        Rational qc = rem.begin()->second / dcoef;
        // rem -= (qc * qe) * divisor
        for (const auto& [de, dc] : divisor) {
            Exponents e(merged.size());
            for (std::size_t i = 0; i < merged.size(); ++i) e[i] = qe[i] + de[i];
            Rational c = qc * dc;
            auto [it, fresh] = rem.try_emplace(std::move(e), -c);
            if (!fresh) {
                it->second -= c;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        quot.emplace(std::move(qe), std::move(qc));
    }
    MultiPoly out;
    out.vars_ = merged;
    out.terms_ = std::move(quot);
    out.normalize();
    return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw DomainError("evaluate: no value for variable '" + v + "'");
        values.push_back(it->second);
    }
    Rational acc(0);
    for (const auto& [exps, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) t *= values[i].pow(static_cast<long>(exps[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, std::uint32_t k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (k == 0) return *this;
        return MultiPoly();
    }
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [exps, c] : terms_) {
        if (exps[pos] != k) continue;
        Exponents e = exps;
        e[pos] = 0;
        out.terms_.emplace(std::move(e), c);
    }
    out.normalize();
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        Rational coef = c;
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
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (exps[i] > 1) mono << "^" << exps[i];
            any_var = true;
        }
        if (!any_var) {
            os << coef.str();
        } else if (coef.is_one()) {
            os << mono.str();
        } else {
            os << coef.str() << "*" << mono.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

} // namespace treelift
