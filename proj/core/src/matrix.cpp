#include "treelift/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "treelift/errors.hpp"

namespace treelift {

RingMatrix::RingMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), e_(labels_.size() * labels_.size()) {
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw DomainError("duplicate matrix label");
}

RingMatrix RingMatrix::identity(std::vector<std::string> labels) {
    RingMatrix m(std::move(labels));
    for (std::size_t i = 0; i < m.size(); ++i) m.at(i, i) = Weight(1);
    return m;
}

Weight RingMatrix::trace() const {
    Weight t;
    for (std::size_t i = 0; i < size(); ++i) t += at(i, i);
    return t;
}

bool RingMatrix::all_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](const Weight& w) { return w.is_constant(); });
}

namespace {

// Bareiss fraction-free elimination over the integers. Every division is
// exact (the working entries are minors of the input).
mpz_class bareiss_det(std::vector<mpz_class>& a, std::size_t n) {
    int sign = 1;
    mpz_class prev(1), num, t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                num = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
                mpz_divexact(t.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = t;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    mpz_class d = a[n * n - 1];
    return sign < 0 ? mpz_class(-d) : d;
}

Weight det_constant(const RingMatrix& m) {
    std::size_t n = m.size();
    std::vector<mpz_class> a(n * n);
    mpq_class scale(1); // product of the row multipliers
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class den = m.at(i, j).constant_value().denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        scale *= mpq_class(l);
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = m.at(i, j).constant_value().raw() * mpq_class(l);
            a[i * n + j] = v.get_num(); // denominator is 1 by construction
        }
    }
    mpq_class d(bareiss_det(a, n));
    d /= scale;
    d.canonicalize();
    return Weight(Rational(d));
}

// Division-free expansion along rows with memoization on the surviving
// column set. For sparse symbolic matrices (Laplacians, lifted Schrodinger
// matrices) this multiplies a short row entry into each partial minor,
// which stays far cheaper than eliminating between two large minors.
Weight det_symbolic(const RingMatrix& m) {
    std::size_t n = m.size();
    if (n > 64) throw DomainError("symbolic determinant beyond 64x64 is unsupported");
    std::unordered_map<std::uint64_t, Weight> cur;
    cur.emplace(0u, Weight(1));
    for (std::size_t k = n; k-- > 0;) {
        std::unordered_map<std::uint64_t, Weight> next;
        next.reserve(cur.size() * (n - k));
        for (const auto& [mask, val] : cur) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t bit = 1ull << j;
                if (mask & bit) continue;
                const Weight& entry = m.at(k, j);
                if (entry.is_zero()) continue;
                int below = std::popcount(mask & (bit - 1));
                Weight contrib = entry * val;
                if (below & 1) contrib = -contrib;
                auto [it, fresh] = next.try_emplace(mask | bit, contrib);
                if (!fresh) it->second += contrib;
            }
        }
        cur = std::move(next);
        if (cur.empty()) return Weight();
    }
    std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    auto it = cur.find(full);
    return it == cur.end() ? Weight() : it->second;
}

} // namespace

Weight det(const RingMatrix& m) {
    if (m.size() == 0) return Weight(1); // empty product convention
    if (m.all_constant()) return det_constant(m);
    return det_symbolic(m);
}

RingMatrix minor_by_indices(const RingMatrix& m, const std::vector<int>& remove) {
    std::vector<bool> gone(m.size(), false);
    for (int r : remove) {
        if (r < 0 || static_cast<std::size_t>(r) >= m.size())
            throw DomainError("minor: index out of range");
        gone[static_cast<std::size_t>(r)] = true;
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (gone[i]) continue;
        keep.push_back(i);
        labels.push_back(m.labels()[i]);
    }
    RingMatrix out(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.at(i, j) = m.at(keep[i], keep[j]);
    return out;
}

RingMatrix minor_matrix(const RingMatrix& m, const std::vector<std::string>& remove) {
    std::unordered_map<std::string, int> pos;
    for (std::size_t i = 0; i < m.size(); ++i) pos.emplace(m.labels()[i], static_cast<int>(i));
    std::vector<int> idx;
    idx.reserve(remove.size());
    for (const auto& label : remove) {
        auto it = pos.find(label);
        if (it == pos.end()) throw DomainError("minor: unknown label '" + label + "'");
        idx.push_back(it->second);
    }
    return minor_by_indices(m, idx);
}

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b) {
    if (a.size() != b.size()) throw DomainError("matrix product: dimension mismatch");
    RingMatrix out(a.labels());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

std::vector<Weight> row_times_matrix(const std::vector<Weight>& v, const RingMatrix& m) {
    if (v.size() != m.size()) throw DomainError("row-vector product: dimension mismatch");
    std::vector<Weight> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            out[j] += v[i] * m.at(i, j);
        }
    }
    return out;
}

UniPoly det_pencil(const RingMatrix& a, const RingMatrix& b) {
    if (a.size() != b.size()) throw DomainError("det_pencil: dimension mismatch");
    if (!a.all_constant() || !b.all_constant())
        throw DomainError("det_pencil requires constant entries");
    std::size_t n = a.size();
    std::vector<Rational> xs, ys;
    xs.reserve(n + 1);
    ys.reserve(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        Rational x(static_cast<long>(p));
        RingMatrix m(a.labels());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Weight(a.at(i, j).constant_value() +
                                    x * b.at(i, j).constant_value());
        xs.push_back(x);
        ys.push_back(det(m).constant_value());
    }
    return interpolate(xs, ys);
}

} // namespace treelift
