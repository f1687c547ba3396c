#ifndef TREELIFT_MATRIX_HPP
#define TREELIFT_MATRIX_HPP

#include <string>
#include <vector>

#include "treelift/multipoly.hpp"
#include "treelift/unipoly.hpp"

namespace treelift {

/// Square matrix over the Weight ring with unique row/column labels.
/// Houses Laplacians, transition matrices, Schrodinger matrices and all
/// their minors.
class RingMatrix {
public:
    RingMatrix() = default; // 0x0
    explicit RingMatrix(std::vector<std::string> labels);
    static RingMatrix identity(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    Weight& at(std::size_t i, std::size_t j) { return e_[i * labels_.size() + j]; }
    const Weight& at(std::size_t i, std::size_t j) const { return e_[i * labels_.size() + j]; }

    Weight trace() const;
    bool all_constant() const;

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.labels_ == b.labels_ && a.e_ == b.e_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Weight> e_;
};

/// Exact determinant. Constant matrices go through fraction-free Bareiss
/// elimination on a denominator-cleared integer matrix; symbolic matrices
/// through division-free expansion with column-subset memoization (see
/// det notes in matrix.cpp). det of the 0x0 matrix is 1.
Weight det(const RingMatrix& m);

/// m with the listed rows+columns removed; survivor order preserved.
/// Unknown labels raise DomainError.
RingMatrix minor_matrix(const RingMatrix& m, const std::vector<std::string>& remove);
RingMatrix minor_by_indices(const RingMatrix& m, const std::vector<int>& remove);

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b);
std::vector<Weight> row_times_matrix(const std::vector<Weight>& v, const RingMatrix& m);

/// det(A + x*B) as an exact univariate polynomial, by evaluation at
/// x = 0..n and Lagrange interpolation. Entries must be constant.
UniPoly det_pencil(const RingMatrix& a, const RingMatrix& b);

} // namespace treelift

#endif
