#ifndef STRESSCA_LINALG_HPP
#define STRESSCA_LINALG_HPP

#include "stressca/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stressca::linalg {

/// Sparse vector as (index, value) pairs sorted by index, zeros never stored.
template <typename Scalar>
using SparseVector = std::vector<std::pair<int, Scalar>>;

template <typename Scalar>
struct Triplet {
    int row;
    int col;
    Scalar value;
};

/// Row-major sparse matrix over an exact scalar (Integer or Rational).
///
/// Rows are kept sorted by column with no stored zeros, so two matrices with
/// the same entries compare equal element by element.
template <typename Scalar>
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : cols_(cols), data_(static_cast<std::size_t>(rows)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    /// Duplicate (row, col) pairs are summed.
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet<Scalar>> triplets) {
        SparseMatrix m(rows, cols);
        std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (std::size_t i = 0; i < triplets.size();) {
            const auto& t = triplets[i];
            if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
                throw std::out_of_range("triplet outside matrix");
            Scalar acc = t.value;
            std::size_t j = i + 1;
            while (j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col)
                acc += triplets[j++].value;
            if (acc != 0) m.data_[static_cast<std::size_t>(t.row)].emplace_back(t.col, acc);
            i = j;
        }
        return m;
    }

    static SparseMatrix from_dense(const MatrixX<Scalar>& dense) {
        SparseMatrix m(static_cast<int>(dense.rows()), static_cast<int>(dense.cols()));
        for (Eigen::Index r = 0; r < dense.rows(); ++r)
            for (Eigen::Index c = 0; c < dense.cols(); ++c)
                if (dense(r, c) != 0) m.data_[static_cast<std::size_t>(r)].emplace_back(static_cast<int>(c), dense(r, c));
        return m;
    }

    /// Builds a matrix whose rows are the given vectors.
    static SparseMatrix from_rows(int cols, std::vector<SparseVector<Scalar>> rows) {
        SparseMatrix m(0, cols);
        m.data_ = std::move(rows);
        for (const auto& row : m.data_)
            for (const auto& [c, v] : row)
                if (c < 0 || c >= cols || v == 0) throw std::invalid_argument("malformed sparse row");
        return m;
    }

    int rows() const { return static_cast<int>(data_.size()); }
    int cols() const { return cols_; }
    const SparseVector<Scalar>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& row : data_) n += row.size();
        return n;
    }

    Scalar coeff(int r, int c) const {
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? it->second : Scalar(0);
    }

    void append_row(SparseVector<Scalar> row) {
        for (const auto& [c, v] : row)
            if (c < 0 || c >= cols_ || v == 0) throw std::invalid_argument("malformed sparse row");
        data_.push_back(std::move(row));
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows());
        for (int r = 0; r < rows(); ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)])
                t.data_[static_cast<std::size_t>(c)].emplace_back(r, v);
        return t;
    }

    MatrixX<Scalar> to_dense() const {
        MatrixX<Scalar> d = MatrixX<Scalar>::Zero(rows(), cols_);
        for (int r = 0; r < rows(); ++r)
            for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) d(r, c) = v;
        return d;
    }

private:
    int cols_ = 0;
    std::vector<SparseVector<Scalar>> data_;
};

using RationalMatrix = SparseMatrix<Rational>;
using IntegerMatrix = SparseMatrix<Integer>;
using RationalVector = SparseVector<Rational>;

/// Row-reduced form produced by fraction-free elimination. Row i of `rows`
/// has its pivot at `pivot_cols[i]`; it may still hold entries in pivot
/// columns of later rows and in free columns, never in earlier pivot columns.
struct Echelon {
    int cols = 0;
    std::vector<int> pivot_cols;
    std::vector<SparseVector<Integer>> rows;
    bool inconsistent = false;  // only meaningful for augmented solves
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Fraction-free elimination over the integers with Markowitz-style sparse
/// pivoting. Rows are made primitive (content divided out) after every update.
/// Columns listed in `no_pivot` are never chosen as pivots.
Echelon eliminate(std::vector<SparseVector<Integer>> rows, int cols,
                  const std::vector<int>& no_pivot = {});

/// Scales a rational row by the lcm of its denominators and divides out the
/// content, yielding a primitive integer row spanning the same line.
SparseVector<Integer> primitive_integer_row(const SparseVector<Rational>& row);
SparseVector<Integer> primitive_integer_row(const SparseVector<Integer>& row);

template <typename Scalar>
std::vector<SparseVector<Integer>> integer_rows(const SparseMatrix<Scalar>& m) {
    std::vector<SparseVector<Integer>> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) out.push_back(primitive_integer_row(m.row(r)));
    return out;
}

/// Basis of {x : Mx = 0} read off an echelon form.
std::vector<RationalVector> kernel_from_echelon(const Echelon& e);

template <typename Scalar>
int rank(const SparseMatrix<Scalar>& m) {
    return eliminate(integer_rows(m), m.cols()).rank();
}

/// Basis of {x : Mx = 0}. The basis has cols(M) - rank(M) vectors; each has a
/// 1 in its own free coordinate and zeros in the other free coordinates.
template <typename Scalar>
std::vector<RationalVector> kernel_basis(const SparseMatrix<Scalar>& m) {
    Echelon e = eliminate(integer_rows(m), m.cols());
    auto basis = kernel_from_echelon(e);
    if (static_cast<int>(basis.size()) + e.rank() != m.cols())
        throw std::logic_error("rank-nullity violated in kernel_basis");
    return basis;
}

template <typename Scalar>
int coker_dim(const SparseMatrix<Scalar>& m) {
    return m.rows() - rank(m);
}

/// Any one solution of Mx = b, or std::nullopt when b is not in the image.
std::optional<VectorQ> solve(const RationalMatrix& m, const VectorQ& b);

/// Dimension of the span of a list of vectors of length `dim`.
int span_rank(const std::vector<RationalVector>& vectors, int dim);

/// True when every vector of `sub` lies in the span of `space`.
bool contained_in_span(const std::vector<RationalVector>& sub,
                       const std::vector<RationalVector>& space, int dim);

/// Coefficient vectors c with sum_i c_i * vectors[i] = 0.
std::vector<RationalVector> linear_relations(const std::vector<RationalVector>& vectors, int dim);

// Small vector helpers shared by the stress and homology code.
RationalVector to_sparse(const VectorQ& v);
VectorQ to_dense(const RationalVector& v, int dim);
RationalVector add_scaled(const RationalVector& a, const RationalVector& b, const Rational& s);
RationalVector scaled(const RationalVector& a, const Rational& s);

/// Dense helpers over Eigen types, used for small geometric computations.
int rank(const MatrixQ& m);
MatrixQ kernel_basis(const MatrixQ& m);  // columns form a basis

}  // namespace stressca::linalg

#endif  // STRESSCA_LINALG_HPP
