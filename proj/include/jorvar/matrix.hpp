#pragma once

#include "jorvar/rational.hpp"

#include <string>
#include <vector>

namespace jorvar {

// Dense matrix over a field K (K needs +,-,*,/ and comparison with 0 via
// K(0)). Used with Rat and with RationalFunction entries.
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {
        if (rows < 0 || cols < 0)
            throw Error("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<K> row(int i) const {
        return std::vector<K>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
    }
    std::vector<K> col(int j) const {
        std::vector<K> out(rows_);
        for (int i = 0; i < rows_; ++i)
            out[i] = at(i, j);
        return out;
    }

    bool operator==(const Mat& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

    Mat transposed() const {
        Mat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m.at(j, i) = at(i, j);
        return m;
    }

    Mat operator*(const Mat& rhs) const {
        if (cols_ != rhs.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Mat m(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& aik = at(i, k);
                if (aik == K(0))
                    continue;
                for (int j = 0; j < rhs.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + aik * rhs.at(k, j);
            }
        return m;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<K> out(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(at(i, j) == K(0)))
                    out[i] = out[i] + at(i, j) * v[j];
        return out;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

using RatMatrix = Mat<Rat>;
using RatVec = std::vector<Rat>;

// Reduced row echelon form (Gauss-Jordan over the field).
template <class K>
Mat<K> rref(Mat<K> m, int* out_rank = nullptr) {
    int lead = 0;
    int rank = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < m.rows(); ++i) {
            if (!(m.at(i, col) == K(0))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(lead, j));
        K inv = K(1) / m.at(lead, col);
        for (int j = col; j < m.cols(); ++j)
            m.at(lead, j) = m.at(lead, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead)
                continue;
            K f = m.at(i, col);
            if (f == K(0))
                continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(lead, j);
        }
        ++lead;
        ++rank;
    }
    if (out_rank)
        *out_rank = rank;
    return m;
}

// Exact rank. The Rat overload in matrix.cpp clears denominators and runs
// fraction-free elimination over cpp_int, which is much faster than rational
// Gauss-Jordan on the larger systems.
int rank(const RatMatrix& m);

template <class K>
int rank(const Mat<K>& m) {
    int r = 0;
    rref(m, &r);
    return r;
}

// Basis of the right null space {v : m v = 0}, one vector per free column of
// the RREF, in increasing column order.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Mat<K>& m) {
    Mat<K> r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!(r.at(row, col) == K(0))) {
            pivot_col.push_back(col);
            is_pivot[col] = true;
            ++row;
        }
    }
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<K> v(m.cols(), K(0));
        v[free] = K(1);
        for (size_t p = 0; p < pivot_col.size(); ++p)
            v[pivot_col[p]] = K(0) - r.at(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = rhs, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& m, const std::vector<K>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw DimensionMismatch("solve: rhs length mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Mat<K> r = rref(aug);
    std::vector<K> x(m.cols(), K(0));
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        if (!(r.at(row, col) == K(0))) {
            x[col] = r.at(row, m.cols());
            ++row;
        }
    }
    for (int i = row; i < m.rows(); ++i)
        if (!(r.at(i, m.cols()) == K(0)))
            return std::nullopt;
    return x;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    int r = 0;
    Mat<K> red = rref(aug, &r);
    for (int i = 0; i < n; ++i)
        if (red.at(i, i) == K(0))
            throw SingularMatrix("matrix is singular");
    Mat<K> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = red.at(i, n + j);
    return out;
}

template <class K>
K determinant(Mat<K> m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of non-square matrix");
    K det = K(1);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!(m.at(i, col) == K(0))) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return K(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            det = K(0) - det;
        }
        det = det * m.at(col, col);
        K inv = K(1) / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            K f = m.at(i, col) * inv;
            if (f == K(0))
                continue;
            for (int j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Signature& rhs) const {
        return positive == rhs.positive && negative == rhs.negative && zero == rhs.zero;
    }
    bool operator!=(const Signature& rhs) const { return !(*this == rhs); }
    std::string str() const {
        return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," +
               std::to_string(zero) + ")";
    }
};

// Sylvester signature of a symmetric rational matrix, by exact congruence
// diagonalization. Throws NotSymmetric.
Signature signature(const RatMatrix& m);

// --- subspace helpers (subspaces as canonical RREF row bases) ---

// Canonical basis of the span of the given vectors: nonzero rows of the RREF.
RatMatrix row_space(const std::vector<RatVec>& vectors, int ambient_dim);

bool subspace_contains(const RatMatrix& rref_basis, const RatVec& v);

RatMatrix subspace_sum(const RatMatrix& a, const RatMatrix& b);

inline int subspace_dim(const RatMatrix& rref_basis) { return rref_basis.rows(); }

} // namespace jorvar
