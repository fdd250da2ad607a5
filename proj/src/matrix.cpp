#include "jorvar/matrix.hpp"

namespace jorvar {

// Fraction-free Bareiss elimination over cpp_int after clearing row
// denominators. Entry growth stays bounded by minors, and all divisions are
// exact.
int rank(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a;
    a.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols; ++j) {
            Int d = rat_den(m.at(i, j));
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        std::vector<Int> row(cols);
        bool nonzero = false;
        for (int j = 0; j < cols; ++j) {
            const Rat& x = m.at(i, j);
            row[j] = rat_num(x) * (lcm / rat_den(x));
            nonzero = nonzero || row[j] != 0;
        }
        if (nonzero)
            a.push_back(std::move(row));
    }

    int r = 0;
    Int prev_pivot = 1;
    const int nrows = static_cast<int>(a.size());
    for (int col = 0; col < cols && r < nrows; ++col) {
        int pivot = -1;
        for (int i = r; i < nrows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            std::swap(a[pivot], a[r]);
        const Int& p = a[r][col];
        for (int i = r + 1; i < nrows; ++i) {
            Int f = a[i][col];
            if (f == 0) {
                // the one-step identity still rescales untouched rows
                for (int j = col + 1; j < cols; ++j)
                    if (a[i][j] != 0)
                        a[i][j] = (a[i][j] * p) / prev_pivot;
                continue;
            }
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * p - f * a[r][j]) / prev_pivot;
            a[i][col] = 0;
        }
        prev_pivot = p;
        ++r;
    }
    return r;
}

Signature signature(const RatMatrix& m) {
    const int n = m.rows();
    if (m.cols() != n)
        throw NotSymmetric("signature of non-square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw NotSymmetric("signature of non-symmetric matrix");

    RatMatrix a = m;
    Signature sig;
    // Congruence diagonalization: every row operation is mirrored on columns.
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap_with = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, i) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with >= 0) {
                for (int j = 0; j < n; ++j)
                    std::swap(a.at(k, j), a.at(swap_with, j));
                for (int i = 0; i < n; ++i)
                    std::swap(a.at(i, k), a.at(i, swap_with));
            } else {
                int mate = -1;
                for (int j = k + 1; j < n; ++j)
                    if (a.at(k, j) != 0) {
                        mate = j;
                        break;
                    }
                if (mate < 0) {
                    ++sig.zero;
                    continue;
                }
                // a[k][k] = 0 but a[k][mate] != 0: adding row+col mate to k
                // creates 2*a[k][mate] on the diagonal (char != 2).
                for (int j = 0; j < n; ++j)
                    a.at(k, j) += a.at(mate, j);
                for (int i = 0; i < n; ++i)
                    a.at(i, k) += a.at(i, mate);
            }
        }
        const Rat pivot = a.at(k, k);
        if (pivot == 0) {
            ++sig.zero;
            continue;
        }
        if (pivot > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / pivot;
            if (f == 0)
                continue;
            for (int j = 0; j < n; ++j)
                a.at(i, j) -= f * a.at(k, j);
            for (int j = 0; j < n; ++j)
                a.at(j, i) -= f * a.at(j, k);
        }
    }
    return sig;
}

RatMatrix row_space(const std::vector<RatVec>& vectors, int ambient_dim) {
    RatMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient_dim)
            throw DimensionMismatch("row_space: vector length mismatch");
        for (int j = 0; j < ambient_dim; ++j)
            m.at(static_cast<int>(i), j) = vectors[i][j];
    }
    int r = 0;
    RatMatrix red = rref(m, &r);
    RatMatrix out(r, ambient_dim);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient_dim; ++j)
            out.at(i, j) = red.at(i, j);
    return out;
}

bool subspace_contains(const RatMatrix& rref_basis, const RatVec& v) {
    if (static_cast<int>(v.size()) != rref_basis.cols())
        throw DimensionMismatch("subspace_contains: vector length mismatch");
    RatVec rem = v;
    for (int i = 0; i < rref_basis.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < rref_basis.cols(); ++j)
            if (rref_basis.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0)
            continue;
        Rat f = rem[lead] / rref_basis.at(i, lead);
        if (f == 0)
            continue;
        for (int j = 0; j < rref_basis.cols(); ++j)
            rem[j] -= f * rref_basis.at(i, j);
    }
    for (const Rat& x : rem)
        if (x != 0)
            return false;
    return true;
}

RatMatrix subspace_sum(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("subspace_sum: ambient dimension mismatch");
    std::vector<RatVec> rows;
    rows.reserve(a.rows() + b.rows());
    for (int i = 0; i < a.rows(); ++i)
        rows.push_back(a.row(i));
    for (int i = 0; i < b.rows(); ++i)
        rows.push_back(b.row(i));
    return row_space(rows, a.cols());
}

} // namespace jorvar
