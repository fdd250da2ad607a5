#include "jorvar/algebra.hpp"

namespace jorvar {

Algebra::Algebra(int dim, std::vector<Rat> tensor, std::string label)
    : dim_(dim), c_(std::move(tensor)), label_(std::move(label)) {
    if (dim_ < 1)
        throw Error("algebra dimension must be at least 1");
    if (c_.size() != size_t(dim_) * dim_ * dim_)
        throw DimensionMismatch("structure tensor has wrong size");
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) != c(j, i, k))
                    throw NotSymmetric("structure constants are not commutative");
}

Algebra Algebra::zero(int dim, std::string label) {
    return Algebra(dim, std::vector<Rat>(size_t(dim) * dim * dim, Rat(0)), std::move(label));
}

RatVec Algebra::basis_product(int i, int j) const {
    RatVec out(dim_);
    for (int k = 0; k < dim_; ++k)
        out[k] = c(i, j, k);
    return out;
}

AlgebraBuilder& AlgebraBuilder::product(int i, int j, std::vector<std::pair<int, Rat>> terms) {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
        throw DimensionMismatch("product index out of range");
    for (const auto& [k, coeff] : terms) {
        if (k < 1 || k > dim_)
            throw DimensionMismatch("product target index out of range");
        size_t ij = (size_t(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
        size_t ji = (size_t(j - 1) * dim_ + (i - 1)) * dim_ + (k - 1);
        c_[ij] = coeff;
        c_[ji] = coeff;
    }
    return *this;
}

Algebra AlgebraBuilder::build(std::string label) const {
    return Algebra(dim_, c_, std::move(label));
}

RatVec multiply(const Algebra& a, const RatVec& x, const RatVec& y) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionMismatch("multiply: vector length mismatch");
    RatVec out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            Rat f = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                const Rat& cijk = a.c(i, j, k);
                if (cijk != 0)
                    out[k] += f * cijk;
            }
        }
    }
    return out;
}

namespace {

// Product of a basis vector with an arbitrary vector.
RatVec basis_times(const Algebra& a, int i, const RatVec& z) {
    const int n = a.dim();
    RatVec out(n, Rat(0));
    for (int b = 0; b < n; ++b) {
        if (z[b] == 0)
            continue;
        for (int p = 0; p < n; ++p) {
            const Rat& cibp = a.c(i, b, p);
            if (cibp != 0)
                out[p] += z[b] * cibp;
        }
    }
    return out;
}

// Associator (e_x, e_y, z) = (e_x e_y) z - e_x (e_y z).
RatVec basis_associator(const Algebra& a, const std::vector<RatVec>& prod, int x, int y,
                        const RatVec& z) {
    const int n = a.dim();
    RatVec left(n, Rat(0));
    const RatVec& exy = prod[size_t(x) * n + y];
    // (e_x e_y) z
    for (int b = 0; b < n; ++b) {
        if (exy[b] == 0)
            continue;
        for (int q = 0; q < n; ++q) {
            if (z[q] == 0)
                continue;
            for (int p = 0; p < n; ++p) {
                const Rat& c = a.c(b, q, p);
                if (c != 0)
                    left[p] += exy[b] * z[q] * c;
            }
        }
    }
    RatVec right = basis_times(a, x, basis_times(a, y, z));
    for (int p = 0; p < n; ++p)
        left[p] -= right[p];
    return left;
}

} // namespace

JordanVerdict is_jordan(const Algebra& a) {
    const int n = a.dim();
    std::vector<RatVec> prod(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            prod[size_t(i) * n + j] = a.basis_product(i, j);

    // Linearized identity (x,y,zw) + (w,y,zx) + (z,y,xw) = 0 over all basis
    // 4-tuples; equivalent to the quadratic identity in characteristic 0.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RatVec total =
                        basis_associator(a, prod, i, j, prod[size_t(k) * n + l]);
                    RatVec t2 = basis_associator(a, prod, l, j, prod[size_t(k) * n + i]);
                    RatVec t3 = basis_associator(a, prod, k, j, prod[size_t(i) * n + l]);
                    for (int p = 0; p < n; ++p) {
                        total[p] += t2[p] + t3[p];
                        if (total[p] != 0) {
                            JordanVerdict v;
                            v.ok = false;
                            v.tuple = {i + 1, j + 1, k + 1, l + 1, p + 1};
                            v.residual = total[p];
                            return v;
                        }
                    }
                }
    return {};
}

AssocVerdict is_associative(const Algebra& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatVec eij = a.basis_product(i, j);
            for (int k = 0; k < n; ++k) {
                RatVec left(n, Rat(0));
                for (int b = 0; b < n; ++b)
                    if (eij[b] != 0)
                        for (int p = 0; p < n; ++p)
                            left[p] += eij[b] * a.c(b, k, p);
                RatVec ejk = a.basis_product(j, k);
                for (int b = 0; b < n; ++b)
                    if (ejk[b] != 0)
                        for (int p = 0; p < n; ++p)
                            left[p] -= ejk[b] * a.c(i, b, p);
                for (int p = 0; p < n; ++p)
                    if (left[p] != 0)
                        return {false, {i + 1, j + 1, k + 1}};
            }
        }
    return {};
}

std::optional<RatVec> find_unit(const Algebra& a) {
    const int n = a.dim();
    // Stack the equations u * e_i = e_i over all i.
    RatMatrix m(n * n, n);
    RatVec rhs(size_t(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q)
                m.at(i * n + p, q) = a.c(q, i, p);
            rhs[size_t(i) * n + p] = (p == i) ? Rat(1) : Rat(0);
        }
    return solve(m, rhs);
}

Algebra change_of_basis(const Algebra& a, const RatMatrix& g) {
    const int n = a.dim();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("change_of_basis: matrix shape mismatch");
    RatMatrix ginv = inverse(g); // throws SingularMatrix
    std::vector<Rat> tensor(size_t(n) * n * n, Rat(0));
    std::vector<RatVec> pre(n);
    for (int i = 0; i < n; ++i)
        pre[i] = ginv.col(i);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RatVec w = g.apply(multiply(a, pre[i], pre[j]));
            for (int k = 0; k < n; ++k) {
                tensor[(size_t(i) * n + j) * n + k] = w[k];
                tensor[(size_t(j) * n + i) * n + k] = w[k];
            }
        }
    return Algebra(n, std::move(tensor), a.label());
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const int na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<Rat> tensor(size_t(n) * n * n, Rat(0));
    auto at = [&](int i, int j, int k) -> Rat& {
        return tensor[(size_t(i) * n + j) * n + k];
    };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k)
                at(i, j, k) = a.c(i, j, k);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k)
                at(na + i, na + j, na + k) = b.c(i, j, k);
    std::string label = a.label().empty() || b.label().empty()
                            ? std::string()
                            : a.label() + "+" + b.label();
    return Algebra(n, std::move(tensor), std::move(label));
}

Algebra unitalize(const Algebra& a) {
    const int n = a.dim(), m = n + 1;
    std::vector<Rat> tensor(size_t(m) * m * m, Rat(0));
    auto at = [&](int i, int j, int k) -> Rat& {
        return tensor[(size_t(i) * m + j) * m + k];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                at(i, j, k) = a.c(i, j, k);
    for (int i = 0; i < m; ++i) {
        at(n, i, i) = Rat(1);
        at(i, n, i) = Rat(1);
    }
    std::string label = a.label().empty() ? std::string() : a.label() + "#";
    return Algebra(m, std::move(tensor), std::move(label));
}

Algebra restrict_to_span(const Algebra& a, const std::vector<RatVec>& basis) {
    const int n = a.dim();
    const int m = static_cast<int>(basis.size());
    if (m < 1)
        throw Error("restrict_to_span: empty basis");
    RatMatrix cols(n, m);
    for (int j = 0; j < m; ++j) {
        if (static_cast<int>(basis[j].size()) != n)
            throw DimensionMismatch("restrict_to_span: vector length mismatch");
        for (int i = 0; i < n; ++i)
            cols.at(i, j) = basis[j][i];
    }
    if (rank(cols) != m)
        throw Error("restrict_to_span: vectors are dependent");
    std::vector<Rat> tensor(size_t(m) * m * m, Rat(0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            RatVec w = multiply(a, basis[i], basis[j]);
            auto coords = solve(cols, w);
            if (!coords)
                throw Error("restrict_to_span: span is not closed under the product");
            for (int k = 0; k < m; ++k) {
                tensor[(size_t(i) * m + j) * m + k] = (*coords)[k];
                tensor[(size_t(j) * m + i) * m + k] = (*coords)[k];
            }
        }
    return Algebra(m, std::move(tensor));
}

} // namespace jorvar
