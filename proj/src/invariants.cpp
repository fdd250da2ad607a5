#include "jorvar/invariants.hpp"

namespace jorvar {

namespace {

// Span of all pairwise products of two subspace bases.
RatMatrix product_span(const Algebra& a, const RatMatrix& u, const RatMatrix& v) {
    std::vector<RatVec> prods;
    prods.reserve(size_t(u.rows()) * v.rows());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < v.rows(); ++j)
            prods.push_back(multiply(a, u.row(i), v.row(j)));
    return row_space(prods, a.dim());
}

RatMatrix full_space(int n) { return RatMatrix::identity(n); }

} // namespace

std::vector<int> PowerFiltration::power_dims() const {
    std::vector<int> out;
    out.reserve(powers.size());
    for (const auto& m : powers)
        out.push_back(m.rows());
    return out;
}

std::vector<int> PowerFiltration::lcs_dims() const {
    std::vector<int> out;
    out.reserve(lcs.size());
    for (const auto& m : lcs)
        out.push_back(m.rows());
    return out;
}

PowerFiltration power_filtration(const Algebra& a) {
    const int n = a.dim();
    PowerFiltration f;
    f.powers.push_back(full_space(n));
    f.lcs.push_back(full_space(n));

    // J^r = sum over i+j=r of J^i J^j; stabilizes within dim+1 steps. The
    // chains are stored up to (and excluding) the first repeat.
    for (int r = 2;; ++r) {
        RatMatrix next(0, n);
        for (int i = 1; i < r; ++i)
            next = subspace_sum(next, product_span(a, f.powers[i - 1], f.powers[r - i - 1]));
        if (next == f.powers.back())
            break;
        f.powers.push_back(next);
        if (next.rows() == 0)
            break;
        if (r > n + 1)
            throw InternalError("power chain failed to stabilize within dim+1 steps");
    }
    for (int r = 2;; ++r) {
        RatMatrix next = product_span(a, f.lcs.back(), full_space(n));
        if (next == f.lcs.back())
            break;
        f.lcs.push_back(next);
        if (next.rows() == 0)
            break;
        if (r > n + 1)
            throw InternalError("lower central series failed to stabilize within dim+1 steps");
    }

    if (f.lcs.back().rows() == 0) {
        // strictly decreasing chain, so every quotient dimension is positive
        std::vector<int> type;
        for (size_t r = 0; r + 1 < f.lcs.size(); ++r)
            type.push_back(f.lcs[r].rows() - f.lcs[r + 1].rows());
        f.niltype = std::move(type);
    }
    return f;
}

std::vector<RatVec> annihilator(const Algebra& a) {
    const int n = a.dim();
    RatMatrix m(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                m.at(i * n + p, q) = a.c(q, i, p);
    return kernel_basis(m);
}

RatMatrix trace_form_gram(const Algebra& a) {
    const int n = a.dim();
    // trace of left multiplication by e_a
    std::vector<Rat> tr(n, Rat(0));
    for (int e = 0; e < n; ++e)
        for (int p = 0; p < n; ++p)
            tr[e] += a.c(e, p, p);
    RatMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v(0);
            for (int e = 0; e < n; ++e) {
                const Rat& cije = a.c(i, j, e);
                if (cije != 0)
                    v += cije * tr[e];
            }
            gram.at(i, j) = v;
        }
    return gram;
}

std::vector<RatVec> radical(const Algebra& a) {
    auto verdict = is_jordan(a);
    if (!verdict.ok)
        throw NotJordan("radical requires a Jordan algebra");
    auto basis = kernel_basis(trace_form_gram(a));

    // The trace-form kernel must come out an ideal and nilpotent; anything
    // else means the tensor is corrupt.
    const int n = a.dim();
    RatMatrix span = row_space(basis, n);
    for (const auto& v : basis)
        for (int i = 0; i < n; ++i) {
            RatVec ei(n, Rat(0));
            ei[i] = Rat(1);
            if (!subspace_contains(span, multiply(a, v, ei)))
                throw InternalError("radical candidate is not an ideal");
        }
    if (!basis.empty()) {
        Algebra sub = restrict_to_span(a, basis);
        if (!power_filtration(sub).nilpotent())
            throw InternalError("radical candidate is not nilpotent");
    }
    return basis;
}

int derivation_dim(const Algebra& a) {
    const int n = a.dim();
    // Unknowns D[p][q] (image column q), equations indexed by (i,j,p).
    RatMatrix m(n * n * n, n * n);
    auto col = [n](int p, int q) { return p * n + q; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p, ++row) {
                for (int t = 0; t < n; ++t) {
                    const Rat& cijt = a.c(i, j, t);
                    if (cijt != 0)
                        m.at(row, col(p, t)) += cijt;
                }
                for (int q = 0; q < n; ++q) {
                    const Rat& cqj = a.c(q, j, p);
                    if (cqj != 0)
                        m.at(row, col(q, i)) -= cqj;
                    const Rat& ciq = a.c(i, q, p);
                    if (ciq != 0)
                        m.at(row, col(q, j)) -= ciq;
                }
            }
    return n * n - rank(m);
}

int orbit_dimension(const Algebra& a) { return a.dim() * a.dim() - derivation_dim(a); }

bool verify_idempotent(const Algebra& a, const RatVec& e) {
    if (static_cast<int>(e.size()) != a.dim())
        throw DimensionMismatch("verify_idempotent: vector length mismatch");
    bool nonzero = false;
    for (const Rat& x : e)
        nonzero = nonzero || x != 0;
    return nonzero && multiply(a, e, e) == e;
}

namespace {

RatMatrix left_mult_matrix(const Algebra& a, const RatVec& x) {
    const int n = a.dim();
    RatMatrix m(n, n);
    for (int q = 0; q < n; ++q) {
        RatVec eq(n, Rat(0));
        eq[q] = Rat(1);
        RatVec v = multiply(a, x, eq);
        for (int p = 0; p < n; ++p)
            m.at(p, q) = v[p];
    }
    return m;
}

RatMatrix eigenspace(const RatMatrix& op, const Rat& lambda) {
    const int n = op.rows();
    RatMatrix shifted = op;
    for (int i = 0; i < n; ++i)
        shifted.at(i, i) -= lambda;
    return row_space(kernel_basis(shifted), n);
}

} // namespace

PeirceDecomposition peirce_decompose(const Algebra& a, const RatVec& e) {
    if (!verify_idempotent(a, e))
        throw NotIdempotent("peirce_decompose: not a nonzero idempotent");
    const RatMatrix op = left_mult_matrix(a, e);
    PeirceDecomposition d;
    d.idempotent = e;
    d.p1 = eigenspace(op, Rat(1));
    d.p_half = eigenspace(op, Rat(1, 2));
    d.p0 = eigenspace(op, Rat(0));
    if (d.p1.rows() + d.p_half.rows() + d.p0.rows() != a.dim())
        throw EigenspaceGap("peirce_decompose: eigenspaces for 1, 1/2, 0 do not span");

    auto contained = [&](const RatMatrix& u, const RatMatrix& v, const RatMatrix& target,
                         const std::string& name) {
        RatMatrix p = product_span(a, u, v);
        bool ok = true;
        for (int i = 0; i < p.rows() && ok; ++i)
            ok = subspace_contains(target, p.row(i));
        d.containments.push_back({name, ok});
    };
    RatMatrix p01 = subspace_sum(d.p0, d.p1);
    contained(d.p1, d.p1, d.p1, "P1*P1 in P1");
    contained(d.p1, d.p0, RatMatrix(0, a.dim()), "P1*P0 = 0");
    contained(d.p0, d.p0, d.p0, "P0*P0 in P0");
    contained(d.p0, d.p_half, d.p_half, "P0*P1/2 in P1/2");
    contained(d.p1, d.p_half, d.p_half, "P1*P1/2 in P1/2");
    contained(d.p_half, d.p_half, p01, "P1/2*P1/2 in P0+P1");
    return d;
}

RefinedPeirce refined_peirce(const Algebra& a, const std::vector<RatVec>& idempotents) {
    const int n = a.dim();
    const int m = static_cast<int>(idempotents.size());
    for (const auto& e : idempotents)
        if (!verify_idempotent(a, e))
            throw NotIdempotent("refined_peirce: not a nonzero idempotent");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            RatVec p = multiply(a, idempotents[i], idempotents[j]);
            for (const Rat& x : p)
                if (x != 0)
                    throw Error("refined_peirce: idempotents are not orthogonal");
        }

    std::vector<RatMatrix> ops;
    for (const auto& e : idempotents)
        ops.push_back(left_mult_matrix(a, e));

    RefinedPeirce out;
    // eigenvalue of x under L_{e_i}: 1 on P_ii, 1/2 on P_ij (j != i), 0 otherwise
    auto eigenvalue_for = [](int i, int r, int s) {
        if (r == s)
            return (r == i) ? Rat(1) : Rat(0);
        if (r == i || s == i)
            return Rat(1, 2);
        return Rat(0);
    };
    int total = 0;
    for (int r = 0; r <= m; ++r)
        for (int s = r; s <= m; ++s) {
            // simultaneous eigenspace: stack (L_{e_i} - lambda_i I) over all i
            RatMatrix stacked(n * m, n);
            for (int i = 1; i <= m; ++i) {
                Rat lambda = eigenvalue_for(i, r, s);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        stacked.at((i - 1) * n + p, q) =
                            ops[i - 1].at(p, q) - (p == q ? lambda : Rat(0));
            }
            RatMatrix comp = row_space(kernel_basis(stacked), n);
            total += comp.rows();
            out.components[{r, s}] = std::move(comp);
        }
    out.spans = (total == n);

    auto comp = [&](int r, int s) -> const RatMatrix& {
        return out.components.at({std::min(r, s), std::max(r, s)});
    };
    bool ok = out.spans;
    for (int i = 0; i <= m && ok; ++i)
        for (int j = i; j <= m && ok; ++j)
            for (int k = 0; k <= m && ok; ++k)
                for (int l = k; l <= m && ok; ++l) {
                    RatMatrix target(0, n);
                    if (i == j && k == l && i == k)
                        target = comp(i, i); // P_ii^2 in P_ii
                    else if (i == j && k == l)
                        target = RatMatrix(0, n); // P_ii * P_jj = 0
                    else if (i == j) {
                        // P_ii * P_kl
                        if (k == i || l == i)
                            target = comp(k, l);
                        else
                            target = RatMatrix(0, n);
                    } else if (k == l) {
                        if (i == k || j == k)
                            target = comp(i, j);
                        else
                            target = RatMatrix(0, n);
                    } else if (i == k && j == l) {
                        target = subspace_sum(comp(i, i), comp(j, j)); // P_ij^2
                    } else if (j == k || i == l || i == k || j == l) {
                        // P_ij * P_jk in P_ik (shared single index)
                        int x, y;
                        if (j == k) {
                            x = i;
                            y = l;
                        } else if (i == l) {
                            x = j;
                            y = k;
                        } else if (i == k) {
                            x = j;
                            y = l;
                        } else {
                            x = i;
                            y = k;
                        }
                        target = comp(x, y);
                    } else {
                        target = RatMatrix(0, n); // all four indices distinct
                    }
                    RatMatrix p = product_span(a, comp(i, j), comp(k, l));
                    for (int t = 0; t < p.rows() && ok; ++t)
                        ok = subspace_contains(target, p.row(t));
                }
    out.table_holds = ok;
    return out;
}

std::vector<int> radical_niltype(const Algebra& a) {
    auto rad = radical(a);
    if (rad.empty())
        return {};
    Algebra sub = restrict_to_span(a, rad);
    auto f = power_filtration(sub);
    if (!f.niltype)
        throw InternalError("radical restriction is not nilpotent");
    return *f.niltype;
}

} // namespace jorvar
