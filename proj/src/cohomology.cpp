#include "jorvar/cohomology.hpp"

namespace jorvar {

namespace {

void require_jordan(const Algebra& a) {
    auto verdict = is_jordan(a);
    if (!verdict.ok)
        throw NotJordan("cohomology requires a Jordan algebra");
}

} // namespace

CocycleSystem build_cocycle_system(const Algebra& a) {
    const int n = a.dim();
    CocycleSystem sys;
    sys.dim = n;
    sys.matrix = RatMatrix(CocycleSystem::row_count(n), n * n * n);

    // P2[i][j][u][v] = ((e_i e_j) e_u)_v
    std::vector<Rat> p2(size_t(n) * n * n * n, Rat(0));
    auto P2 = [&](int i, int j, int u, int v) -> Rat& {
        return p2[((size_t(i) * n + j) * n + u) * n + v];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    Rat s(0);
                    for (int t = 0; t < n; ++t) {
                        const Rat& cijt = a.c(i, j, t);
                        if (cijt != 0)
                            s += cijt * a.c(t, u, v);
                    }
                    P2(i, j, u, v) = s;
                }

    int row = 0;
    auto col = [&](int i, int j, int k) { return sys.column(i, j, k); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int w = 0; w < n; ++w)
                for (int z = 0; z < n; ++z)
                    for (int p = 0; p < n; ++p, ++row) {
                        auto& M = sys.matrix;
                        // (h(x,y)w)z + (h(x,z)w)y + (h(y,z)w)x
                        for (int k = 0; k < n; ++k) {
                            M.at(row, col(x, y, k)) += P2(k, w, z, p);
                            M.at(row, col(x, z, k)) += P2(k, w, y, p);
                            M.at(row, col(y, z, k)) += P2(k, w, x, p);
                        }
                        // h((xy)w,z) + h((xz)w,y) + h((yz)w,x)
                        for (int b = 0; b < n; ++b) {
                            M.at(row, col(b, z, p)) += P2(x, y, w, b);
                            M.at(row, col(b, y, p)) += P2(x, z, w, b);
                            M.at(row, col(b, x, p)) += P2(y, z, w, b);
                        }
                        // h(xy,w)z + h(xz,w)y + h(yz,w)x
                        for (int t = 0; t < n; ++t)
                            for (int k = 0; k < n; ++k) {
                                const Rat& ckz = a.c(k, z, p);
                                if (a.c(x, y, t) != 0 && ckz != 0)
                                    M.at(row, col(t, w, k)) += a.c(x, y, t) * ckz;
                                const Rat& cky = a.c(k, y, p);
                                if (a.c(x, z, t) != 0 && cky != 0)
                                    M.at(row, col(t, w, k)) += a.c(x, z, t) * cky;
                                const Rat& ckx = a.c(k, x, p);
                                if (a.c(y, z, t) != 0 && ckx != 0)
                                    M.at(row, col(t, w, k)) += a.c(y, z, t) * ckx;
                            }
                        // -(xy)h(w,z) - (xz)h(w,y) - (yz)h(w,x)
                        for (int k = 0; k < n; ++k) {
                            M.at(row, col(w, z, k)) -= P2(x, y, k, p);
                            M.at(row, col(w, y, k)) -= P2(x, z, k, p);
                            M.at(row, col(w, x, k)) -= P2(y, z, k, p);
                        }
                        // -h(x,y)(wz) - h(x,z)(wy) - h(y,z)(wx)
                        for (int k = 0; k < n; ++k) {
                            M.at(row, col(x, y, k)) -= P2(w, z, k, p);
                            M.at(row, col(x, z, k)) -= P2(w, y, k, p);
                            M.at(row, col(y, z, k)) -= P2(w, x, k, p);
                        }
                        // -h(xy,wz) - h(xz,wy) - h(yz,wx)
                        for (int s = 0; s < n; ++s)
                            for (int b = 0; b < n; ++b) {
                                if (a.c(x, y, s) != 0 && a.c(w, z, b) != 0)
                                    M.at(row, col(s, b, p)) -= a.c(x, y, s) * a.c(w, z, b);
                                if (a.c(x, z, s) != 0 && a.c(w, y, b) != 0)
                                    M.at(row, col(s, b, p)) -= a.c(x, z, s) * a.c(w, y, b);
                                if (a.c(y, z, s) != 0 && a.c(w, x, b) != 0)
                                    M.at(row, col(s, b, p)) -= a.c(y, z, s) * a.c(w, x, b);
                            }
                    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k, ++row) {
                sys.matrix.at(row, col(i, j, k)) = Rat(1);
                sys.matrix.at(row, col(j, i, k)) = Rat(-1);
            }
    if (row != sys.matrix.rows())
        throw InternalError("cocycle system row count mismatch");
    return sys;
}

RatMatrix coboundary_matrix(const Algebra& a) {
    const int n = a.dim();
    RatMatrix m(n * n * n, n * n);
    auto mu_col = [n](int p, int q) { return p * n + q; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p, ++row) {
                // (delta mu)(e_i,e_j)_p = mu(e_i e_j)_p - (e_i mu(e_j))_p - (mu(e_i) e_j)_p
                for (int t = 0; t < n; ++t) {
                    const Rat& cijt = a.c(i, j, t);
                    if (cijt != 0)
                        m.at(row, mu_col(p, t)) += cijt;
                }
                for (int q = 0; q < n; ++q) {
                    const Rat& ciq = a.c(i, q, p);
                    if (ciq != 0)
                        m.at(row, mu_col(q, j)) -= ciq;
                    const Rat& cqj = a.c(q, j, p);
                    if (cqj != 0)
                        m.at(row, mu_col(q, i)) -= cqj;
                }
            }
    return m;
}

int z2_dim(const Algebra& a) {
    require_jordan(a);
    const int n = a.dim();
    return n * n * n - rank(build_cocycle_system(a).matrix);
}

int b2_dim(const Algebra& a) {
    require_jordan(a);
    return rank(coboundary_matrix(a));
}

int h2_dim(const Algebra& a) {
    require_jordan(a);
    const int n = a.dim();
    int z2 = n * n * n - rank(build_cocycle_system(a).matrix);
    int b2 = rank(coboundary_matrix(a));
    if (b2 > z2)
        throw InternalError("coboundaries exceed cocycles");
    return z2 - b2;
}

std::vector<RatVec> z2_basis(const Algebra& a) {
    require_jordan(a);
    return kernel_basis(build_cocycle_system(a).matrix);
}

Rigidity rigidity_certificate(const Algebra& a) {
    return h2_dim(a) == 0 ? Rigidity::H2Zero : Rigidity::Inconclusive;
}

RatVec cocycle_identity_residual(const Algebra& alg, const RatVec& alpha, const RatVec& x,
                                 const RatVec& y) {
    const int n = alg.dim();
    if (static_cast<int>(alpha.size()) != n * n * n)
        throw DimensionMismatch("cocycle_identity_residual: alpha length mismatch");
    auto h = [&](const RatVec& u, const RatVec& v) {
        RatVec out(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                if (v[j] == 0)
                    continue;
                Rat f = u[i] * v[j];
                for (int k = 0; k < n; ++k) {
                    const Rat& a_ijk = alpha[(size_t(i) * n + j) * n + k];
                    if (a_ijk != 0)
                        out[k] += f * a_ijk;
                }
            }
        }
        return out;
    };
    auto mul = [&](const RatVec& u, const RatVec& v) { return multiply(alg, u, v); };

    RatVec xx = mul(x, x);
    RatVec lhs = mul(mul(h(x, x), y), x);
    {
        RatVec t = mul(h(xx, y), x);
        for (int p = 0; p < n; ++p)
            lhs[p] += t[p];
    }
    {
        RatVec t = h(mul(xx, y), x);
        for (int p = 0; p < n; ++p)
            lhs[p] += t[p];
    }
    RatVec yx = mul(y, x);
    {
        RatVec t = mul(xx, h(y, x));
        for (int p = 0; p < n; ++p)
            lhs[p] -= t[p];
    }
    {
        RatVec t = mul(h(x, x), yx);
        for (int p = 0; p < n; ++p)
            lhs[p] -= t[p];
    }
    {
        RatVec t = h(xx, yx);
        for (int p = 0; p < n; ++p)
            lhs[p] -= t[p];
    }
    return lhs;
}

} // namespace jorvar
