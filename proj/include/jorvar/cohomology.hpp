#pragma once

#include "jorvar/algebra.hpp"

namespace jorvar {

// Linear system cutting out the 2-cocycles Z^2(J,J) inside the n^3 unknowns
// alpha_ij^k with h(e_i,e_j) = sum_k alpha_ij^k e_k. Rows are one component
// of the linearized cocycle identity per ordered basis 4-tuple, followed by
// the symmetry equations alpha_ij^k - alpha_ji^k = 0; that is
// l(n) = (n^4 + n(n-1)/2) n rows in total. Redundant rows are kept; rank
// absorbs them.
struct CocycleSystem {
    int dim = 0;
    RatMatrix matrix;

    int column(int i, int j, int k) const { return (i * dim + j) * dim + k; }
    static int row_count(int n) { return (n * n * n * n + n * (n - 1) / 2) * n; }
};

CocycleSystem build_cocycle_system(const Algebra& a);

// Matrix of mu -> ((a,b) -> mu(ab) - a mu(b) - mu(a) b), from the n^2
// unknowns mu[p][q] to cocycle coordinates (n^3 rows). Its columns all lie in
// the null space of the cocycle system.
RatMatrix coboundary_matrix(const Algebra& a);

int z2_dim(const Algebra& a);  // n^3 - rank of the cocycle system
int b2_dim(const Algebra& a);  // rank of the coboundary matrix
int h2_dim(const Algebra& a);  // z2 - b2

// Basis of Z^2 as alpha coordinate vectors.
std::vector<RatVec> z2_basis(const Algebra& a);

enum class Rigidity { H2Zero, Inconclusive };

// H^2 = 0 is sufficient for rigidity; a nonzero H^2 proves nothing.
Rigidity rigidity_certificate(const Algebra& a);

// Evaluates the quadratic 2-cocycle identity of a bilinear map h (given by
// alpha coordinates) at arbitrary vectors: (h(a,a)b)a + h(a^2,b)a + h(a^2 b,a)
// - a^2 h(b,a) - h(a,a)(ba) - h(a^2,ba). Used as the independent oracle for
// the linear assembly.
RatVec cocycle_identity_residual(const Algebra& alg, const RatVec& alpha, const RatVec& x,
                                 const RatVec& y);

} // namespace jorvar
