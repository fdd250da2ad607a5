#pragma once

#include "jorvar/algebra.hpp"

#include <map>
#include <optional>

namespace jorvar {

// Chains of powers J^r and of the lower central series J^<r>, as canonical
// RREF row bases, computed until stabilization. niltype is present iff the
// lower central series reaches zero.
struct PowerFiltration {
    std::vector<RatMatrix> powers; // powers[r-1] = basis of J^r
    std::vector<RatMatrix> lcs;    // lcs[r-1] = basis of J^<r>
    std::optional<std::vector<int>> niltype;

    std::vector<int> power_dims() const;
    std::vector<int> lcs_dims() const;
    bool nilpotent() const { return niltype.has_value(); }
};

PowerFiltration power_filtration(const Algebra& a);

// Basis of {x : x * e_i = 0 for all i}.
std::vector<RatVec> annihilator(const Algebra& a);

// Gram matrix of the trace form (x,y) -> trace(L_{x*y}); its kernel realizes
// the radical in characteristic 0.
RatMatrix trace_form_gram(const Algebra& a);

// Basis of the maximal nilpotent ideal. Requires is_jordan(a); the returned
// subspace is re-verified to be an ideal and nilpotent.
std::vector<RatVec> radical(const Algebra& a);

// Dimension of {D : D(xy) = D(x)y + x D(y)}.
int derivation_dim(const Algebra& a);

// dim^2 - derivation_dim: the dimension of the GL-orbit of the structure
// tensor.
int orbit_dimension(const Algebra& a);

bool verify_idempotent(const Algebra& a, const RatVec& e);

struct PeirceContainment {
    std::string name;
    bool holds = false;
};

struct PeirceDecomposition {
    RatVec idempotent;
    RatMatrix p1;     // eigenvalue 1
    RatMatrix p_half; // eigenvalue 1/2
    RatMatrix p0;     // eigenvalue 0
    std::vector<PeirceContainment> containments;

    std::array<int, 3> dims() const {
        return {p1.rows(), p_half.rows(), p0.rows()};
    }
    bool all_containments_hold() const {
        for (const auto& c : containments)
            if (!c.holds)
                return false;
        return true;
    }
};

// Exact eigenspaces of multiplication by an idempotent for eigenvalues
// 1, 1/2, 0. Throws NotIdempotent; throws EigenspaceGap when the three
// eigenspaces do not span (which signals non-Jordan input).
PeirceDecomposition peirce_decompose(const Algebra& a, const RatVec& e);

// Refined decomposition for a family of pairwise orthogonal idempotents
// e_1..e_m (indices 1..m; index 0 stands for the formal complement of their
// sum). Components are keyed by (i,j) with i <= j. The returned flag reports
// whether all product containments of the refined Peirce table hold.
struct RefinedPeirce {
    std::map<std::pair<int, int>, RatMatrix> components;
    bool table_holds = false;
    bool spans = false;
};

RefinedPeirce refined_peirce(const Algebra& a, const std::vector<RatVec>& idempotents);

// Nilpotency type of the radical, as the tables print it; empty for
// semisimple algebras.
std::vector<int> radical_niltype(const Algebra& a);

} // namespace jorvar
