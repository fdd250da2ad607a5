#pragma once

#include "jorvar/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jorvar {

// Finite-dimensional commutative algebra over the rationals, given by its
// structure constants: e_i * e_j = sum_k c(i,j,k) e_k. The tensor is stored
// in full and must satisfy c(i,j,k) == c(j,i,k). Indices are 0-based in code;
// all reporting is 1-based to match the usual basis labels e_1..e_n.
class Algebra {
public:
    Algebra(int dim, std::vector<Rat> tensor, std::string label = "");

    static Algebra zero(int dim, std::string label = "");

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const Rat& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    const std::vector<Rat>& tensor() const { return c_; }

    // Product of basis vectors e_i * e_j as a coordinate vector.
    RatVec basis_product(int i, int j) const;

    bool operator==(const Algebra& rhs) const { return dim_ == rhs.dim_ && c_ == rhs.c_; }
    bool operator!=(const Algebra& rhs) const { return !(*this == rhs); }

private:
    size_t idx(int i, int j, int k) const {
        return (size_t(i) * dim_ + j) * dim_ + k;
    }

    int dim_;
    std::vector<Rat> c_;
    std::string label_;
};

// Convenience builder: collect the nonzero products with i <= j, then the
// symmetric completion happens at build time.
class AlgebraBuilder {
public:
    explicit AlgebraBuilder(int dim) : dim_(dim), c_(size_t(dim) * dim * dim, Rat(0)) {}

    // e_i * e_j = sum of coeff * e_k over the given terms (1-based indices).
    AlgebraBuilder& product(int i, int j, std::vector<std::pair<int, Rat>> terms);

    Algebra build(std::string label = "") const;

private:
    int dim_;
    std::vector<Rat> c_;
};

RatVec multiply(const Algebra& a, const RatVec& x, const RatVec& y);

struct JordanVerdict {
    bool ok = true;
    // 1-based (i,j,k,l,p) of the first violated linearized-identity equation.
    std::array<int, 5> tuple{0, 0, 0, 0, 0};
    Rat residual;
};

// Checks the full structure-constant polynomial system of the linearized
// Jordan identity over all basis 4-tuples.
JordanVerdict is_jordan(const Algebra& a);

struct AssocVerdict {
    bool ok = true;
    std::array<int, 3> triple{0, 0, 0}; // 1-based, first non-vanishing associator
};

AssocVerdict is_associative(const Algebra& a);

// The two-sided identity element, when one exists (unique in a commutative
// algebra).
std::optional<RatVec> find_unit(const Algebra& a);

// The algebra with product x *_g y = g(g^{-1}x * g^{-1}y); column j of g is
// the image of basis vector e_j. Pushing a's structure tensor through an
// isomorphism given by matrix g lands on the target's tensor.
Algebra change_of_basis(const Algebra& a, const RatMatrix& g);

Algebra direct_sum(const Algebra& a, const Algebra& b);

// J^# = J + k1, the unit adjoined as the last basis vector.
Algebra unitalize(const Algebra& a);

// Sub-algebra on a given list of independent vectors; throws if the span is
// not closed under the product.
Algebra restrict_to_span(const Algebra& a, const std::vector<RatVec>& basis);

} // namespace jorvar
