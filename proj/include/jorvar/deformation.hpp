#pragma once

#include "jorvar/catalog.hpp"
#include "jorvar/poly.hpp"

#include <map>

namespace jorvar {

using PolyMatrix = Mat<UniPoly>;
using RfMatrix = Mat<RationalFunction>;

RfMatrix to_rf(const PolyMatrix& m);
PolyMatrix poly_identity_scaled(int n, const UniPoly& entry); // entry * I

enum class WitnessProvenance { Published, Derived, Scaling };

// A basis-change curve g(t): column j is the j-th new basis vector written in
// the source's catalog basis. det g(t) must be a nonzero polynomial.
struct Witness {
    std::string source;
    std::string target;
    PolyMatrix g;
    WitnessProvenance provenance = WitnessProvenance::Derived;
};

// Structure constants as rational functions of t; symmetric in the first two
// indices.
class AlgebraFamily {
public:
    AlgebraFamily(int dim, std::vector<RationalFunction> tensor);

    int dim() const { return dim_; }
    const RationalFunction& c(int i, int j, int k) const {
        return c_[(size_t(i) * dim_ + j) * dim_ + k];
    }

    // Exact specialization at a rational point; throws when some entry's
    // denominator vanishes there.
    Algebra specialize(const Rat& t0) const;

private:
    int dim_;
    std::vector<RationalFunction> c_;
};

// Structure constants of the source in the moving basis g(t): the pull-back
// x ._t y = g(t)^{-1}( g(t)x * g(t)y ), computed symbolically. At any t0 with
// det g(t0) != 0 the specialization is isomorphic to the source.
AlgebraFamily conjugate_family(const Algebra& a, const PolyMatrix& g); // IdenticallySingular

// Entrywise limit at t = 0. The result is checked against the Jordan system
// (the Jordan locus is closed, so a failure is a bug, not bad input).
Algebra limit_algebra(const AlgebraFamily& f); // PoleAtZero, NotJordanAtLimit

struct ArrowCheck {
    bool ok = false;
    std::string reason;
};

// True iff the limit of the conjugated family lands exactly on the target's
// catalog constants.
ArrowCheck verify_arrow(const Witness& w);

Witness scaling_witness(const std::string& source_id); // g = t*I, target J22/Rn+Rn/Rn

// The explicit basis-change curves from the published classification.
const std::vector<Witness>& published_witnesses();
// Verified curves for the arrows the literature states without printing one.
const std::vector<Witness>& derived_witness_registry();
// Witnesses for the dimension-2 closure picture.
const std::vector<Witness>& jor2_witness_registry();

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::string source;
    std::string target;
    std::vector<AuditCheck> checks; // the seven necessary conditions
    bool all_pass = false;
};

// Necessary conditions for source -> target: strict automorphism
// dimension increase, radical/annihilator monotonicity, power dimensions for
// r = 2,3, associativity preservation, and 2-cocycle monotonicity.
AuditReport necessary_conditions_audit(const std::string& source_id,
                                       const std::string& target_id); // UnknownId

enum class ArrowStatus { VerifiedWitness, ClaimedByReference, AuditOnly };

struct Arrow {
    std::string source;
    std::string target;
    ArrowStatus status = ArrowStatus::AuditOnly;
    std::optional<Witness> witness;
};

struct ClosureGraph {
    std::vector<std::string> nodes;
    std::vector<Arrow> edges;
    std::vector<std::string> rigid_set;

    bool has_edge(const std::string& src, const std::string& dst) const;
    std::vector<std::string> successors(const std::string& node) const;
};

// The verified sub-order of the dimension-3 orbit closure: the explicit
// witnesses, the scaling arrows to the zero algebra, and the cited arrows
// (upgraded to verified when the registry has a curve for them). Every edge
// must pass the necessary-conditions audit.
ClosureGraph build_closure_graph(bool use_derived_registry = true); // AuditFailure

// The dimension-2 picture: seven orbits, three maximal nodes.
ClosureGraph build_jor2_graph();

struct CoveragePath {
    std::string node;
    std::vector<std::string> path; // from a rigid ancestor down to the node
};

struct CoverageReport {
    bool ok = false;
    std::vector<CoveragePath> covered;          // one path per non-rigid node
    std::vector<std::string> uncovered;         // coverage gaps
    std::vector<std::string> rigidity_failures; // rigid nodes some audit admits
};

// Every node outside the rigid set must be reachable from a rigid node; no
// rigid node may admit an incoming arrow that survives the full audit.
CoverageReport rigid_coverage_check(const ClosureGraph& g);

// Bounded deterministic search for a degeneration witness: candidates are
// permutation-spine matrices with monomial entries t^d plus up to two extra
// coeff*t^d entries. Returns the first curve that verifies, or nullopt.
std::optional<Witness> derive_witness_search(const std::string& source_id,
                                             const std::string& target_id, int degree_bound,
                                             const std::vector<Rat>& coefficients,
                                             int max_extra_entries = 2);

std::string to_dot(const ClosureGraph& g);

std::string audit_report_text(const AuditReport& r);

} // namespace jorvar
