#pragma once

#include "jorvar/cohomology.hpp"
#include "jorvar/invariants.hpp"

#include <optional>

namespace jorvar {

// Invariants as the classification tables print them.
struct ExpectedInvariants {
    int dim_aut = 0;
    int dim_ann = 0;
    int dim_rad = 0;
    std::vector<int> rad_niltype; // empty when the radical is zero
    bool associative = false;
    bool unital = false;
};

struct CatalogEntry {
    std::string id;
    Algebra algebra;
    ExpectedInvariants expected;
};

const CatalogEntry& catalog_get(const std::string& id); // throws UnknownId
bool catalog_has(const std::string& id);

// All embedded algebras, dimension 1 through 3, in stable order.
const std::vector<std::string>& catalog_ids();
// The 26 three-dimensional algebras J1..J26.
const std::vector<std::string>& jordan3_ids();
// The seven two-dimensional orbits (indecomposables plus direct sums).
const std::vector<std::string>& jor2_ids();
// The rigid set of the three-dimensional variety.
const std::vector<std::string>& omega_ids();

// Everything the audits need, computed once per catalog entry.
struct ComputedInvariants {
    int dim_der = 0;
    int dim_ann = 0;
    int dim_rad = 0;
    std::vector<int> rad_niltype;
    bool associative = false;
    bool unital = false;
    std::vector<int> power_dims;
    int z2 = 0;
    int b2 = 0;
    int h2 = 0;
};

const ComputedInvariants& computed_invariants(const std::string& id);

struct Fingerprint {
    int dim = 0;
    int dim_rad = 0;
    int dim_ann = 0;
    int dim_der = 0;
    std::vector<int> rad_niltype;
    bool associative = false;
    bool unital = false;
    std::vector<int> power_dims;
    Signature trace_signature;
    // (rank, |pos - neg|) of the square form on J/J^2 when dim J^2 = 1 and
    // J^2 annihilates J; separates the definite from the hyperbolic case.
    std::optional<std::pair<int, int>> square_form;

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const Algebra& a); // throws NotJordan

std::optional<std::pair<int, int>> square_form_invariant(const Algebra& a);

struct DistinctnessReport {
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> collisions;
    std::vector<std::pair<std::string, Fingerprint>> fingerprints;
};

// Pairwise distinctness of fingerprints; defaults to J1..J26.
DistinctnessReport pairwise_distinct_audit();
DistinctnessReport pairwise_distinct_audit(const std::vector<std::pair<std::string, Algebra>>& entries);

struct IsoWitness {
    std::string source_id; // descriptive; need not be a catalog id
    std::string target_id; // catalog id
    Algebra source;
    RatMatrix matrix; // column j = image of source basis vector j in target coordinates
};

IsoWitness make_iso_witness(const std::string& source_id, const std::string& target_id,
                            RatMatrix matrix);

// True iff pushing the source tensor through the matrix yields exactly the
// target's catalog constants.
bool verify_iso(const IsoWitness& w); // throws SingularMatrix

// The nilpotent algebra with N1^2 = alpha N3, N2^2 = beta N3, N1 N2 = gamma N3.
Algebra nilpotent_21(const Rat& alpha, const Rat& beta, const Rat& gamma);

struct Classification21 {
    std::string id; // "J24", "J25" or "J26"
    std::optional<IsoWitness> witness;
    bool witness_omitted_irrational_sqrt = false;
};

// Classifies nilpotent_21(alpha,beta,gamma) by the sign of Delta = gamma^2 -
// alpha*beta and returns the explicit isomorphism when it stays rational.
Classification21 classify_nilpotent_21(const Rat& alpha, const Rat& beta, const Rat& gamma);

} // namespace jorvar
