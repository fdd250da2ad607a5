#include "jorvar/catalog.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace jorvar {

namespace {

Rat half() { return Rat(1, 2); }

struct CatalogData {
    std::vector<std::string> order;
    std::map<std::string, CatalogEntry> entries;

    void add(const std::string& id, Algebra algebra, ExpectedInvariants expected) {
        algebra.set_label(id);
        order.push_back(id);
        entries.emplace(id, CatalogEntry{id, std::move(algebra), std::move(expected)});
    }
};

CatalogData build_catalog() {
    CatalogData cat;
    auto J = [](int dim) { return AlgebraBuilder(dim); };

    // dimension 1
    cat.add("Re", J(1).product(1, 1, {{1, 1}}).build(), {0, 0, 0, {}, true, true});
    cat.add("Rn", Algebra::zero(1), {1, 1, 1, {1}, true, false});

    // dimension 2, decomposable
    cat.add("Re+Re", J(2).product(1, 1, {{1, 1}}).product(2, 2, {{2, 1}}).build(),
            {0, 0, 0, {}, true, true});
    cat.add("Re+Rn", J(2).product(1, 1, {{1, 1}}).build(), {1, 1, 1, {1}, true, false});
    cat.add("Rn+Rn", Algebra::zero(2), {4, 2, 2, {2}, true, false});

    // dimension 2, indecomposable
    cat.add("B1", J(2).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).build(),
            {1, 0, 1, {1}, true, true});
    cat.add("B2", J(2).product(1, 1, {{1, 1}}).product(1, 2, {{2, half()}}).build(),
            {2, 0, 1, {1}, false, false});
    cat.add("B3", J(2).product(1, 1, {{2, 1}}).build(), {2, 1, 2, {1, 1}, true, false});
    cat.add("B4",
            J(2).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).product(2, 2, {{1, -1}}).build(),
            {0, 0, 0, {}, true, true});

    // dimension 3, semisimple (basis e1,e2,e3)
    cat.add("J1",
            J(3).product(1, 1, {{1, 1}}).product(2, 2, {{2, 1}}).product(3, 3, {{3, 1}}).build(),
            {0, 0, 0, {}, true, true});
    cat.add("J2",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(1, 2, {{2, 1}})
                .product(2, 2, {{1, -1}})
                .product(3, 3, {{3, 1}})
                .build(),
            {0, 0, 0, {}, true, true});
    cat.add("J3",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(1, 2, {{2, 1}})
                .product(1, 3, {{3, 1}})
                .product(2, 2, {{1, 1}})
                .product(3, 3, {{1, -1}})
                .build(),
            {1, 0, 0, {}, false, true});
    cat.add("J4",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(1, 2, {{2, 1}})
                .product(1, 3, {{3, 1}})
                .product(2, 2, {{1, -1}})
                .product(3, 3, {{1, -1}})
                .build(),
            {1, 0, 0, {}, false, true});
    cat.add("J5",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(1, 2, {{2, 1}})
                .product(1, 3, {{3, 1}})
                .product(2, 2, {{1, 1}})
                .product(3, 3, {{1, 1}})
                .build(),
            {1, 0, 0, {}, false, true});

    // one-dimensional radical, J_ss = Re+Re (J6: e1,e2,n1; J7/J9 keep the
    // printed direct-sum order e1,n1,e2)
    cat.add("J6", J(3).product(1, 1, {{1, 1}}).product(2, 2, {{2, 1}}).build(),
            {1, 1, 1, {1}, true, false});
    cat.add("J7",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, half()}}).product(3, 3, {{3, 1}}).build(),
            {2, 0, 1, {1}, false, false});
    cat.add("J8",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(2, 2, {{2, 1}})
                .product(1, 3, {{3, half()}})
                .product(2, 3, {{3, half()}})
                .build(),
            {2, 0, 1, {1}, false, true});
    cat.add("J9",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).product(3, 3, {{3, 1}}).build(),
            {1, 0, 1, {1}, true, true});

    // one-dimensional radical, J_ss = B4 (basis e1,e2,n1)
    cat.add("J10",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).product(2, 2, {{1, -1}}).build(),
            {1, 1, 1, {1}, true, false});
    cat.add("J11",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(1, 2, {{2, 1}})
                .product(2, 2, {{1, -1}})
                .product(1, 3, {{3, 1}})
                .build(),
            {2, 0, 1, {1}, false, true});

    // two-dimensional radical, nilpotency type (2) (basis e1,n1,n2)
    cat.add("J12",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, half()}}).product(1, 3, {{3, half()}}).build(),
            {6, 0, 2, {2}, false, false});
    cat.add("J13",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).product(1, 3, {{3, 1}}).build(),
            {4, 0, 2, {2}, true, true});
    cat.add("J14", J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, half()}}).build(),
            {3, 1, 2, {2}, false, false});
    cat.add("J15", J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, 1}}).build(),
            {2, 1, 2, {2}, true, false});
    cat.add("J16",
            J(3).product(1, 1, {{1, 1}}).product(1, 2, {{2, half()}}).product(1, 3, {{3, 1}}).build(),
            {3, 0, 2, {2}, false, false});
    cat.add("J17", J(3).product(1, 1, {{1, 1}}).build(), {4, 2, 2, {2}, true, false});

    // two-dimensional radical, nilpotency type (1,1) (basis e1,n1,n2 with
    // n1^2 = n2; J21 keeps the printed order n1,n2,e1)
    cat.add("J18",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(2, 2, {{3, 1}})
                .product(1, 2, {{2, 1}})
                .product(1, 3, {{3, 1}})
                .build(),
            {2, 0, 2, {1, 1}, true, true});
    cat.add("J19",
            J(3).product(1, 1, {{1, 1}}).product(2, 2, {{3, 1}}).product(1, 2, {{2, half()}}).build(),
            {2, 1, 2, {1, 1}, false, false});
    cat.add("J20",
            J(3)
                .product(1, 1, {{1, 1}})
                .product(2, 2, {{3, 1}})
                .product(1, 2, {{2, half()}})
                .product(1, 3, {{3, 1}})
                .build(),
            {2, 0, 2, {1, 1}, false, false});
    cat.add("J21", J(3).product(1, 1, {{2, 1}}).product(3, 3, {{3, 1}}).build(),
            {2, 1, 2, {1, 1}, true, false});

    // nilpotent (basis n1,n2,n3)
    cat.add("J22", Algebra::zero(3), {9, 3, 3, {3}, true, false});
    cat.add("J23", J(3).product(2, 3, {{1, 1}}).product(3, 3, {{2, 1}}).build(),
            {3, 1, 3, {1, 1, 1}, true, false});
    cat.add("J24", J(3).product(1, 1, {{3, 1}}).product(2, 2, {{3, 1}}).build(),
            {4, 1, 3, {2, 1}, true, false});
    cat.add("J25", J(3).product(1, 1, {{2, 1}}).build(), {5, 2, 3, {2, 1}, true, false});
    cat.add("J26", J(3).product(1, 2, {{3, 1}}).build(), {4, 1, 3, {2, 1}, true, false});

    return cat;
}

const CatalogData& catalog() {
    static const CatalogData cat = build_catalog();
    return cat;
}

} // namespace

const CatalogEntry& catalog_get(const std::string& id) {
    const auto& cat = catalog();
    auto it = cat.entries.find(id);
    if (it == cat.entries.end())
        throw UnknownId("unknown catalog id '" + id + "'");
    return it->second;
}

bool catalog_has(const std::string& id) { return catalog().entries.count(id) > 0; }

const std::vector<std::string>& catalog_ids() { return catalog().order; }

const std::vector<std::string>& jordan3_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 26; ++i)
            v.push_back("J" + std::to_string(i));
        return v;
    }();
    return ids;
}

const std::vector<std::string>& jor2_ids() {
    static const std::vector<std::string> ids = {"Re+Re", "Re+Rn", "Rn+Rn",
                                                 "B1",    "B2",    "B3",
                                                 "B4"};
    return ids;
}

const std::vector<std::string>& omega_ids() {
    static const std::vector<std::string> ids = {"J1", "J2", "J3", "J4",
                                                 "J5", "J7", "J12", "J20"};
    return ids;
}

const ComputedInvariants& computed_invariants(const std::string& id) {
    static std::map<std::string, ComputedInvariants> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(id);
    if (it != cache.end())
        return it->second;
    const Algebra& a = catalog_get(id).algebra;
    ComputedInvariants inv;
    inv.dim_der = derivation_dim(a);
    inv.dim_ann = static_cast<int>(annihilator(a).size());
    inv.dim_rad = static_cast<int>(radical(a).size());
    inv.rad_niltype = radical_niltype(a);
    inv.associative = is_associative(a).ok;
    inv.unital = find_unit(a).has_value();
    inv.power_dims = power_filtration(a).power_dims();
    inv.z2 = z2_dim(a);
    inv.b2 = b2_dim(a);
    inv.h2 = inv.z2 - inv.b2;
    return cache.emplace(id, std::move(inv)).first->second;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    auto seq = [&](const std::vector<int>& v) {
        os << "(";
        for (size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << ")";
    };
    os << "dim=" << dim << " rad=" << dim_rad << " ann=" << dim_ann << " der=" << dim_der
       << " radtype=";
    seq(rad_niltype);
    os << (associative ? " assoc" : " nonassoc") << (unital ? " unital" : " nonunital")
       << " powers=";
    seq(power_dims);
    os << " tracesig=" << trace_signature.str() << " sqform=";
    if (square_form)
        os << "(" << square_form->first << "," << square_form->second << ")";
    else
        os << "-";
    return os.str();
}

std::optional<std::pair<int, int>> square_form_invariant(const Algebra& a) {
    const int n = a.dim();
    auto filt = power_filtration(a);
    if (filt.powers.size() < 2 || filt.powers[1].rows() != 1)
        return std::nullopt;
    const RatMatrix& j2 = filt.powers[1];
    RatVec v = j2.row(0);
    // The form on J/J^2 is well-defined only when J^2 annihilates J.
    for (int i = 0; i < n; ++i) {
        RatVec ei(n, Rat(0));
        ei[i] = Rat(1);
        for (const Rat& x : multiply(a, v, ei))
            if (x != 0)
                return std::nullopt;
    }
    int pivot = -1;
    for (int j = 0; j < n; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    std::vector<int> complement;
    for (int j = 0; j < n; ++j)
        if (j != pivot)
            complement.push_back(j);
    const int m = static_cast<int>(complement.size());
    RatMatrix form(m, m);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            // products lie in J^2 = span(v); read off the coefficient
            form.at(r, s) = a.c(complement[r], complement[s], pivot) / v[pivot];
        }
    Signature sig = signature(form);
    int diff = sig.positive - sig.negative;
    if (diff < 0)
        diff = -diff;
    return std::make_pair(sig.positive + sig.negative, diff);
}

Fingerprint fingerprint(const Algebra& a) {
    auto verdict = is_jordan(a);
    if (!verdict.ok)
        throw NotJordan("fingerprint requires a Jordan algebra");
    Fingerprint f;
    f.dim = a.dim();
    f.dim_rad = static_cast<int>(radical(a).size());
    f.dim_ann = static_cast<int>(annihilator(a).size());
    f.dim_der = derivation_dim(a);
    f.rad_niltype = radical_niltype(a);
    f.associative = is_associative(a).ok;
    f.unital = find_unit(a).has_value();
    f.power_dims = power_filtration(a).power_dims();
    f.trace_signature = signature(trace_form_gram(a));
    f.square_form = square_form_invariant(a);
    return f;
}

DistinctnessReport pairwise_distinct_audit() {
    std::vector<std::pair<std::string, Algebra>> entries;
    for (const auto& id : jordan3_ids())
        entries.emplace_back(id, catalog_get(id).algebra);
    return pairwise_distinct_audit(entries);
}

DistinctnessReport pairwise_distinct_audit(const std::vector<std::pair<std::string, Algebra>>& entries) {
    DistinctnessReport report;
    for (const auto& [id, algebra] : entries)
        report.fingerprints.emplace_back(id, fingerprint(algebra));
    for (size_t i = 0; i < report.fingerprints.size(); ++i)
        for (size_t j = i + 1; j < report.fingerprints.size(); ++j)
            if (report.fingerprints[i].second == report.fingerprints[j].second)
                report.collisions.emplace_back(report.fingerprints[i].first,
                                               report.fingerprints[j].first);
    report.ok = report.collisions.empty();
    return report;
}

IsoWitness make_iso_witness(const std::string& source_id, const std::string& target_id,
                            RatMatrix matrix) {
    return IsoWitness{source_id, target_id, catalog_get(source_id).algebra, std::move(matrix)};
}

bool verify_iso(const IsoWitness& w) {
    const Algebra& target = catalog_get(w.target_id).algebra;
    if (w.source.dim() != target.dim())
        return false;
    Algebra moved = change_of_basis(w.source, w.matrix); // throws SingularMatrix
    return moved.tensor() == target.tensor();
}

Algebra nilpotent_21(const Rat& alpha, const Rat& beta, const Rat& gamma) {
    return AlgebraBuilder(3)
        .product(1, 1, {{3, alpha}})
        .product(2, 2, {{3, beta}})
        .product(1, 2, {{3, gamma}})
        .build("J(alpha,beta,gamma)");
}

Classification21 classify_nilpotent_21(const Rat& alpha, const Rat& beta, const Rat& gamma) {
    if (alpha == 0 && beta == 0 && gamma == 0)
        throw AllZero("classify_nilpotent_21: at least one coefficient must be nonzero");
    Algebra source = nilpotent_21(alpha, beta, gamma);
    std::string source_id = "J(" + to_string(alpha) + "," + to_string(beta) + "," +
                            to_string(gamma) + ")";
    auto witness = [&](const std::string& target, RatMatrix m) {
        return IsoWitness{source_id, target, source, std::move(m)};
    };
    auto column = [](RatMatrix& m, int j, std::initializer_list<Rat> entries) {
        int i = 0;
        for (const Rat& x : entries)
            m.at(i++, j) = x;
    };

    Classification21 out;
    if (beta == 0) {
        if (gamma != 0) {
            out.id = "J26";
            RatMatrix m(3, 3);
            column(m, 0, {Rat(1), alpha / (2 * gamma), Rat(0)});
            column(m, 1, {Rat(0), Rat(1), Rat(0)});
            column(m, 2, {Rat(0), Rat(0), Rat(1) / gamma});
            out.witness = witness("J26", std::move(m));
        } else {
            out.id = "J25";
            RatMatrix m(3, 3);
            column(m, 0, {Rat(1), Rat(0), Rat(0)});
            column(m, 1, {Rat(0), Rat(0), Rat(1)});
            column(m, 2, {Rat(0), Rat(1) / alpha, Rat(0)});
            out.witness = witness("J25", std::move(m));
        }
        return out;
    }

    Rat delta = gamma * gamma - alpha * beta;
    if (delta > 0) {
        out.id = "J26";
        auto s = rat_sqrt_exact(delta);
        if (!s) {
            out.witness_omitted_irrational_sqrt = true;
            return out;
        }
        RatMatrix m(3, 3);
        Rat g2s = gamma / (2 * *s);
        column(m, 0, {half() + g2s, -half() + g2s, Rat(0)});
        column(m, 1, {beta / (2 * *s), beta / (2 * *s), Rat(0)});
        column(m, 2, {Rat(0), Rat(0), beta / (2 * delta)});
        out.witness = witness("J26", std::move(m));
    } else if (delta < 0) {
        out.id = "J24";
        auto s = rat_sqrt_exact(-delta);
        if (!s) {
            out.witness_omitted_irrational_sqrt = true;
            return out;
        }
        RatMatrix m(3, 3);
        column(m, 0, {Rat(1), gamma / *s, Rat(0)});
        column(m, 1, {Rat(0), beta / *s, Rat(0)});
        column(m, 2, {Rat(0), Rat(0), -beta / delta});
        out.witness = witness("J24", std::move(m));
    } else {
        out.id = "J25";
        RatMatrix m(3, 3);
        if (gamma == 0) {
            // alpha beta = 0 with beta != 0 forces alpha = 0
            column(m, 0, {Rat(0), Rat(0), Rat(1)});
            column(m, 1, {Rat(1), Rat(0), Rat(0)});
            column(m, 2, {Rat(0), Rat(1) / beta, Rat(0)});
        } else {
            // Delta = 0 and gamma != 0 force alpha = gamma^2/beta != 0
            column(m, 0, {Rat(1), Rat(0), Rat(1)});
            column(m, 1, {gamma / alpha, Rat(0), Rat(0)});
            column(m, 2, {Rat(0), Rat(1) / alpha, Rat(0)});
        }
        out.witness = witness("J25", std::move(m));
    }
    return out;
}

} // namespace jorvar
