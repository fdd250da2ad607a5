#include "jorvar/deformation.hpp"

#include <algorithm>
#include <sstream>

namespace jorvar {

RfMatrix to_rf(const PolyMatrix& m) {
    RfMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = RationalFunction(m.at(i, j));
    return out;
}

PolyMatrix poly_identity_scaled(int n, const UniPoly& entry) {
    PolyMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        g.at(i, i) = entry;
    return g;
}

AlgebraFamily::AlgebraFamily(int dim, std::vector<RationalFunction> tensor)
    : dim_(dim), c_(std::move(tensor)) {
    if (dim_ < 1)
        throw Error("family dimension must be at least 1");
    if (c_.size() != size_t(dim_) * dim_ * dim_)
        throw DimensionMismatch("family tensor has wrong size");
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) != c(j, i, k))
                    throw NotSymmetric("family constants are not commutative");
}

Algebra AlgebraFamily::specialize(const Rat& t0) const {
    std::vector<Rat> tensor(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        auto v = c_[i].eval(t0);
        if (!v)
            throw Error("family entry has a pole at t = " + to_string(t0));
        tensor[i] = *v;
    }
    return Algebra(dim_, std::move(tensor));
}

AlgebraFamily conjugate_family(const Algebra& a, const PolyMatrix& g) {
    const int n = a.dim();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("conjugate_family: matrix shape mismatch");
    RfMatrix gf = to_rf(g);
    if (determinant(gf).is_zero())
        throw IdenticallySingular("conjugate_family: det g(t) is identically zero");
    RfMatrix ginv = inverse(gf);

    std::vector<RationalFunction> tensor(size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            // product of columns i and j of g, in source coordinates
            std::vector<RationalFunction> w(n, RationalFunction());
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const UniPoly& gp = g.at(p, i);
                    const UniPoly& gq = g.at(q, j);
                    if (gp.is_zero() || gq.is_zero())
                        continue;
                    RationalFunction f(gp * gq);
                    for (int k = 0; k < n; ++k) {
                        const Rat& c = a.c(p, q, k);
                        if (c != 0)
                            w[k] = w[k] + f * RationalFunction(c);
                    }
                }
            // coordinates in the moving basis
            for (int k = 0; k < n; ++k) {
                RationalFunction v;
                for (int s = 0; s < n; ++s)
                    if (!ginv.at(k, s).is_zero() && !w[s].is_zero())
                        v = v + ginv.at(k, s) * w[s];
                tensor[(size_t(i) * n + j) * n + k] = v;
                tensor[(size_t(j) * n + i) * n + k] = v;
            }
        }
    return AlgebraFamily(n, std::move(tensor));
}

Algebra limit_algebra(const AlgebraFamily& f) {
    const int n = f.dim();
    std::vector<Rat> tensor(size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                tensor[(size_t(i) * n + j) * n + k] = f.c(i, j, k).limit_at_zero();
    Algebra limit(n, std::move(tensor));
    if (!is_jordan(limit).ok)
        throw NotJordanAtLimit("limit of a Jordan family violates the Jordan system");
    return limit;
}

ArrowCheck verify_arrow(const Witness& w) {
    const Algebra& source = catalog_get(w.source).algebra;
    const Algebra& target = catalog_get(w.target).algebra;
    if (source.dim() != target.dim())
        return {false, "source and target dimensions differ"};
    try {
        AlgebraFamily family = conjugate_family(source, w.g);
        Algebra limit = limit_algebra(family);
        if (limit.tensor() != target.tensor())
            return {false, "limit differs from target constants"};
    } catch (const PoleAtZero& e) {
        return {false, std::string("witness does not define a degeneration: ") + e.what()};
    }
    return {true, ""};
}

Witness scaling_witness(const std::string& source_id) {
    const Algebra& a = catalog_get(source_id).algebra;
    std::string target;
    switch (a.dim()) {
    case 1:
        target = "Rn";
        break;
    case 2:
        target = "Rn+Rn";
        break;
    case 3:
        target = "J22";
        break;
    default:
        throw UnknownId("no zero-algebra catalog entry in dimension " +
                        std::to_string(a.dim()));
    }
    return Witness{source_id, target, poly_identity_scaled(a.dim(), UniPoly::t()),
                   WitnessProvenance::Scaling};
}

namespace {

UniPoly P(std::initializer_list<Rat> coeffs) { return UniPoly(coeffs); }

PolyMatrix columns3(std::array<std::array<UniPoly, 3>, 3> cols) {
    PolyMatrix g(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            g.at(i, j) = cols[j][i];
    return g;
}

PolyMatrix columns2(std::array<std::array<UniPoly, 2>, 2> cols) {
    PolyMatrix g(2, 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i)
            g.at(i, j) = cols[j][i];
    return g;
}

UniPoly zero_p() { return UniPoly(); }
UniPoly one_p() { return UniPoly(Rat(1)); }
UniPoly t_p(int d = 1) { return UniPoly::t(d); }

} // namespace

const std::vector<Witness>& published_witnesses() {
    static const std::vector<Witness> ws = [] {
        std::vector<Witness> v;
        Rat h(1, 2);
        // J3 -> J8: A = e1/2 + e2/2, B = e1/2 - e2/2, C = t e3
        v.push_back({"J3", "J8",
                     columns3({{{P({h}), P({h}), zero_p()},
                                {P({h}), P({-h}), zero_p()},
                                {zero_p(), zero_p(), t_p()}}}),
                     WitnessProvenance::Published});
        // J4 -> J11: A = e1, B = e2, C = t e3
        v.push_back({"J4", "J11",
                     columns3({{{one_p(), zero_p(), zero_p()},
                                {zero_p(), one_p(), zero_p()},
                                {zero_p(), zero_p(), t_p()}}}),
                     WitnessProvenance::Published});
        // J5 -> J19: A = e1/2 - e2/2, B = t e3, C = (t^2/2)(e1 + e2)
        v.push_back({"J5", "J19",
                     columns3({{{P({h}), P({-h}), zero_p()},
                                {zero_p(), zero_p(), t_p()},
                                {UniPoly::t(2, h), UniPoly::t(2, h), zero_p()}}}),
                     WitnessProvenance::Published});
        // J15 -> J23 (basis e1,n1,n2): A = t^2 n2, B = t n1 - t n2, C = t e1 + n1 + n2
        v.push_back({"J15", "J23",
                     columns3({{{zero_p(), zero_p(), t_p(2)},
                                {zero_p(), t_p(), UniPoly::t(1, Rat(-1))},
                                {t_p(), one_p(), one_p()}}}),
                     WitnessProvenance::Published});
        // J21 -> J24 (basis n1,n2,e1): A = t n1, B = t^2 e1 - n2, C = t^2 n2
        v.push_back({"J21", "J24",
                     columns3({{{t_p(), zero_p(), zero_p()},
                                {zero_p(), P({Rat(-1)}), t_p(2)},
                                {zero_p(), t_p(2), zero_p()}}}),
                     WitnessProvenance::Published});
        return v;
    }();
    return ws;
}

const std::vector<Witness>& derived_witness_registry() {
    static const std::vector<Witness> ws = [] {
        std::vector<Witness> v;
        auto diag = [](UniPoly a, UniPoly b, UniPoly c) {
            PolyMatrix g(3, 3);
            g.at(0, 0) = std::move(a);
            g.at(1, 1) = std::move(b);
            g.at(2, 2) = std::move(c);
            return g;
        };
        // scale the 1-dimensional summand in the printed basis position
        v.push_back({"J1", "J6", diag(one_p(), one_p(), t_p()), WitnessProvenance::Derived});
        v.push_back({"J2", "J9", diag(one_p(), t_p(), one_p()), WitnessProvenance::Derived});
        v.push_back({"J2", "J10", diag(one_p(), one_p(), t_p()), WitnessProvenance::Derived});
        v.push_back({"J10", "J15", diag(one_p(), t_p(), one_p()), WitnessProvenance::Derived});
        v.push_back({"J18", "J13", diag(one_p(), t_p(), one_p()), WitnessProvenance::Derived});
        v.push_back({"J20", "J16", diag(one_p(), t_p(), one_p()), WitnessProvenance::Derived});
        // J6 (e1,e2,n1) -> J21 (n1,n2,e1): N1 = t(e2+n1), N2 = t^2 e2, E = e1
        v.push_back({"J6", "J21",
                     columns3({{{zero_p(), t_p(), t_p()},
                                {zero_p(), t_p(2), zero_p()},
                                {one_p(), zero_p(), zero_p()}}}),
                     WitnessProvenance::Derived});
        // J9 (e1,n1,e2) -> J18: E = e1+e2, N1 = t(e2+n1), N2 = t^2 e2
        v.push_back({"J9", "J18",
                     columns3({{{one_p(), zero_p(), one_p()},
                                {zero_p(), t_p(), t_p()},
                                {zero_p(), zero_p(), t_p(2)}}}),
                     WitnessProvenance::Derived});
        // J23 -> J26: A = t n2, B = t n3, C = t^2 n1
        v.push_back({"J23", "J26",
                     columns3({{{zero_p(), t_p(), zero_p()},
                                {zero_p(), zero_p(), t_p()},
                                {t_p(2), zero_p(), zero_p()}}}),
                     WitnessProvenance::Derived});
        // J26 -> J25: A = t(n1+n2), B = 2t^2 n3, C = t^2 n2
        v.push_back({"J26", "J25",
                     columns3({{{t_p(), t_p(), zero_p()},
                                {zero_p(), zero_p(), UniPoly::t(2, Rat(2))},
                                {zero_p(), t_p(2), zero_p()}}}),
                     WitnessProvenance::Derived});
        // J8 (e1,e2,n1) -> J14 (e1,n1,n2): A = e1, B = n1, C = t e2
        v.push_back({"J8", "J14",
                     columns3({{{one_p(), zero_p(), zero_p()},
                                {zero_p(), zero_p(), one_p()},
                                {zero_p(), t_p(), zero_p()}}}),
                     WitnessProvenance::Derived});
        // J7 (e1,n1,e2) -> J17 (e1,n1,n2): A = e2, B = t e1, C = t n1
        v.push_back({"J7", "J17",
                     columns3({{{zero_p(), zero_p(), one_p()},
                                {t_p(), zero_p(), zero_p()},
                                {zero_p(), t_p(), zero_p()}}}),
                     WitnessProvenance::Derived});
        return v;
    }();
    return ws;
}

const std::vector<Witness>& jor2_witness_registry() {
    static const std::vector<Witness> ws = [] {
        std::vector<Witness> v;
        // Re+Re -> Re+Rn: scale the second summand
        v.push_back({"Re+Re", "Re+Rn",
                     columns2({{{one_p(), zero_p()}, {zero_p(), t_p()}}}),
                     WitnessProvenance::Derived});
        // Re+Re -> B1: A = e1+e2, B = t e2
        v.push_back({"Re+Re", "B1",
                     columns2({{{one_p(), one_p()}, {zero_p(), t_p()}}}),
                     WitnessProvenance::Derived});
        // B4 -> B1: A = e1, B = t e2
        v.push_back({"B4", "B1",
                     columns2({{{one_p(), zero_p()}, {zero_p(), t_p()}}}),
                     WitnessProvenance::Derived});
        // Re+Rn -> B3: A = t(e+n), B = t^2 e
        v.push_back({"Re+Rn", "B3",
                     columns2({{{t_p(), t_p()}, {t_p(2), zero_p()}}}),
                     WitnessProvenance::Derived});
        // B1 -> B3: A = t(e1+n1), B = t^2(e1+2n1)
        v.push_back({"B1", "B3",
                     columns2({{{t_p(), t_p()}, {t_p(2), UniPoly::t(2, Rat(2))}}}),
                     WitnessProvenance::Derived});
        return v;
    }();
    return ws;
}

namespace {

AuditCheck make_check(const std::string& name, bool pass, std::string detail) {
    return AuditCheck{name, pass, std::move(detail)};
}

int power_dim(const std::vector<int>& dims, int r) {
    // dims lists dim J^1, dim J^2, ... until stabilization
    if (r <= static_cast<int>(dims.size()))
        return dims[r - 1];
    return dims.back();
}

} // namespace

AuditReport necessary_conditions_audit(const std::string& source_id,
                                       const std::string& target_id) {
    const ComputedInvariants& s = computed_invariants(source_id);
    const ComputedInvariants& t = computed_invariants(target_id);
    AuditReport r;
    r.source = source_id;
    r.target = target_id;

    std::ostringstream d1;
    d1 << "dim Der " << s.dim_der << " < " << t.dim_der;
    r.checks.push_back(make_check("(i) automorphism dimension strictly increases",
                                  s.dim_der < t.dim_der, d1.str()));
    std::ostringstream d2;
    d2 << "dim Rad " << s.dim_rad << " <= " << t.dim_rad;
    r.checks.push_back(
        make_check("(ii) radical dimension does not decrease", s.dim_rad <= t.dim_rad, d2.str()));
    std::ostringstream d3;
    d3 << "dim Ann " << s.dim_ann << " <= " << t.dim_ann;
    r.checks.push_back(make_check("(iii) annihilator dimension does not decrease",
                                  s.dim_ann <= t.dim_ann, d3.str()));
    int s2 = power_dim(s.power_dims, 2), t2 = power_dim(t.power_dims, 2);
    std::ostringstream d4;
    d4 << "dim J^2 " << s2 << " >= " << t2;
    r.checks.push_back(make_check("(iv) square dimension does not increase, r=2", s2 >= t2,
                                  d4.str()));
    int s3 = power_dim(s.power_dims, 3), t3 = power_dim(t.power_dims, 3);
    std::ostringstream d5;
    d5 << "dim J^3 " << s3 << " >= " << t3;
    r.checks.push_back(
        make_check("(iv) cube dimension does not increase, r=3", s3 >= t3, d5.str()));
    bool identity_ok = !s.associative || t.associative;
    std::ostringstream d6;
    d6 << "source " << (s.associative ? "associative" : "non-associative") << ", target "
       << (t.associative ? "associative" : "non-associative");
    r.checks.push_back(
        make_check("(vi) polynomial identities persist (associativity)", identity_ok, d6.str()));
    std::ostringstream d7;
    d7 << "dim Z2 " << s.z2 << " <= " << t.z2;
    r.checks.push_back(
        make_check("(vii) 2-cocycle dimension does not decrease", s.z2 <= t.z2, d7.str()));

    r.all_pass = true;
    for (const auto& c : r.checks)
        r.all_pass = r.all_pass && c.pass;
    return r;
}

bool ClosureGraph::has_edge(const std::string& src, const std::string& dst) const {
    for (const auto& e : edges)
        if (e.source == src && e.target == dst)
            return true;
    return false;
}

std::vector<std::string> ClosureGraph::successors(const std::string& node) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
        if (e.source == node)
            out.push_back(e.target);
    return out;
}

namespace {

ClosureGraph build_graph(const std::vector<std::string>& nodes,
                         const std::vector<std::string>& rigid,
                         const std::vector<Witness>& verified,
                         const std::vector<std::pair<std::string, std::string>>& cited,
                         const std::vector<Witness>& registry, bool use_registry,
                         const std::string& zero_id) {
    ClosureGraph g;
    g.nodes = nodes;
    g.rigid_set = rigid;

    auto audit_edge = [](const std::string& s, const std::string& t) {
        AuditReport r = necessary_conditions_audit(s, t);
        if (!r.all_pass)
            throw AuditFailure("necessary-conditions audit failed on edge " + s + " -> " + t);
    };
    auto add_verified = [&](const Witness& w) {
        audit_edge(w.source, w.target);
        auto check = verify_arrow(w);
        if (!check.ok)
            throw InternalError("registered witness " + w.source + " -> " + w.target +
                                " does not verify: " + check.reason);
        g.edges.push_back({w.source, w.target, ArrowStatus::VerifiedWitness, w});
    };

    for (const auto& w : verified)
        add_verified(w);
    for (const auto& node : nodes) {
        if (node == zero_id)
            continue;
        add_verified(scaling_witness(node));
    }
    for (const auto& [s, t] : cited) {
        const Witness* found = nullptr;
        if (use_registry)
            for (const auto& w : registry)
                if (w.source == s && w.target == t) {
                    found = &w;
                    break;
                }
        if (found) {
            add_verified(*found);
        } else {
            audit_edge(s, t);
            g.edges.push_back({s, t, ArrowStatus::ClaimedByReference, std::nullopt});
        }
    }
    return g;
}

} // namespace

ClosureGraph build_closure_graph(bool use_derived_registry) {
    static const std::vector<std::pair<std::string, std::string>> cited = {
        {"J1", "J6"},   {"J6", "J21"},  {"J2", "J9"},   {"J2", "J10"},
        {"J10", "J15"}, {"J9", "J18"},  {"J18", "J13"}, {"J23", "J26"},
        {"J26", "J25"}, {"J8", "J14"},  {"J20", "J16"}, {"J7", "J17"},
    };
    return build_graph(jordan3_ids(), omega_ids(), published_witnesses(), cited,
                       derived_witness_registry(), use_derived_registry, "J22");
}

ClosureGraph build_jor2_graph() {
    static const std::vector<std::pair<std::string, std::string>> cited = {};
    static const std::vector<std::string> rigid = {"Re+Re", "B2", "B4"};
    return build_graph(jor2_ids(), rigid, jor2_witness_registry(), cited, {}, false, "Rn+Rn");
}

CoverageReport rigid_coverage_check(const ClosureGraph& g) {
    CoverageReport report;
    std::map<std::string, bool> rigid;
    for (const auto& id : g.rigid_set)
        rigid[id] = true;

    // breadth-first from each rigid node, remembering one predecessor
    std::map<std::string, std::vector<std::string>> path_from_rigid;
    for (const auto& start : g.rigid_set) {
        std::map<std::string, std::string> pred;
        std::vector<std::string> queue{start};
        pred[start] = "";
        size_t head = 0;
        while (head < queue.size()) {
            std::string cur = queue[head++];
            for (const auto& next : g.successors(cur))
                if (!pred.count(next)) {
                    pred[next] = cur;
                    queue.push_back(next);
                }
        }
        for (const auto& [node, p] : pred) {
            if (node == start || path_from_rigid.count(node))
                continue;
            std::vector<std::string> path{node};
            std::string cur = node;
            while (pred.at(cur) != "") {
                cur = pred.at(cur);
                path.push_back(cur);
            }
            std::reverse(path.begin(), path.end());
            path_from_rigid[node] = std::move(path);
        }
    }

    for (const auto& node : g.nodes) {
        if (rigid.count(node))
            continue;
        auto it = path_from_rigid.find(node);
        if (it == path_from_rigid.end())
            report.uncovered.push_back(node);
        else
            report.covered.push_back({node, it->second});
    }

    // rigidity consistency: every potential incoming arrow must fail the audit
    for (const auto& omega : g.rigid_set)
        for (const auto& other : g.nodes) {
            if (other == omega)
                continue;
            AuditReport r = necessary_conditions_audit(other, omega);
            if (r.all_pass)
                report.rigidity_failures.push_back(other + " -> " + omega);
        }

    report.ok = report.uncovered.empty() && report.rigidity_failures.empty();
    return report;
}

std::optional<Witness> derive_witness_search(const std::string& source_id,
                                             const std::string& target_id, int degree_bound,
                                             const std::vector<Rat>& coefficients,
                                             int max_extra_entries) {
    if (!necessary_conditions_audit(source_id, target_id).all_pass)
        return std::nullopt;
    const Algebra& source = catalog_get(source_id).algebra;
    const Algebra& target = catalog_get(target_id).algebra;
    if (source.dim() != target.dim())
        return std::nullopt;
    const int n = source.dim();

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i)
            p[i] = i;
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::pair<int, int>> off_positions; // filled per permutation

    auto try_candidate = [&](const PolyMatrix& g) -> bool {
        RfMatrix gf = to_rf(g);
        if (determinant(gf).is_zero())
            return false;
        try {
            AlgebraFamily fam = conjugate_family(source, g);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (fam.c(i, j, k).limit_at_zero() != target.c(i, j, k))
                            return false;
        } catch (const PoleAtZero&) {
            return false;
        }
        return true;
    };

    // degree vectors for the spine, in lexicographic order
    std::vector<std::vector<int>> degree_vectors;
    {
        std::vector<int> d(n, 0);
        while (true) {
            degree_vectors.push_back(d);
            int i = n - 1;
            while (i >= 0 && d[i] == degree_bound)
                d[i--] = 0;
            if (i < 0)
                break;
            ++d[i];
        }
    }

    for (int extras = 0; extras <= max_extra_entries; ++extras)
        for (const auto& perm : perms) {
            off_positions.clear();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (perm[j] != i)
                        off_positions.emplace_back(i, j);
            for (const auto& degs : degree_vectors) {
                PolyMatrix spine(n, n);
                for (int j = 0; j < n; ++j)
                    spine.at(perm[j], j) = UniPoly::t(degs[j]);
                if (extras == 0) {
                    if (try_candidate(spine))
                        return Witness{source_id, target_id, spine, WitnessProvenance::Derived};
                    continue;
                }
                // choose `extras` distinct off-spine positions
                std::vector<int> choice(extras);
                for (int i = 0; i < extras; ++i)
                    choice[i] = i;
                const int npos = static_cast<int>(off_positions.size());
                while (true) {
                    // assign coefficient and degree to each chosen position
                    std::vector<int> idx(extras, 0);
                    const int options = static_cast<int>(coefficients.size()) * (degree_bound + 1);
                    while (true) {
                        PolyMatrix g = spine;
                        for (int e = 0; e < extras; ++e) {
                            auto [r, c] = off_positions[choice[e]];
                            int ci = idx[e] / (degree_bound + 1);
                            int di = idx[e] % (degree_bound + 1);
                            g.at(r, c) = UniPoly::t(di, coefficients[ci]);
                        }
                        if (try_candidate(g))
                            return Witness{source_id, target_id, g, WitnessProvenance::Derived};
                        int e = extras - 1;
                        while (e >= 0 && idx[e] == options - 1)
                            idx[e--] = 0;
                        if (e < 0)
                            break;
                        ++idx[e];
                    }
                    int e = extras - 1;
                    while (e >= 0 && choice[e] == npos - extras + e)
                        --e;
                    if (e < 0)
                        break;
                    ++choice[e];
                    for (int f = e + 1; f < extras; ++f)
                        choice[f] = choice[f - 1] + 1;
                }
            }
        }
    return std::nullopt;
}

std::string to_dot(const ClosureGraph& g) {
    std::ostringstream os;
    os << "digraph closure {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const auto& node : g.nodes) {
        const ComputedInvariants& inv = computed_invariants(node);
        const Algebra& a = catalog_get(node).algebra;
        bool rigid = std::find(g.rigid_set.begin(), g.rigid_set.end(), node) != g.rigid_set.end();
        os << "  \"" << node << "\" [label=\"" << node << "\\ndim Der = " << inv.dim_der
           << "\\norbit dim = " << (a.dim() * a.dim() - inv.dim_der) << "\"";
        if (rigid)
            os << ", style=bold";
        os << "];\n";
    }
    for (const auto& e : g.edges) {
        os << "  \"" << e.source << "\" -> \"" << e.target << "\"";
        switch (e.status) {
        case ArrowStatus::VerifiedWitness:
            if (e.witness && e.witness->provenance == WitnessProvenance::Scaling)
                os << " [style=dotted, color=gray]";
            else
                os << " [style=solid]";
            break;
        case ArrowStatus::ClaimedByReference:
            os << " [style=dashed]";
            break;
        case ArrowStatus::AuditOnly:
            os << " [style=dashed, color=gray]";
            break;
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string audit_report_text(const AuditReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks)
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    os << (r.all_pass ? "PASS" : "FAIL") << "  " << r.source << " -> " << r.target << "\n";
    return os.str();
}

} // namespace jorvar
