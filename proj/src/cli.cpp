#include "jorvar/cli.hpp"

#include "jorvar/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace jorvar {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

// id of a catalog entry, or a path to a .jalg file
Algebra resolve_algebra(const std::string& ref) {
    if (catalog_has(ref))
        return catalog_get(ref).algebra;
    return load_jalg(ref);
}

struct Output {
    std::ostream& out;
    bool json_lines = false;

    void record(const json& j, const std::string& text) {
        if (json_lines)
            out << j.dump() << "\n";
        else
            out << text;
    }
};

std::string seq_text(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int cmd_show(const std::string& ref, bool as_jalg, Output& o) {
    Algebra a = resolve_algebra(ref);
    if (as_jalg) {
        o.out << to_jalg(a);
        return kExitOk;
    }
    std::ostringstream text;
    text << (a.label().empty() ? ref : a.label()) << "  dim " << a.dim() << "\n";
    json products = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) {
            RatVec p = a.basis_product(i, j);
            bool nonzero = false;
            std::string rhs;
            for (int k = 0; k < a.dim(); ++k) {
                if (p[k] == 0)
                    continue;
                if (nonzero)
                    rhs += " + ";
                nonzero = true;
                if (p[k] != 1)
                    rhs += to_string(p[k]) + " ";
                rhs += "e" + std::to_string(k + 1);
            }
            if (!nonzero)
                continue;
            text << "  e" << (i + 1) << " e" << (j + 1) << " = " << rhs << "\n";
            products.push_back({{"i", i + 1}, {"j", j + 1}, {"value", rhs}});
        }
    o.record({{"verb", "show"}, {"id", ref}, {"dim", a.dim()}, {"products", products}},
             text.str());
    return kExitOk;
}

int cmd_invariants(const std::string& ref, Output& o) {
    Algebra a = resolve_algebra(ref);
    Fingerprint f = fingerprint(a);
    std::ostringstream text;
    text << (a.label().empty() ? ref : a.label()) << "\n"
         << "  dim        " << f.dim << "\n"
         << "  dim Rad    " << f.dim_rad << "\n"
         << "  dim Ann    " << f.dim_ann << "\n"
         << "  dim Der    " << f.dim_der << "\n"
         << "  orbit dim  " << (f.dim * f.dim - f.dim_der) << "\n"
         << "  Rad type   " << seq_text(f.rad_niltype) << "\n"
         << "  assoc      " << (f.associative ? "yes" : "no") << "\n"
         << "  unital     " << (f.unital ? "yes" : "no") << "\n"
         << "  power dims " << seq_text(f.power_dims) << "\n"
         << "  trace sig  " << f.trace_signature.str() << "\n"
         << "  square frm "
         << (f.square_form ? "(" + std::to_string(f.square_form->first) + "," +
                                 std::to_string(f.square_form->second) + ")"
                           : "-")
         << "\n";
    json j = {{"verb", "invariants"},
              {"id", ref},
              {"dim", f.dim},
              {"dimRad", f.dim_rad},
              {"dimAnn", f.dim_ann},
              {"dimDer", f.dim_der},
              {"orbitDim", f.dim * f.dim - f.dim_der},
              {"radNiltype", f.rad_niltype},
              {"associative", f.associative},
              {"unital", f.unital},
              {"powerDims", f.power_dims},
              {"traceSignature",
               {f.trace_signature.positive, f.trace_signature.negative, f.trace_signature.zero}}};
    if (f.square_form)
        j["squareForm"] = {f.square_form->first, f.square_form->second};
    else
        j["squareForm"] = nullptr;
    o.record(j, text.str());
    return kExitOk;
}

int cmd_check_jordan(const std::string& ref, Output& o) {
    Algebra a = resolve_algebra(ref);
    JordanVerdict v = is_jordan(a);
    std::ostringstream text;
    json j = {{"verb", "check-jordan"}, {"id", ref}, {"jordan", v.ok}};
    if (v.ok) {
        text << ref << ": Jordan identity holds\n";
    } else {
        text << ref << ": Jordan identity fails at (i,j,k,l,p) = (" << v.tuple[0] << ","
             << v.tuple[1] << "," << v.tuple[2] << "," << v.tuple[3] << "," << v.tuple[4]
             << "), residual " << to_string(v.residual) << "\n";
        j["violatedTuple"] = v.tuple;
        j["residual"] = to_string(v.residual);
    }
    o.record(j, text.str());
    return v.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_cocycle(const std::string& ref, Output& o) {
    Algebra a = resolve_algebra(ref);
    int z2 = z2_dim(a), b2 = b2_dim(a);
    std::ostringstream text;
    text << ref << ": z2=" << z2 << " b2=" << b2 << " h2=" << (z2 - b2) << " ("
         << (z2 == b2 ? "H2Zero: rigid" : "inconclusive") << ")\n";
    o.record({{"verb", "cocycle"},
              {"id", ref},
              {"z2", z2},
              {"b2", b2},
              {"h2", z2 - b2},
              {"certificate", z2 == b2 ? "H2Zero" : "Inconclusive"}},
             text.str());
    return kExitOk;
}

int cmd_iso_verify(const std::string& src, const std::string& dst, const std::string& matrix_path,
                   Output& o) {
    RatMatrix m = to_constant_matrix(load_poly_matrix(matrix_path));
    IsoWitness w = make_iso_witness(src, dst, std::move(m));
    bool ok = verify_iso(w);
    o.record({{"verb", "iso-verify"}, {"source", src}, {"target", dst}, {"ok", ok}},
             std::string(ok ? "verified" : "FAILED") + ": " + src + " -> " + dst + "\n");
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_deform_verify(const std::string& src, const std::string& dst,
                      const std::string& witness_path, Output& o) {
    std::optional<Witness> w;
    if (!witness_path.empty()) {
        w = Witness{src, dst, load_poly_matrix(witness_path), WitnessProvenance::Derived};
    } else {
        for (const auto& cand : published_witnesses())
            if (cand.source == src && cand.target == dst)
                w = cand;
        if (!w)
            for (const auto& cand : derived_witness_registry())
                if (cand.source == src && cand.target == dst)
                    w = cand;
        if (!w)
            for (const auto& cand : jor2_witness_registry())
                if (cand.source == src && cand.target == dst)
                    w = cand;
        if (!w) {
            Witness scaling = scaling_witness(src);
            if (scaling.target == dst)
                w = scaling;
        }
        if (!w)
            throw Error("no built-in witness for " + src + " -> " + dst +
                        "; pass one with --witness");
    }
    ArrowCheck check = verify_arrow(*w);
    std::ostringstream text;
    text << (check.ok ? "verified" : "FAILED") << ": " << src << " -> " << dst;
    if (!check.ok)
        text << " (" << check.reason << ")";
    text << "\n";
    o.record({{"verb", "deform-verify"},
              {"source", src},
              {"target", dst},
              {"ok", check.ok},
              {"reason", check.reason}},
             text.str());
    return check.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_audit(const std::string& src, const std::string& dst, Output& o) {
    AuditReport r = necessary_conditions_audit(src, dst);
    if (o.json_lines) {
        for (const auto& c : r.checks)
            o.out << json{{"verb", "audit"},
                          {"source", src},
                          {"target", dst},
                          {"check", c.name},
                          {"pass", c.pass},
                          {"detail", c.detail}}
                         .dump()
                  << "\n";
        o.out << json{{"verb", "audit"}, {"source", src}, {"target", dst}, {"allPass", r.all_pass}}
                     .dump()
              << "\n";
    } else {
        o.out << audit_report_text(r);
    }
    return r.all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_graph(const std::string& dot_path, bool jor2, Output& o) {
    ClosureGraph g = jor2 ? build_jor2_graph() : build_closure_graph();
    CoverageReport coverage = rigid_coverage_check(g);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f)
            throw Error("cannot write '" + dot_path + "'");
        f << to_dot(g);
    }
    std::ostringstream text;
    text << "nodes " << g.nodes.size() << ", edges " << g.edges.size() << ", rigid set {";
    for (size_t i = 0; i < g.rigid_set.size(); ++i)
        text << (i ? "," : "") << g.rigid_set[i];
    text << "}\n";
    text << "coverage " << (coverage.ok ? "complete" : "INCOMPLETE") << "\n";
    for (const auto& p : coverage.covered) {
        text << "  " << p.node << " covered via";
        for (const auto& step : p.path)
            text << " " << step;
        text << "\n";
    }
    o.record({{"verb", "graph"},
              {"nodes", g.nodes.size()},
              {"edges", g.edges.size()},
              {"rigidSet", g.rigid_set},
              {"coverageOk", coverage.ok}},
             text.str());
    return coverage.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog_audit(const std::string& manifest_path, Output& o) {
    bool all_ok = true;
    std::ostringstream text;
    text << "id      dimDer dimAnn dimRad radtype   assoc unital verdict\n";
    for (const auto& id : catalog_ids()) {
        const CatalogEntry& entry = catalog_get(id);
        const ComputedInvariants& inv = computed_invariants(id);
        bool ok = inv.dim_der == entry.expected.dim_aut && inv.dim_ann == entry.expected.dim_ann &&
                  inv.dim_rad == entry.expected.dim_rad &&
                  inv.rad_niltype == entry.expected.rad_niltype &&
                  inv.associative == entry.expected.associative &&
                  inv.unital == entry.expected.unital;
        all_ok = all_ok && ok;
        char line[160];
        std::snprintf(line, sizeof(line), "%-7s %6d %6d %6d %-9s %-5s %-6s %s\n", id.c_str(),
                      inv.dim_der, inv.dim_ann, inv.dim_rad, seq_text(inv.rad_niltype).c_str(),
                      inv.associative ? "yes" : "no", inv.unital ? "yes" : "no",
                      ok ? "ok" : "MISMATCH");
        text << line;
        if (o.json_lines)
            o.out << json{{"verb", "catalog-audit"},
                          {"id", id},
                          {"dimDer", inv.dim_der},
                          {"dimAnn", inv.dim_ann},
                          {"dimRad", inv.dim_rad},
                          {"radNiltype", inv.rad_niltype},
                          {"associative", inv.associative},
                          {"unital", inv.unital},
                          {"ok", ok}}
                         .dump()
                  << "\n";
    }
    DistinctnessReport distinct = pairwise_distinct_audit();
    all_ok = all_ok && distinct.ok;
    text << "pairwise distinctness over J1..J26: "
         << (distinct.ok ? "26 distinct fingerprints" : "COLLISIONS") << "\n";
    for (const auto& [a, b] : distinct.collisions)
        text << "  collision " << a << " ~ " << b << "\n";
    if (!manifest_path.empty()) {
        std::ofstream f(manifest_path);
        if (!f)
            throw Error("cannot write '" + manifest_path + "'");
        f << catalog_manifest_json();
    }
    if (o.json_lines)
        o.out << json{{"verb", "catalog-audit"},
                      {"summary", true},
                      {"distinct", distinct.ok},
                      {"ok", all_ok}}
                     .dump()
              << "\n";
    else
        o.out << text.str();
    return all_ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure-constant workbench for low-dimensional Jordan algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}));

    std::string ref, src, dst, witness_path, matrix_path, dot_path, manifest_path;
    bool as_jalg = false, jor2 = false;

    auto* show = app.add_subcommand("show", "print the multiplication table of an algebra");
    show->add_option("id", ref, "catalog id or .jalg path")->required();
    show->add_flag("--jalg", as_jalg, "emit .jalg format");

    auto* invariants = app.add_subcommand("invariants", "print the isomorphism invariants");
    invariants->add_option("id", ref)->required();
    auto* fp = app.add_subcommand("fingerprint", "alias of invariants");
    fp->add_option("id", ref)->required();

    auto* check = app.add_subcommand("check-jordan", "verify the Jordan identity system");
    check->add_option("file", ref, "catalog id or .jalg path")->required();

    auto* cocycle = app.add_subcommand("cocycle", "print dim Z2/B2/H2");
    cocycle->add_option("id", ref)->required();

    auto* iso = app.add_subcommand("iso-verify", "verify an explicit isomorphism matrix");
    iso->add_option("source", src)->required();
    iso->add_option("target", dst)->required();
    iso->add_option("--matrix", matrix_path, "matrix file")->required();

    auto* deform = app.add_subcommand("deform-verify", "verify a degeneration witness g(t)");
    deform->add_option("source", src)->required();
    deform->add_option("target", dst)->required();
    deform->add_option("--witness", witness_path, "polynomial matrix file (default: built-in)");

    auto* audit = app.add_subcommand("audit", "run the seven necessary-condition checks");
    audit->add_option("source", src)->required();
    audit->add_option("target", dst)->required();

    auto* graph = app.add_subcommand("graph", "build the orbit-closure graph");
    graph->add_option("--dot", dot_path, "write Graphviz output here");
    graph->add_flag("--jor2", jor2, "dimension-2 variety instead of dimension 3");

    auto* cat = app.add_subcommand("catalog-audit", "reproduce the classification tables");
    cat->add_option("--manifest", manifest_path, "write the catalog manifest here");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    Output o{out, format == "json-lines"};
    try {
        if (show->parsed())
            return cmd_show(ref, as_jalg, o);
        if (invariants->parsed() || fp->parsed())
            return cmd_invariants(ref, o);
        if (check->parsed())
            return cmd_check_jordan(ref, o);
        if (cocycle->parsed())
            return cmd_cocycle(ref, o);
        if (iso->parsed())
            return cmd_iso_verify(src, dst, matrix_path, o);
        if (deform->parsed())
            return cmd_deform_verify(src, dst, witness_path, o);
        if (audit->parsed())
            return cmd_audit(src, dst, o);
        if (graph->parsed())
            return cmd_graph(dot_path, jor2, o);
        if (cat->parsed())
            return cmd_catalog_audit(manifest_path, o);
        err << "unknown subcommand\n";
        return kExitParse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownId& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

} // namespace jorvar
