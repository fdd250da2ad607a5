#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jorvar/cli.hpp"
#include "jorvar/io.hpp"
#include "test_util.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jorvar;
using namespace jorvar::testutil;

namespace {

std::string fixture(const std::string& name) {
    return std::string(JORVAR_FIXTURES_DIR) + "/" + name;
}

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("jalg round trip over the whole catalog") {
    for (const auto& id : catalog_ids()) {
        const Algebra& a = catalog_get(id).algebra;
        Algebra parsed = parse_jalg_string(to_jalg(a));
        CHECK(parsed == a);
    }
}

TEST_CASE("jalg parse errors") {
    CHECK_THROWS_AS(parse_jalg_string("dim 0"), ParseError);
    CHECK_THROWS_AS(parse_jalg_string("3"), ParseError);
    CHECK_THROWS_AS(parse_jalg_string("dim 2\n1 1 3 1"), ParseError);    // index range
    CHECK_THROWS_AS(parse_jalg_string("dim 2\n2 1 1 1"), ParseError);    // i > j
    CHECK_THROWS_AS(parse_jalg_string("dim 2\n1 1 1"), ParseError);      // incomplete
    CHECK_THROWS_AS(parse_jalg_string("dim 2\n1 1 1 1\n1 1 1 2"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_jalg_string("dim 2\n1 1 1 1/0"), ParseError);  // bad rational
    // comments and symmetric completion
    Algebra a = parse_jalg_string("# header\ndim 2\n1 2 1 1/2 # inline\n");
    CHECK(a.c(0, 1, 0) == rat(1, 2));
    CHECK(a.c(1, 0, 0) == rat(1, 2));
}

TEST_CASE("polynomial entries parse and print") {
    CHECK(parse_poly_entry("0").is_zero());
    CHECK(parse_poly_entry("-1/2") == UniPoly(rat(-1, 2)));
    CHECK(parse_poly_entry("t") == UniPoly::t());
    CHECK(parse_poly_entry("-t") == UniPoly::t(1, Rat(-1)));
    CHECK(parse_poly_entry("t^2") == UniPoly::t(2));
    CHECK(parse_poly_entry("1/2*t^3") == UniPoly::t(3, rat(1, 2)));
    CHECK(parse_poly_entry("2*t^2+1") == UniPoly({Rat(1), Rat(0), Rat(2)}));
    CHECK(parse_poly_entry("1+t-t") == UniPoly(Rat(1)));
    CHECK_THROWS_AS(parse_poly_entry("t^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly_entry("x"), ParseError);

    for (const auto& w : published_witnesses()) {
        PolyMatrix parsed = parse_poly_matrix_string(to_poly_matrix_text(w.g));
        CHECK(parsed == w.g);
    }
}

TEST_CASE("matrix file shape validation") {
    CHECK_THROWS_AS(parse_poly_matrix_string("matrix 2 2\n1 0 0"), ParseError);
    CHECK_THROWS_AS(parse_poly_matrix_string("dim 2"), ParseError);
    PolyMatrix m = parse_poly_matrix_string("matrix 1 2\nt 1/3");
    CHECK(m.at(0, 0) == UniPoly::t());
    CHECK_THROWS_AS(to_constant_matrix(m), ParseError);
}

TEST_CASE("catalog manifest lists every entry") {
    std::string manifest = catalog_manifest_json();
    for (const auto& id : catalog_ids())
        CHECK(manifest.find("\"" + id + "\"") != std::string::npos);
    CHECK(manifest.find("dimAut") != std::string::npos);
}

TEST_CASE("cli show/invariants agree with the modules") {
    auto shown = cli({"show", "J20"});
    CHECK(shown.exit_code == 0);
    CHECK(shown.out.find("e1 e1 = e1") != std::string::npos);
    CHECK(shown.out.find("e2 e2 = e3") != std::string::npos);

    auto inv = cli({"invariants", "J12"});
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("dim Der    6") != std::string::npos);

    auto jalg = cli({"show", "J24", "--jalg"});
    CHECK(parse_jalg_string(jalg.out) == catalog_get("J24").algebra);
}

TEST_CASE("cli check-jordan") {
    CHECK(cli({"check-jordan", "J8"}).exit_code == 0);
    auto bad = cli({"check-jordan", fixture("non_jordan.jalg")});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("fails at") != std::string::npos);
}

TEST_CASE("cli cocycle matches module values") {
    auto res = cli({"cocycle", "J7"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("z2=7") != std::string::npos);
    CHECK(res.out.find("h2=0") != std::string::npos);
}

TEST_CASE("cli deform-verify with a witness file and with builtins") {
    auto from_file = cli({"deform-verify", "J3", "J8", "--witness", fixture("j3_to_j8.wit")});
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out.find("verified") != std::string::npos);

    CHECK(cli({"deform-verify", "J21", "J24"}).exit_code == 0);
    CHECK(cli({"deform-verify", "J16", "J22"}).exit_code == 0); // scaling fallback

    // a witness that exists but lands elsewhere fails verification
    auto wrong = cli({"deform-verify", "J3", "J14", "--witness", fixture("j3_to_j8.wit")});
    CHECK(wrong.exit_code == 1);
}

TEST_CASE("cli iso-verify") {
    std::string path = temp_path("identity3.wit");
    {
        std::ofstream f(path);
        f << "matrix 3 3\n1 0 0\n0 1 0\n0 0 1\n";
    }
    CHECK(cli({"iso-verify", "J24", "J24", "--matrix", path}).exit_code == 0);
    CHECK(cli({"iso-verify", "J24", "J26", "--matrix", path}).exit_code == 1);
}

TEST_CASE("cli audit exit codes mirror the report") {
    CHECK(cli({"audit", "J2", "J9"}).exit_code == 0);
    auto failing = cli({"audit", "J3", "J7"});
    CHECK(failing.exit_code == 1);
    CHECK(failing.out.find("FAIL") != std::string::npos);
    CHECK(failing.out == audit_report_text(necessary_conditions_audit("J3", "J7")));
}

TEST_CASE("cli catalog-audit and manifest") {
    std::string manifest_path = temp_path("catalog_manifest.json");
    auto res = cli({"catalog-audit", "--manifest", manifest_path});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("26 distinct fingerprints") != std::string::npos);
    std::ifstream f(manifest_path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    CHECK(buffer.str() == catalog_manifest_json());
}

TEST_CASE("cli graph writes dot output") {
    std::string dot_path = temp_path("jor3.dot");
    auto res = cli({"graph", "--dot", dot_path});
    CHECK(res.exit_code == 0);
    std::ifstream f(dot_path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    CHECK(buffer.str() == to_dot(build_closure_graph()));
    CHECK(cli({"graph", "--jor2"}).exit_code == 0);
}

TEST_CASE("cli json-lines output is valid json per line") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"--format", "json-lines", "invariants", "J5"},
             {"--format", "json-lines", "cocycle", "J22"},
             {"--format", "json-lines", "audit", "J2", "J9"},
             {"--format", "json-lines", "check-jordan", "J1"}}) {
        auto res = cli(args);
        CHECK(res.exit_code == 0);
        std::istringstream lines(res.out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            CHECK_NOTHROW((void)nlohmann::json::parse(line));
            ++count;
        }
        CHECK(count > 0);
    }
}

TEST_CASE("cli output is byte-stable") {
    for (auto args : std::vector<std::vector<std::string>>{{"catalog-audit"},
                                                           {"invariants", "J16"},
                                                           {"audit", "J5", "J19"},
                                                           {"show", "B4"}}) {
        auto first = cli(args);
        auto second = cli(args);
        CHECK(first.out == second.out);
        CHECK(first.exit_code == second.exit_code);
    }
}

TEST_CASE("cli error classes map to exit codes") {
    CHECK(cli({"bogus-verb"}).exit_code == 2);
    CHECK(cli({"invariants", "J99"}).exit_code == 2);             // unknown id
    CHECK(cli({"invariants"}).exit_code == 2);                    // missing argument
    CHECK(cli({"check-jordan", "/no/such/file.jalg"}).exit_code == 2);
    CHECK(cli({"deform-verify", "J3", "J9"}).exit_code == 1);     // no builtin witness
    CHECK(cli({"--help"}).exit_code == 0);
}
