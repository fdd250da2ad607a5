#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jorvar/catalog.hpp"
#include "test_util.hpp"

using namespace jorvar;
using namespace jorvar::testutil;

namespace {

const Algebra& cat(const std::string& id) { return catalog_get(id).algebra; }

} // namespace

TEST_CASE("lookup") {
    CHECK(catalog_ids().size() == 35);
    CHECK(jordan3_ids().size() == 26);
    CHECK(jor2_ids().size() == 7);
    CHECK(omega_ids().size() == 8);
    CHECK_THROWS_AS(catalog_get("J27"), UnknownId);
    CHECK(catalog_has("B3"));
    CHECK(!catalog_has("nope"));
}

TEST_CASE("pinned multiplication tables") {
    // J20: e1^2 = e1, n1^2 = n2, e1 n1 = n1/2, e1 n2 = n2
    const Algebra& j20 = cat("J20");
    CHECK(j20.basis_product(0, 0) == RatVec{Rat(1), Rat(0), Rat(0)});
    CHECK(j20.basis_product(1, 1) == RatVec{Rat(0), Rat(0), Rat(1)});
    CHECK(j20.basis_product(0, 1) == RatVec{Rat(0), rat(1, 2), Rat(0)});
    CHECK(j20.basis_product(0, 2) == RatVec{Rat(0), Rat(0), Rat(1)});
    CHECK(j20.basis_product(1, 2) == RatVec(3, Rat(0)));

    // B4: e1^2 = e1, e1 e2 = e2, e2^2 = -e1
    const Algebra& b4 = cat("B4");
    CHECK(b4.basis_product(0, 0) == RatVec{Rat(1), Rat(0)});
    CHECK(b4.basis_product(0, 1) == RatVec{Rat(0), Rat(1)});
    CHECK(b4.basis_product(1, 1) == RatVec{Rat(-1), Rat(0)});

    CHECK(cat("J22") == Algebra::zero(3));
}

TEST_CASE("all catalog algebras satisfy the Jordan system") {
    for (const auto& id : catalog_ids())
        CHECK_MESSAGE(is_jordan(cat(id)).ok, id);
}

TEST_CASE("classification tables reproduce") {
    for (const auto& id : catalog_ids()) {
        const CatalogEntry& entry = catalog_get(id);
        const ComputedInvariants& inv = computed_invariants(id);
        CHECK_MESSAGE(inv.dim_der == entry.expected.dim_aut, id, " dim Aut");
        CHECK_MESSAGE(inv.dim_ann == entry.expected.dim_ann, id, " dim Ann");
        CHECK_MESSAGE(inv.dim_rad == entry.expected.dim_rad, id, " dim Rad");
        CHECK_MESSAGE(inv.rad_niltype == entry.expected.rad_niltype, id, " niltype");
        CHECK_MESSAGE(inv.associative == entry.expected.associative, id, " associativity");
        CHECK_MESSAGE(inv.unital == entry.expected.unital, id, " unitality");
    }
}

TEST_CASE("direct-sum entries match their printed summands") {
    CHECK(cat("J1") == direct_sum(direct_sum(cat("Re"), cat("Re")), cat("Re")));
    CHECK(cat("J2") == direct_sum(cat("B4"), cat("Re")));
    CHECK(cat("J6") == direct_sum(direct_sum(cat("Re"), cat("Re")), cat("Rn")));
    CHECK(cat("J7") == direct_sum(cat("B2"), cat("Re")));
    CHECK(cat("J9") == direct_sum(cat("B1"), cat("Re")));
    CHECK(cat("J10") == direct_sum(cat("B4"), cat("Rn")));
    CHECK(cat("J14") == direct_sum(cat("B2"), cat("Rn")));
    CHECK(cat("J15") == direct_sum(cat("B1"), cat("Rn")));
    CHECK(cat("J17") == direct_sum(direct_sum(cat("Re"), cat("Rn")), cat("Rn")));
    CHECK(cat("J21") == direct_sum(cat("B3"), cat("Re")));
    CHECK(cat("J22") == direct_sum(direct_sum(cat("Rn"), cat("Rn")), cat("Rn")));
    CHECK(cat("J25") == direct_sum(cat("B3"), cat("Rn")));
    CHECK(cat("Re+Re") == direct_sum(cat("Re"), cat("Re")));
    CHECK(cat("Re+Rn") == direct_sum(cat("Re"), cat("Rn")));
    CHECK(cat("Rn+Rn") == direct_sum(cat("Rn"), cat("Rn")));
}

TEST_CASE("fingerprint separates the hard pairs") {
    Fingerprint f24 = fingerprint(cat("J24"));
    Fingerprint f26 = fingerprint(cat("J26"));
    CHECK(f24.dim_der == f26.dim_der);
    CHECK(f24.dim_ann == f26.dim_ann);
    CHECK(f24.rad_niltype == f26.rad_niltype);
    REQUIRE(f24.square_form.has_value());
    REQUIRE(f26.square_form.has_value());
    CHECK(*f24.square_form == std::pair<int, int>{2, 2}); // definite
    CHECK(*f26.square_form == std::pair<int, int>{2, 0}); // hyperbolic
    CHECK(f24 != f26);

    Fingerprint f3 = fingerprint(cat("J3"));
    Fingerprint f4 = fingerprint(cat("J4"));
    Fingerprint f5 = fingerprint(cat("J5"));
    CHECK(f3.trace_signature == Signature{2, 1, 0});
    CHECK(f4.trace_signature == Signature{1, 2, 0});
    CHECK(f5.trace_signature == Signature{3, 0, 0});
    CHECK(f3 != f4);
    CHECK(f3 != f5);
    CHECK(f4 != f5);

    Fingerprint f22 = fingerprint(cat("J22"));
    CHECK(f22.dim_rad == 3);
    CHECK(f22.dim_ann == 3);
    CHECK(f22.dim_der == 9);
    CHECK(f22.rad_niltype == std::vector<int>{3});
    CHECK(f22.associative);
    CHECK(!f22.unital);
}

TEST_CASE("pairwise distinctness of the 26 orbits") {
    auto report = pairwise_distinct_audit();
    CHECK(report.ok);
    CHECK(report.fingerprints.size() == 26);
    CHECK(report.collisions.empty());
}

TEST_CASE("a duplicated orbit produces exactly one collision") {
    std::vector<std::pair<std::string, Algebra>> entries;
    for (const auto& id : jordan3_ids())
        entries.emplace_back(id, cat(id));
    entries.emplace_back("J26'", change_of_basis(cat("J26"), random_invertible(3)));
    auto report = pairwise_distinct_audit(entries);
    CHECK(!report.ok);
    REQUIRE(report.collisions.size() == 1);
    CHECK(report.collisions[0] == std::pair<std::string, std::string>{"J26", "J26'"});
}

TEST_CASE("restricted audit stays distinct") {
    std::vector<std::pair<std::string, Algebra>> entries = {
        {"J3", cat("J3")}, {"J4", cat("J4")}, {"J5", cat("J5")}};
    CHECK(pairwise_distinct_audit(entries).ok);
}

TEST_CASE("fingerprint is constant on orbits") {
    for (const auto& id : {"J2", "J8", "J16", "J21", "J25"}) {
        const Algebra& a = cat(id);
        Fingerprint f = fingerprint(a);
        for (int trial = 0; trial < 5; ++trial)
            CHECK(fingerprint(change_of_basis(a, random_invertible(a.dim()))) == f);
    }
}

TEST_CASE("classifier: pinned cases") {
    auto c1 = classify_nilpotent_21(Rat(0), Rat(0), Rat(1));
    CHECK(c1.id == "J26");
    REQUIRE(c1.witness.has_value());
    CHECK(verify_iso(*c1.witness));
    CHECK(c1.witness->matrix == RatMatrix::identity(3));

    auto c2 = classify_nilpotent_21(Rat(1), Rat(1), Rat(0)); // Delta = -1
    CHECK(c2.id == "J24");
    REQUIRE(c2.witness.has_value());
    CHECK(verify_iso(*c2.witness));
    CHECK(c2.witness->matrix == RatMatrix::identity(3));

    auto c3 = classify_nilpotent_21(Rat(1), Rat(0), Rat(0));
    CHECK(c3.id == "J25");
    REQUIRE(c3.witness.has_value());
    CHECK(verify_iso(*c3.witness));
    // printed map: N1 -> n1, N2 -> n3, N3 -> n2/alpha
    RatMatrix expected(3, 3);
    expected.at(0, 0) = Rat(1);
    expected.at(2, 1) = Rat(1);
    expected.at(1, 2) = Rat(1);
    CHECK(c3.witness->matrix == expected);

    CHECK_THROWS_AS(classify_nilpotent_21(Rat(0), Rat(0), Rat(0)), AllZero);
}

TEST_CASE("classifier: irrational discriminants classify without a witness") {
    auto pos = classify_nilpotent_21(Rat(1), Rat(2), Rat(2)); // Delta = 2
    CHECK(pos.id == "J26");
    CHECK(!pos.witness.has_value());
    CHECK(pos.witness_omitted_irrational_sqrt);

    auto neg = classify_nilpotent_21(Rat(1), Rat(3), Rat(1)); // Delta = -2
    CHECK(neg.id == "J24");
    CHECK(!neg.witness.has_value());
    CHECK(neg.witness_omitted_irrational_sqrt);
}

TEST_CASE("classifier: the id depends only on the sign of Delta") {
    for (int trial = 0; trial < 60; ++trial) {
        Rat alpha = random_rat(), beta = random_rat(), gamma = random_rat();
        if (alpha == 0 && beta == 0 && gamma == 0)
            continue;
        Rat delta = gamma * gamma - alpha * beta;
        auto cls = classify_nilpotent_21(alpha, beta, gamma);
        if (delta > 0)
            CHECK(cls.id == "J26");
        else if (delta < 0)
            CHECK(cls.id == "J24");
        else
            CHECK(cls.id == "J25");
        if (cls.witness.has_value())
            CHECK(verify_iso(*cls.witness));
        else
            CHECK(cls.witness_omitted_irrational_sqrt);
    }
}

TEST_CASE("classifier: rational-square families always come with verified witnesses") {
    // gamma = 0 and alpha*beta = -(square) gives Delta = square > 0
    for (int trial = 0; trial < 30; ++trial) {
        Rat s = random_rat();
        if (s == 0)
            continue;
        Rat alpha = random_rat();
        if (alpha == 0)
            continue;
        Rat beta = -(s * s) / alpha;
        auto cls = classify_nilpotent_21(alpha, beta, Rat(0));
        CHECK(cls.id == "J26");
        REQUIRE(cls.witness.has_value());
        CHECK(verify_iso(*cls.witness));

        // and alpha*beta = +(square) gives Delta < 0
        Rat beta2 = (s * s) / alpha;
        auto cls2 = classify_nilpotent_21(alpha, beta2, Rat(0));
        CHECK(cls2.id == "J24");
        REQUIRE(cls2.witness.has_value());
        CHECK(verify_iso(*cls2.witness));
    }
}

TEST_CASE("verify_iso") {
    // identity map does not carry J24 to J26
    CHECK(!verify_iso(make_iso_witness("J24", "J26", RatMatrix::identity(3))));
    CHECK_THROWS_AS(verify_iso(make_iso_witness("J24", "J26", RatMatrix(3, 3))), SingularMatrix);

    // a random change of basis is a witness from the moved algebra back home
    for (const auto& id : {"J11", "J18", "J23"}) {
        RatMatrix g = random_invertible(3);
        Algebra moved = change_of_basis(cat(id), inverse(g));
        IsoWitness w{"moved", id, moved, g};
        CHECK(verify_iso(w));
    }
}

TEST_CASE("computed invariants cache is consistent with direct computation") {
    for (const auto& id : {"J7", "J22"}) {
        const ComputedInvariants& inv = computed_invariants(id);
        const Algebra& a = cat(id);
        CHECK(inv.dim_der == derivation_dim(a));
        CHECK(inv.z2 == z2_dim(a));
        CHECK(inv.b2 == b2_dim(a));
        CHECK(inv.h2 == h2_dim(a));
        CHECK(inv.power_dims == power_filtration(a).power_dims());
    }
}
