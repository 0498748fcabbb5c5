#include <catch2/catch_amalgamated.hpp>

#include "cybundle/moduli.hpp"

using namespace cybundle;

TEST_CASE("automorphism dimension of the unbalanced bundle") {
    for (long long n = 3; n <= 12; ++n) {
        const AutBreakdown b = aut_dim(SplitBundle::standard_unbalanced(n));
        INFO("n = " << n);
        CHECK(b.constant_entries == (n - 1) * (n - 1) + 2);
        CHECK(b.linear_entries == 2 * (n - 1));
        CHECK(b.quadratic_entries == 1);
        CHECK(b.matrix_dim == (n + 1) * (n + 1) + 1);
        CHECK(b.aut_dim == (n + 1) * (n + 1) + 3);
        CHECK(b.matrix_dim == b.constant_entries + 2 * b.linear_entries + 3 * b.quadratic_entries);
    }
}

TEST_CASE("automorphism dimension of other bundles") {
    const long long n = 5;
    const AutBreakdown triv = aut_dim(SplitBundle::trivial(n + 1));
    CHECK(triv.matrix_dim == (n + 1) * (n + 1));
    CHECK(triv.aut_dim == (n + 1) * (n + 1) + 2);

    const AutBreakdown spread = aut_dim(SplitBundle{{-1, 1}, {1, 1}});
    CHECK(spread.matrix_dim == 5);  // h0 of degrees {0, 0, 2, -2} = 1+1+3+0
    CHECK(spread.aut_dim == 7);

    for (long long m = 3; m <= 12; ++m)
        CHECK(aut_dim(SplitBundle::standard_unbalanced(m)).aut_dim ==
              aut_dim(SplitBundle::trivial(m + 1)).aut_dim + 1);
}

TEST_CASE("moduli dimension counts") {
    const ModuliReport r3 = moduli_report(3);
    CHECK(r3.h0_antik_p1 == 105);
    CHECK(r3.h0_antik_p2 == 106);
    CHECK(r3.aut_p1 == 18);
    CHECK(r3.aut_p2 == 19);
    CHECK(r3.dim_m1 == 86);
    CHECK(r3.dim_m2_lower == 86);
    CHECK_FALSE(r3.gap_strict);

    const ModuliReport r4 = moduli_report(4);
    CHECK(r4.h0_antik_p1 == 378);
    CHECK(r4.h0_antik_p2 == 383);
    CHECK(r4.aut_p1 == 27);
    CHECK(r4.aut_p2 == 28);
    CHECK(r4.dim_m1 == 350);
    CHECK(r4.dim_m2_lower == 354);
    CHECK(r4.gap_strict);

    for (long long n = 4; n <= 12; ++n) CHECK(moduli_report(n).gap_strict);
    CHECK_THROWS_AS(moduli_report(2), std::invalid_argument);
}

TEST_CASE("anticanonical section gap is 1 exactly at n = 3") {
    for (long long n = 3; n <= 12; ++n) {
        const ModuliReport r = moduli_report(n);
        const BigInt diff = r.h0_antik_p2 - r.h0_antik_p1;
        INFO("n = " << n);
        CHECK(diff >= 1);
        CHECK((diff == 1) == (n == 3));
        // arithmetic identities of the report
        CHECK(r.dim_m1 == r.h0_antik_p1 - 1 - r.aut_p1);
        CHECK(r.dim_m2_lower == r.h0_antik_p2 - 1 - r.aut_p2);
    }
}

TEST_CASE("cubic intersection forms coincide on the two hypersurfaces") {
    const CubicForm f1 = cubic_form_on_X(PBundle::product_space(3));
    const CubicForm f2 = cubic_form_on_X(PBundle::unbalanced_space(3));
    CHECK(f1 == CubicForm{2, 4, 0, 0});
    CHECK(f2 == CubicForm{2, 4, 0, 0});
    CHECK(f1 == f2);
    CHECK(f1.c_fff == 0);
    CHECK_THROWS_AS(cubic_form_on_X(PBundle::product_space(4)), std::invalid_argument);
}

TEST_CASE("isometry search finds only the identity for the hypersurface form") {
    const CubicForm form{2, 4, 0, 0};
    for (long long bound : {5, 10, 20}) {
        const auto found = lattice_isometries(form, bound);
        INFO("bound = " << bound);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == IntMatrix2{1, 0, 0, 1});
    }
    CHECK_THROWS_AS(lattice_isometries(form, 0), std::invalid_argument);
}

TEST_CASE("isometry search is a faithful finite search") {
    // x^3 + y^3 admits the coordinate swap and nothing else within the bound
    const auto found = lattice_isometries(CubicForm{1, 0, 0, 1}, 4);
    REQUIRE(found.size() == 2);
    CHECK(found[0] == IntMatrix2{0, 1, 1, 0});
    CHECK(found[1] == IntMatrix2{1, 0, 0, 1});
    // the identity is always found
    const auto any = lattice_isometries(CubicForm{3, 1, 2, 5}, 3);
    bool has_identity = false;
    for (const auto& m : any) has_identity |= m == IntMatrix2{1, 0, 0, 1};
    CHECK(has_identity);
}

TEST_CASE("nef discrimination between the two sides") {
    const NefDiscriminator d3 = nef_discriminator(3);
    CHECK(d3.t_nef_on_x1);
    CHECK_FALSE(d3.t_nef_on_x2);
    const NefDiscriminator d5 = nef_discriminator(5);
    CHECK(d5.t_nef_on_x1);
    CHECK_FALSE(d5.t_nef_on_x2);
    CHECK_THROWS_AS(nef_discriminator(2), std::invalid_argument);
}
