#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burnside/cokernel.hpp"
#include "burnside/spectrum.hpp"
#include "burnside/verify.hpp"
#include "helpers.hpp"

using namespace burnside;

TEST_CASE("obs moduli") {
    auto c2 = ctx_of("C2");
    CHECK(obs_moduli(c2.table(1), std::nullopt) == std::vector<Int>{2, 2, 1});
    CHECK(obs_moduli(ctx_of("C1").table(0), std::nullopt) == std::vector<Int>{1});

    // S3 at degree 0, order (1, C2, C3, S3): 2-parts of (6, 1, 2, 1).
    auto s3 = ctx_of("S3");
    CHECK(obs_moduli(s3.table(0), 2) == std::vector<Int>{2, 1, 2, 1});
    CHECK(obs_moduli(s3.table(0), 3) == std::vector<Int>{3, 1, 1, 1});
    CHECK_THROWS_AS(obs_moduli(s3.table(0), 4), input_error);
}

TEST_CASE("psi_p hand evaluation in C2, degree 1") {
    auto ctx = ctx_of("C2");
    TablePtr t = ctx.table(1);
    // ghost(<(1,1)>) = (2,0,0); at T = (1,1) the sum x_(1,1) + x_(C2,C2)
    // runs over the two cosets of W = C2.
    GhostVec<Int> v = ghost(basis(t, 0));
    CHECK(v == GhostVec<Int>{2, 0, 0});
    ObsVector o = psi_p(t, v, 2);
    CHECK(o.is_zero());

    // The zero vector maps to zero.
    CHECK(psi_p(t, GhostVec<Int>(3, Int(0)), 2).is_zero());

    // Additivity mod moduli.
    GhostVec<Int> a = ghost(basis(t, 1)), b = ghost(basis(t, 2));
    GhostVec<Int> sum(3);
    for (int i = 0; i < 3; ++i)
        sum[i] = a[i] + b[i];
    ObsVector oa = psi_p(t, a, 2), ob = psi_p(t, b, 2), os = psi_p(t, sum, 2);
    for (int i = 0; i < 3; ++i)
        CHECK(os.residues[i] == (oa.residues[i] + ob.residues[i]) % os.moduli[i]);
}

TEST_CASE("psi_p vanishes on the image of the ghost map") {
    for (const std::string& spec : testing::named_groups_up_to(24)) {
        auto ctx = ctx_of(spec);
        for (int n : {0, 1}) {
            TablePtr t = ctx.table(n);
            for (unsigned p : prime_divisors(ctx.group()->order()))
                for (size_t j = 0; j < t->class_count(); ++j) {
                    GhostVec<Int> col(t->class_count());
                    for (size_t i = 0; i < t->class_count(); ++i)
                        col[i] = t->marks[i][j];
                    CHECK_MESSAGE(psi_p(t, col, p).is_zero(), spec, " p=", p, " class ", j);
                }
        }
    }
}

TEST_CASE("cokernel order") {
    CHECK(cokernel_order(*ctx_of("C2").table(1)) == 4);
    CHECK(cokernel_order(*ctx_of("S3").table(0)) == 12);
    CHECK(cokernel_order(*ctx_of("C1").table(2)) == 1);
}

TEST_CASE("J' basis change matrix") {
    auto ctx = ctx_of("C2");
    auto j = jprime_matrix(*ctx.table(1));
    std::vector<std::vector<Rat>> expect = {
        {1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    CHECK(j == expect);

    // Unitriangular with integer entries for every small group.
    for (const char* spec : {"S3", "D8", "A4", "S4"}) {
        auto c = ctx_of(spec);
        for (int n : {0, 1}) {
            auto m = jprime_matrix(*c.table(n));
            for (size_t i = 0; i < m.size(); ++i) {
                CHECK(m[i][i] == 1);
                for (size_t k = 0; k < i; ++k)
                    CHECK(m[i][k] == 0);
            }
        }
    }
}

TEST_CASE("exact sequence for small groups") {
    auto c2 = ctx_of("C2");
    SequenceReport rep = verify_exact_sequence(c2.table(1), 2);
    CHECK(rep.all_pass());
    REQUIRE(rep.checks.size() == 3);

    // p not dividing |G|: all moduli 1, vacuous pass.
    SequenceReport rep5 = verify_exact_sequence(c2.table(1), 5);
    CHECK(rep5.all_pass());

    auto s3 = ctx_of("S3");
    for (unsigned p : {2u, 3u})
        CHECK(verify_exact_sequence(s3.table(1), p).all_pass());

    for (const char* spec : {"D8", "A4", "Q8", "C12", "S4"}) {
        auto ctx = ctx_of(spec);
        for (int n : {0, 1})
            CHECK_MESSAGE(check_exact_sequence(ctx, n).pass, spec, " n=", n);
    }
}
