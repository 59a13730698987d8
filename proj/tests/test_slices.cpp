#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/verify.hpp"
#include "helpers.hpp"

using namespace burnside;

TEST_CASE("slice class counts") {
    CHECK(ctx_of("C2").table(1)->class_count() == 3);
    CHECK(ctx_of("S3").table(1)->class_count() == 9);
    CHECK(ctx_of("C1").table(2)->class_count() == 1);

    // Degree 0 classes are the subgroup conjugacy classes.
    for (const std::string& spec : testing::named_groups_up_to(24)) {
        auto ctx = ctx_of(spec);
        CHECK_MESSAGE(ctx.table(0)->class_count() == ctx.lattice()->class_reps().size(),
                      spec);
    }
}

TEST_CASE("C2 degree 1 classes are (1,1), (1,C2), (C2,C2)") {
    auto ctx = ctx_of("C2");
    TablePtr t = ctx.table(1);
    REQUIRE(t->class_count() == 3);
    CHECK(t->classes[0] == Slice{0, 0});
    CHECK(t->classes[1] == Slice{0, 1});
    CHECK(t->classes[2] == Slice{1, 1});
    CHECK(t->weyl[0] == 2);
    CHECK(t->weyl[1] == 2);
    CHECK(t->weyl[2] == 1);
}

TEST_CASE("slice cap raises") {
    auto lat = ctx_of("S4").lattice();
    CHECK_THROWS_AS(enumerate_slice_classes(lat, 2, 10), size_cap_error);
}

TEST_CASE("class order is a partial order compatible with the index") {
    for (const char* spec : {"C2", "S3", "A4", "D8"}) {
        auto ctx = ctx_of(spec);
        for (int n : {0, 1, 2}) {
            TablePtr t = ctx.table(n);
            size_t m = t->class_count();
            for (size_t a = 0; a < m; ++a) {
                CHECK(t->leq_classes(static_cast<int>(a), static_cast<int>(a)));
                for (size_t b = 0; b < m; ++b) {
                    if (t->leq_classes(static_cast<int>(a), static_cast<int>(b))) {
                        CHECK(a <= b); // linear extension
                        if (t->leq_classes(static_cast<int>(b), static_cast<int>(a)))
                            CHECK(a == b); // antisymmetry up to conjugacy
                    }
                    for (size_t c = 0; c < m; ++c)
                        if (t->leq_classes(static_cast<int>(a), static_cast<int>(b)) &&
                            t->leq_classes(static_cast<int>(b), static_cast<int>(c)))
                            CHECK(t->leq_classes(static_cast<int>(a), static_cast<int>(c)));
                }
            }
        }
    }
}

TEST_CASE("conjugation invariance of classes") {
    auto ctx = ctx_of("S4");
    TablePtr t = ctx.table(1);
    const FiniteGroup& g = *ctx.group();
    for (size_t cls = 0; cls < t->class_count(); ++cls)
        for (unsigned e = 0; e < g.order(); ++e)
            CHECK(t->class_of(t->conjugate(t->classes[cls], static_cast<uint16_t>(e))) ==
                  static_cast<int>(cls));
}

TEST_CASE("Mobius on the slice poset: hand values in C2, n = 1") {
    auto ctx = ctx_of("C2");
    TablePtr t = ctx.table(1);
    Slice bottom{0, 0}, mid{0, 1}, top{1, 1};
    CHECK(mobius_pi(*t, mid, mid) == 1);
    CHECK(mobius_pi(*t, mid, top) == -1);
    // Interleaving fails: C2 <= 1 is false.
    CHECK(mobius_pi(*t, bottom, top) == 0);
    CHECK(mobius_pi_recursive(*t, bottom, top) == 0);
    CHECK(mobius_pi_recursive(*t, mid, top) == -1);
}

TEST_CASE("Mobius product formula equals poset recursion") {
    for (const char* spec : {"C2", "C6", "S3", "D8", "A4", "Q8"}) {
        auto ctx = ctx_of(spec);
        for (int n : {0, 1, 2}) {
            CheckResult r = check_mobius_equivalence(ctx, n);
            CHECK_MESSAGE(r.pass, spec, " n=", n, ": ", r.detail);
        }
    }
}

TEST_CASE("mark is constant on conjugacy classes") {
    auto ctx = ctx_of("S4");
    TablePtr t = ctx.table(1);
    const SubgroupLattice& lat = *ctx.lattice();
    const FiniteGroup& g = *ctx.group();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int i = std::uniform_int_distribution<int>(0, static_cast<int>(t->class_count()) - 1)(rng);
        int j = std::uniform_int_distribution<int>(0, static_cast<int>(t->class_count()) - 1)(rng);
        uint16_t a = static_cast<uint16_t>(
            std::uniform_int_distribution<int>(0, g.order() - 1)(rng));
        uint16_t b = static_cast<uint16_t>(
            std::uniform_int_distribution<int>(0, g.order() - 1)(rng));
        CHECK(mark_slices(lat, t->conjugate(t->classes[i], a),
                          t->conjugate(t->classes[j], b)) == t->marks[i][j]);
    }
}

TEST_CASE("chain parsing round trip") {
    auto ctx = ctx_of("S3");
    TablePtr t = ctx.table(1);
    for (size_t cls = 0; cls < t->class_count(); ++cls) {
        Slice parsed = t->parse_chain(t->chain_string(static_cast<int>(cls)));
        CHECK(t->class_of(parsed) == static_cast<int>(cls));
    }
    CHECK_THROWS_AS(t->parse_chain("1"), input_error);
    CHECK_THROWS_AS(t->parse_chain("1 <= 5"), input_error);
}
