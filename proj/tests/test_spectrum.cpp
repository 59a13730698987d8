#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/idempotents.hpp"
#include "burnside/spectrum.hpp"
#include "burnside/verify.hpp"
#include "helpers.hpp"

using namespace burnside;

namespace {

Slice slice_by_orders(const SliceClassTable& t, const std::vector<unsigned>& orders) {
    for (const Slice& s : t.classes) {
        bool match = true;
        for (size_t k = 0; k < orders.size(); ++k)
            match = match && t.lattice->order_of(s[k]) == orders[k];
        if (match)
            return s;
    }
    throw std::runtime_error("no class with those orders");
}

} // namespace

TEST_CASE("one Sylow closure step in S3") {
    auto ctx = ctx_of("S3");
    TablePtr t = ctx.table(1);
    Slice bottom = slice_by_orders(*t, {1, 1});

    Slice plus2 = slice_plus_p(*t, bottom, 2);
    CHECK(ctx.lattice()->order_of(plus2[0]) == 2);
    CHECK(ctx.lattice()->order_of(plus2[1]) == 2);

    // p not dividing |N|: unchanged. 5 does not divide 6.
    CHECK(slice_plus_p(*t, bottom, 5) == bottom);

    // The top slice is fixed by every prime.
    Slice top = slice_by_orders(*t, {6, 6});
    CHECK(slice_plus_p(*t, top, 2) == top);
    CHECK(slice_plus_p(*t, top, 3) == top);
}

TEST_CASE("iterated closure reaches a p'-class") {
    auto ctx = ctx_of("S3");
    TablePtr t = ctx.table(1);
    Slice bottom = slice_by_orders(*t, {1, 1});

    Slice inf2 = slice_infinity(t, bottom, 2);
    CHECK(ctx.lattice()->order_of(inf2[0]) == 2);
    CHECK(t->weyl[t->class_of(inf2)] == 1);

    Slice inf3 = slice_infinity(t, bottom, 3);
    CHECK(ctx.lattice()->order_of(inf3[0]) == 3);
    CHECK(t->weyl[t->class_of(inf3)] == 2);

    // Already fixed classes stay fixed.
    for (size_t c = 0; c < t->class_count(); ++c)
        for (unsigned p : {2u, 3u})
            if (p_part(t->weyl[c], p) == 1)
                CHECK(slice_infinity_class(t, static_cast<int>(c), p) == static_cast<int>(c));
}

TEST_CASE("closure is independent of the conjugate chosen") {
    auto ctx = ctx_of("S4");
    TablePtr t = ctx.table(1);
    const FiniteGroup& g = *ctx.group();
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int cls = std::uniform_int_distribution<int>(
            0, static_cast<int>(t->class_count()) - 1)(rng);
        uint16_t e = static_cast<uint16_t>(
            std::uniform_int_distribution<int>(0, g.order() - 1)(rng));
        Slice conj = t->conjugate(t->classes[cls], e);
        for (unsigned p : {2u, 3u})
            CHECK(t->class_of(slice_infinity(t, conj, p)) ==
                  slice_infinity_class(t, cls, p));
    }
}

TEST_CASE("normalized prime ideals") {
    auto ctx = ctx_of("S3");
    TablePtr t = ctx.table(1);
    int bottom = t->class_of(slice_by_orders(*t, {1, 1}));

    PrimeIdeal i0 = normalize_ideal(t, bottom, 0);
    CHECK(i0.cls == bottom);
    CHECK(i0.characteristic == 0);

    PrimeIdeal i2 = normalize_ideal(t, bottom, 2);
    CHECK(ctx.lattice()->order_of(t->classes[i2.cls][0]) == 2);
    // The normalized class has phi_K(<K>) prime to p.
    CHECK(p_part(t->weyl[i2.cls], 2) == 1);
    CHECK_THROWS_AS(normalize_ideal(t, bottom, 6), input_error);

    // Containment: reflexive; char 0 below char p via the arrow map.
    CHECK(ideal_contains(t, i2, i2));
    CHECK(ideal_contains(t, i2, i0));
    CHECK_FALSE(ideal_contains(t, i0, i2));
}

TEST_CASE("containment is a partial order with characteristic-0 ideals minimal") {
    for (const char* spec : {"S3", "D8", "A4"}) {
        auto ctx = ctx_of(spec);
        TablePtr t = ctx.table(1);
        std::vector<PrimeIdeal> ideals;
        for (size_t c = 0; c < t->class_count(); ++c) {
            ideals.push_back(normalize_ideal(t, static_cast<int>(c), 0));
            for (unsigned p : prime_divisors(ctx.group()->order()))
                ideals.push_back(normalize_ideal(t, static_cast<int>(c), p));
        }
        for (const PrimeIdeal& i : ideals) {
            CHECK(ideal_contains(t, i, i));
            for (const PrimeIdeal& j : ideals) {
                if (ideal_contains(t, i, j) && ideal_contains(t, j, i))
                    CHECK(i == j);
                // Nothing of positive characteristic sits inside a
                // characteristic-0 ideal.
                if (i.characteristic == 0 && j.characteristic > 0)
                    CHECK_FALSE(ideal_contains(t, i, j));
                for (const PrimeIdeal& k : ideals)
                    if (ideal_contains(t, i, j) && ideal_contains(t, j, k))
                        CHECK(ideal_contains(t, i, k));
            }
        }
    }
}

TEST_CASE("p-local idempotents") {
    // p not dividing |G|: every class is p'-fixed, e~ = e.
    auto c3 = ctx_of("C3");
    TablePtr t3 = c3.table(0);
    for (size_t c = 0; c < t3->class_count(); ++c)
        CHECK(p_local_idempotent(t3, static_cast<int>(c), 2) ==
              idempotent(t3, static_cast<int>(c)));

    // C2 at degree 0, p = 2: classes 1 and C2 merge into e_n.
    auto c2 = ctx_of("C2");
    TablePtr t2 = c2.table(0);
    QBurnsideElt merged = p_local_idempotent(t2, 1, 2);
    CHECK(merged == basis_elt<Rat>(t2, t2->unit_class()));
    CHECK_THROWS_AS(p_local_idempotent(t2, 0, 2), input_error);

    for (const std::string& spec : testing::named_groups_up_to(24)) {
        auto ctx = ctx_of(spec);
        CheckResult r = check_p_local_idempotents(ctx, 0);
        CHECK_MESSAGE(r.pass, spec, ": ", r.detail);
    }
}

TEST_CASE("components of the spectrum") {
    for (const char* spec : {"S3", "S4", "D8", "Q8", "C12"}) {
        auto ctx = ctx_of(spec);
        for (int n : {0, 1})
            CHECK_MESSAGE(connected_components(ctx.table(n)).size() == 1, spec, " n=", n);
    }
    auto a5 = GroupCtx(named_group("A5"));
    CHECK(connected_components(a5.table(0)).size() == 2);
    CHECK(connected_components(a5.table(1)).size() == 3);
    CHECK_FALSE(is_spec_connected(a5.table(0)));
}

TEST_CASE("connectedness matches solvability") {
    for (const std::string& spec : testing::named_groups_up_to(24)) {
        auto ctx = ctx_of(spec);
        CHECK_MESSAGE(is_spec_connected(ctx.table(0)) == is_solvable(*ctx.lattice()), spec);
        CheckResult r = check_spectrum(ctx, 1);
        CHECK_MESSAGE(r.pass, spec, ": ", r.detail);
    }
}
