#include <doctest.h>

#include <vector>

#include "abelian/errors.hpp"
#include "chase_oracle.hpp"
#include "snake/brauer_fixture.hpp"
#include "snake/ladder.hpp"

using namespace abelian;
using snake::ConnectingWitness;
using snake::decode_ladder;
using snake::encode_ladder;
using snake::encode_six_term;
using snake::fermat_brauer_ladder;
using snake::LadderDiagram;
using snake::LadderReport;
using snake::SixTermSequence;
using snake::verify_ladder;

namespace {

Homomorphism hom(const FgAbelianGroup& a, const FgAbelianGroup& b,
                 std::initializer_list<std::initializer_list<long>> rows) {
    return Homomorphism(a, b, IntegerMatrix::from_rows(rows));
}

// 0 -> Z/2 -> Z/4 -> Z/2 -> 0 doubled onto itself by multiplication by 2
LadderDiagram doubling_ladder() {
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2), z4 = FgAbelianGroup::cyclic(4);
    LadderDiagram lad;
    lad.top_row = {hom(z2, z4, {{2}}), hom(z4, z2, {{1}})};
    lad.bottom_row = lad.top_row;
    lad.verticals = {Homomorphism::scalar(z2, 2), Homomorphism::scalar(z4, 2),
                     Homomorphism::scalar(z2, 2)};
    return lad;
}

long v_adic(long m, long l) {
    long v = 0;
    while (m % l == 0) m /= l, v++;
    return v;
}

} // namespace

TEST_CASE("doubling the 2-4-2 extension yields six order-2 terms") {
    LadderDiagram lad = doubling_ladder();
    CHECK(verify_ladder(lad).valid);
    SixTermSequence six = snake::snake(lad);
    for (const FgAbelianGroup& t : six.terms) CHECK(t.invariant_factors() == std::vector<Int>{2});
    chase::SnakeComparison cmp = chase::compare_snake_with_chase(lad, six);
    INFO(cmp.detail);
    CHECK(cmp.ok);
    CHECK(six.witnesses.size() == 1);
}

TEST_CASE("isomorphism verticals produce a vanishing sequence") {
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2), z4 = FgAbelianGroup::cyclic(4);
    LadderDiagram lad;
    lad.top_row = {hom(z2, z4, {{2}}), hom(z4, z2, {{1}})};
    lad.bottom_row = lad.top_row;
    lad.verticals = {Homomorphism::identity(z2), Homomorphism::identity(z4),
                     Homomorphism::identity(z2)};
    SixTermSequence six = snake::snake(lad);
    for (const FgAbelianGroup& t : six.terms) CHECK(t.is_trivial());
    chase::SnakeComparison cmp = chase::compare_snake_with_chase(lad, six);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("mixed vertical with kernel and cokernel in one column") {
    // 0 -> Z/3 -> Z/9 -> Z/3 -> 0 with verticals (x3, x3, 0)
    FgAbelianGroup z3 = FgAbelianGroup::cyclic(3), z9 = FgAbelianGroup::cyclic(9);
    LadderDiagram lad;
    lad.top_row = {hom(z3, z9, {{3}}), hom(z9, z3, {{1}})};
    lad.bottom_row = lad.top_row;
    lad.verticals = {Homomorphism::scalar(z3, 3), Homomorphism::scalar(z9, 3),
                     Homomorphism::scalar(z3, 3)};
    SixTermSequence six = snake::snake(lad);
    chase::SnakeComparison cmp = chase::compare_snake_with_chase(lad, six);
    INFO(cmp.detail);
    CHECK(cmp.ok);
    // x3 kills Z/3 entirely, and on Z/9 has kernel and cokernel of order 3
    CHECK(six.terms[0].order() == 3);
    CHECK(six.terms[1].order() == 3);
    CHECK(six.terms[2].order() == 3);
    CHECK(six.terms[3].order() == 3);
    CHECK(six.terms[4].order() == 3);
    CHECK(six.terms[5].order() == 3);
}

TEST_CASE("ladder verification pinpoints a non-commuting square") {
    FgAbelianGroup z9 = FgAbelianGroup::cyclic(9);
    LadderDiagram lad;
    lad.top_row = {Homomorphism::identity(z9)};
    lad.bottom_row = {Homomorphism::identity(z9)};
    lad.verticals = {Homomorphism::identity(z9), Homomorphism::scalar(z9, -1)};
    LadderReport rep = verify_ladder(lad);
    CHECK(!rep.valid);
    CHECK(rep.detail.find("square 0 does not commute") != std::string::npos);
}

TEST_CASE("ladder verification pinpoints an inexact row") {
    // zero into Z/4 followed by reduction onto Z/2: the kernel of the second
    // map strictly contains the image of the first
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2), z4 = FgAbelianGroup::cyclic(4);
    LadderDiagram lad;
    lad.top_row = {Homomorphism::zero(z2, z4), hom(z4, z2, {{1}})};
    lad.bottom_row = lad.top_row;
    lad.verticals = {Homomorphism::identity(z2), Homomorphism::identity(z4),
                     Homomorphism::identity(z2)};
    LadderReport rep = verify_ladder(lad);
    CHECK(!rep.valid);
    CHECK(rep.detail.find("top row is not exact at node 1") != std::string::npos);
}

TEST_CASE("ladder verification rejects mismatched shapes") {
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
    LadderDiagram lad;
    lad.top_row = {Homomorphism::identity(z2)};
    lad.bottom_row = {Homomorphism::identity(z2)};
    lad.verticals = {Homomorphism::identity(z2)};
    CHECK(verify_ladder(lad).detail.find("row lengths") != std::string::npos);

    lad.verticals = {Homomorphism::identity(z2), Homomorphism::identity(z2)};
    lad.top_labels = {"only one"};
    CHECK(verify_ladder(lad).detail.find("label count") != std::string::npos);
}

TEST_CASE("snake rejects diagrams outside its hypotheses") {
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2), z4 = FgAbelianGroup::cyclic(4);
    FgAbelianGroup z8 = FgAbelianGroup::cyclic(8);
    FgAbelianGroup zero = FgAbelianGroup::from_factors({});

    // two columns only
    LadderDiagram two;
    two.top_row = {Homomorphism::identity(z2)};
    two.bottom_row = {Homomorphism::identity(z2)};
    two.verticals = {Homomorphism::identity(z2), Homomorphism::identity(z2)};
    CHECK_THROWS_WITH_AS(snake::snake(two), doctest::Contains("three-column"), PreconditionError);

    // top-right map fails to be onto
    LadderDiagram notonto;
    notonto.top_row = {hom(z2, z4, {{2}}), Homomorphism::scalar(z4, 2)};
    notonto.bottom_row = notonto.top_row;
    notonto.verticals = {Homomorphism::identity(z2), Homomorphism::identity(z4),
                         Homomorphism::identity(z4)};
    CHECK_THROWS_WITH_AS(snake::snake(notonto), doctest::Contains("not surjective"), PreconditionError);

    // bottom-left map fails to be one-to-one
    LadderDiagram notinj;
    notinj.top_row = {Homomorphism::zero(zero, z2), Homomorphism::identity(z2)};
    notinj.bottom_row = {Homomorphism::zero(z2, z4), hom(z4, z8, {{2}})};
    notinj.verticals = {Homomorphism::zero(zero, z2), Homomorphism::zero(z2, z4),
                        Homomorphism::zero(z2, z8)};
    CHECK(verify_ladder(notinj).valid);
    CHECK_THROWS_WITH_AS(snake::snake(notinj), doctest::Contains("not injective"), PreconditionError);

    // broken ladders never reach the chase
    LadderDiagram broken = doubling_ladder();
    broken.verticals[1] = Homomorphism::scalar(z4, 1);
    CHECK_THROWS_WITH_AS(snake::snake(broken), doctest::Contains("invalid ladder"), PreconditionError);
}

TEST_CASE("comparison ladder kernels follow the prime valuation rule") {
    struct Tup {
        int m;
        long l;
        int r;
    };
    for (Tup t : {Tup{3, 3, 2}, Tup{4, 2, 3}, Tup{6, 2, 2}, Tup{6, 3, 1}, Tup{5, 5, 1},
                  Tup{9, 3, 4}, Tup{5, 2, 3}}) {
        CAPTURE(t.m);
        CAPTURE(t.l);
        CAPTURE(t.r);
        LadderDiagram lad = fermat_brauer_ladder(t.m, t.l, t.r);
        CHECK(verify_ladder(lad).valid);
        CHECK(is_exact_at(lad.top_row[0], lad.top_row[1]).exact);
        CHECK(is_exact_at(lad.bottom_row[0], lad.bottom_row[1]).exact);

        SixTermSequence six = snake::snake(lad);
        Int expected_kernel;
        long e = std::min(long(t.r), v_adic(t.m, t.l));
        mpz_ui_pow_ui(expected_kernel.get_mpz_t(), t.l, e);
        if (expected_kernel == 1) {
            CHECK(six.terms[0].is_trivial());
        } else {
            CHECK(six.terms[0].invariant_factors() == std::vector<Int>{expected_kernel});
        }
        // the middle kernel surjects onto the right one: no obstruction class
        CHECK(six.maps[1].is_surjective());
    }
}

TEST_CASE("comparison kernels aggregate multiplicatively over prime levels") {
    for (int m : {6, 10, 12}) {
        CAPTURE(m);
        Int product = 1;
        for (long l = 2; l <= m; l++) {
            if (!(m % l == 0)) continue;
            bool prime = l >= 2;
            for (long d = 2; d * d <= l; d++)
                if (l % d == 0) prime = false;
            if (!prime) continue;
            SixTermSequence six = snake::snake(fermat_brauer_ladder(m, l, 6));
            product *= six.terms[0].order();
        }
        CHECK(product == m);
    }
}

TEST_CASE("small comparison ladders agree with the exhaustive chase") {
    for (auto [m, l, r] : {std::tuple<int, long, int>{3, 3, 1}, {4, 2, 1}, {2, 2, 2}}) {
        CAPTURE(m);
        CAPTURE(l);
        CAPTURE(r);
        LadderDiagram lad = fermat_brauer_ladder(m, l, r);
        SixTermSequence six = snake::snake(lad);
        chase::SnakeComparison cmp = chase::compare_snake_with_chase(lad, six);
        INFO(cmp.detail);
        CHECK(cmp.ok);
    }
}

TEST_CASE("fixture construction rejects bad parameters") {
    CHECK_THROWS_WITH_AS(fermat_brauer_ladder(3, 4, 1), doctest::Contains("not prime"),
                         PreconditionError);
    CHECK_THROWS_AS(fermat_brauer_ladder(3, 3, 0), PreconditionError);
    CHECK_THROWS_AS(fermat_brauer_ladder(0, 3, 1), PreconditionError);
}

TEST_CASE("ladder serialization round-trips and validates") {
    LadderDiagram lad = fermat_brauer_ladder(6, 2, 2);
    lad.top_labels = {"A", "B", "C"};
    lad.bottom_labels = {"A'", "B'", "C'"};
    Json j = encode_ladder(lad);
    LadderDiagram back = decode_ladder(j);
    CHECK(back.top_labels == lad.top_labels);
    CHECK(back.verticals.size() == 3);
    for (int i = 0; i < 3; i++) {
        CHECK(back.verticals[i].matrix() == lad.verticals[i].matrix());
        CHECK(same_presentation(back.verticals[i].domain(), lad.verticals[i].domain()));
    }
    CHECK(dump_json(encode_ladder(back)) == dump_json(j));

    SixTermSequence six = snake::snake(back);
    Json enc = encode_six_term(six);
    CHECK(enc["terms"].size() == 6);
    CHECK(enc["terms"][0]["name"] == "ker_left");
    CHECK(enc["maps"].size() == 5);
    CHECK(enc["exact_interior"] == true);
    CHECK(enc["connecting_witnesses"].size() == six.witnesses.size());

    Json bad = j;
    bad["verticals"] = Json::array();
    CHECK(!verify_ladder(decode_ladder(bad)).valid);
    Json bad2 = j;
    bad2.erase("top_row");
    CHECK_THROWS_AS(decode_ladder(bad2), PreconditionError);
    Json bad3 = j;
    bad3["top_row"] = "nope";
    CHECK_THROWS_AS(decode_ladder(bad3), PreconditionError);
}
