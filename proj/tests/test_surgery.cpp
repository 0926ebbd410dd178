#include "lform/surgery.hpp"
#include "lform/parse.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lform;
using lform::testing::Rng;

static LaurentPoly P(const std::string& s) { return parse_poly(s); }
static RatFun F(const std::string& s) { return parse_ratfun(s); }

TEST_CASE("dual matrix on scalars") {
    RatFunMatrix m(1, 1);
    m(0, 0) = RatFun(-1) / F("2 - t - t^-1");
    const auto d = dual_matrix(EquivLinkingMatrix(m));
    CHECK(d.matrix()(0, 0) == F("2 - t - t^-1"));
}

TEST_CASE("dual is involutive up to the two signs (randomized)") {
    Rng rng(321);
    for (int i = 0; i < 40; ++i) {
        // Hermitian over Q(t) built from a random Hermitian polynomial matrix
        const auto h = testing::rand_hermitian(rng, 2);
        const EquivLinkingMatrix a(to_ratfun_matrix(h));
        const auto dd = dual_matrix(dual_matrix(a));
        CHECK(dd.matrix() == a.matrix());
        // A · dual(A) = -I exactly
        const auto prod = a.matrix() * dual_matrix(a).matrix();
        CHECK(prod == -RatFunMatrix::identity(2));
        CHECK(check_framing_symmetry(dual_matrix(a)));
    }
}

TEST_CASE("framing symmetry") {
    RatFunMatrix bad(1, 1);
    bad(0, 0) = F("t");
    CHECK_FALSE(check_framing_symmetry(bad));
    CHECK_THROWS_AS(EquivLinkingMatrix(bad), std::invalid_argument); // t is not Hermitian 1x1

    RatFunMatrix good(1, 1);
    good(0, 0) = F("2 - t - t^-1");
    CHECK(check_framing_symmetry(EquivLinkingMatrix(good)));
}

TEST_CASE("alexander transform examples") {
    RatFunMatrix a(1, 1);
    a(0, 0) = RatFun(3);
    const auto t1 = alexander_transform(OrderPoly(LaurentPoly(1)), EquivLinkingMatrix(a));
    REQUIRE(t1.order.has_value());
    CHECK(t1.order->representative() == P("3"));

    // Δ_Y = q symmetric, A = (-1/q): product = -1 ≐ 1
    const LaurentPoly q = P("2 - t - t^-1");
    RatFunMatrix b(1, 1);
    b(0, 0) = RatFun(-1) / RatFun(q);
    const auto t2 = alexander_transform(OrderPoly(q), EquivLinkingMatrix(b));
    CHECK(doteq(t2.product, RatFun(1)).has_value());
}

TEST_CASE("realisation report on a scalar form") {
    const auto rep = realisation_report(HermitianForm(PolyMatrix::from_rows({{P("12")}})));
    CHECK(rep.all_passed);
    CHECK(rep.linking_matrix(0, 0) == F("-1 / 12"));
    CHECK(doteq(rep.delta_y.representative(), P("12")).has_value());
}

TEST_CASE("realisation report on the hyperbolic form") {
    const auto rep = realisation_report(hyperbolic_h2());
    CHECK(rep.all_passed);
    CHECK(rep.framing_symmetric);
    CHECK(rep.dual_is_qt);
    CHECK(rep.order_matches_det);
    CHECK(rep.alexander_trivial);
    CHECK(rep.les_torsion_matches);
}

TEST_CASE("realisation report passes on random Hermitian forms") {
    Rng rng(4242);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        const HermitianForm q(testing::rand_hermitian(rng, dim(rng)));
        const auto rep = realisation_report(q);
        CHECK(rep.all_passed);
    }
}

TEST_CASE("degenerate forms are rejected") {
    CHECK_THROWS_AS(realisation_report(HermitianForm(PolyMatrix(2, 2))), std::invalid_argument);
}
