#include "lform/bezout.hpp"
#include "lform/parse.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lform;
using lform::testing::Rng;

static LaurentPoly P(const std::string& s) { return parse_poly(s); }

TEST_CASE("integer Bezout") {
    auto r = bezout_one(P("2"), P("3"));
    REQUIRE(r.found());
    CHECK(r.x == LaurentPoly(-1));
    CHECK(r.y == LaurentPoly(1));
    CHECK(P("2") * r.x + P("3") * r.y == LaurentPoly(1));
}

TEST_CASE("unit shortcuts") {
    auto r = bezout_one(P("t^2 - 7"), P("1"));
    REQUIRE(r.found());
    CHECK(r.x == LaurentPoly(0));
    CHECK(r.y == LaurentPoly(1));

    auto s = bezout_one(P("-t^3"), P("2 - t"));
    REQUIRE(s.found());
    CHECK(P("-t^3") * s.x + P("2 - t") * s.y == LaurentPoly(1));
}

TEST_CASE("certified impossible") {
    auto r = bezout_one(P("2"), P("2"));
    CHECK(r.impossible());

    auto s = bezout_one(P("t - 1"), P("t^2 - 1"));
    CHECK(s.impossible());

    auto z = bezout_one(LaurentPoly(0), LaurentPoly(0));
    CHECK(z.impossible());

    // no integer obstruction, but common irreducible factor mod 2
    auto w = bezout_one(P("t + 1"), P("t^2 + 1"));
    CHECK(w.impossible());
}

TEST_CASE("polynomial witnesses via extended Euclid") {
    auto r = bezout_one(P("t - 1"), P("t - 2"));
    REQUIRE(r.found());
    CHECK(P("t - 1") * r.x + P("t - 2") * r.y == LaurentPoly(1));

    // symmetric shifted pair used by the unit-count construction
    auto s = bezout_one(P("2 - t - t^-1"), P("3 - t - t^-1"));
    REQUIRE(s.found());
    CHECK(P("2 - t - t^-1") * s.x + P("3 - t - t^-1") * s.y == LaurentPoly(1));
}

TEST_CASE("window search solves cases with rational Euclid denominators") {
    // gcd over Q[t] is 1 but the naive witnesses have denominators:
    // (2t - 1, t) -> x = -1, y = 2 works.
    auto r = bezout_one(P("2*t - 1"), P("t"));
    REQUIRE(r.found());
    CHECK(P("2*t - 1") * r.x + P("t") * r.y == LaurentPoly(1));

    // needs a Laurent witness: (t-2)t^-1 + 2t^-1 = 1
    auto s = bezout_one(P("t - 2"), P("2"));
    REQUIRE(s.found());
    CHECK(P("t - 2") * s.x + P("2") * s.y == LaurentPoly(1));

    // (2t-1, 3) lies in the maximal ideal (3, t+1)
    auto w = bezout_one(P("2*t - 1"), P("3"));
    CHECK(w.impossible());
}

TEST_CASE("success implies exact identity (randomized recheck)") {
    Rng rng(404);
    int found = 0;
    for (int i = 0; i < 200; ++i) {
        const auto a = testing::rand_poly(rng), b = testing::rand_poly(rng);
        auto r = bezout_one(a, b);
        if (r.found()) {
            ++found;
            CHECK(a * r.x + b * r.y == LaurentPoly(1));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("bounded linear solver finds planted solutions (randomized)") {
    Rng rng(888);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::vector<LaurentPoly>> coeffs(2, std::vector<LaurentPoly>(3));
        for (auto& row : coeffs)
            for (auto& e : row) e = testing::rand_poly(rng, 2, 3);
        std::vector<LaurentPoly> planted(3);
        for (auto& x : planted) x = testing::rand_poly(rng, 2, 3);
        std::vector<LaurentPoly> rhs(2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t j = 0; j < 3; ++j) rhs[r] += coeffs[r][j] * planted[j];
        const auto sol = solve_poly_linear(coeffs, rhs, -2, 2);
        REQUIRE(sol.has_value());
        for (std::size_t r = 0; r < 2; ++r) {
            LaurentPoly s;
            for (std::size_t j = 0; j < 3; ++j) s += coeffs[r][j] * (*sol)[j];
            CHECK(s == rhs[r]);
        }
    }
}

TEST_CASE("bounded linear solver rejects unsolvable systems") {
    // 2x = 1 has no integral solution in any window
    std::vector<std::vector<LaurentPoly>> coeffs{{LaurentPoly(2)}};
    CHECK_FALSE(solve_poly_linear(coeffs, {LaurentPoly(1)}, -3, 3).has_value());
}

TEST_CASE("ideal verdicts") {
    auto v1 = ideal_verdict({P("2"), P("t - 1")});
    CHECK(v1.status == IdealVerdict::Status::proper); // the F_2 example

    auto v2 = ideal_verdict({P("2"), P("3")});
    CHECK(v2.status == IdealVerdict::Status::unit);

    auto v3 = ideal_verdict({P("2*t - 2"), P("4")});
    CHECK(v3.status == IdealVerdict::Status::proper);

    // both generators lie in (2, t+1)
    auto v4 = ideal_verdict({P("t - 1"), P("t + 1")});
    CHECK(v4.status == IdealVerdict::Status::proper);

    auto v5 = ideal_verdict({LaurentPoly(0), LaurentPoly(0)});
    CHECK(v5.status == IdealVerdict::Status::proper);

    auto v6 = ideal_verdict({P("t - 1"), P("t")});
    CHECK(v6.status == IdealVerdict::Status::unit);

    auto v7 = ideal_verdict({P("t - 2"), P("2")});
    CHECK(v7.status == IdealVerdict::Status::unit);
}
