#include "wres/rational_fn.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wres;

using RF = RationalFn<GaussRat>;

namespace {

const GaussRat I = GaussRat::i();

std::mt19937_64 rng(5150123);

RF random_proper_pm_i() {
    // random proper rational with poles at +-i only
    std::uniform_int_distribution<int> mult(1, 3), num(-6, 6);
    int mp = mult(rng), mm = mult(rng);
    int deg = mp + mm - 1;
    std::vector<GaussRat> n(deg + 1);
    for (auto& c : n)
        c = GaussRat(Rat(num(rng)), Rat(num(rng)));
    return RF(n, {{I, mp}, {-I, mm}});
}

} // namespace

TEST_CASE("two simple poles split") {
    // 1/((xi-i)(xi+i)) = (1/2i)/(xi-i) - (1/2i)/(xi+i)
    RF f({GaussRat(1)}, {{I, 1}, {-I, 1}});
    auto pf = f.partial_fractions();
    REQUIRE(pf.poly.empty());
    REQUIRE(pf.terms.size() == 2);
    GaussRat half_over_i = GaussRat(1) / (GaussRat(2) * I);
    for (auto& t : pf.terms) {
        CHECK(t.order == 1);
        if (t.root == I)
            CHECK(t.coeff == half_over_i);
        else
            CHECK(t.coeff == -half_over_i);
    }
    CHECK(RF::from_partial_fractions(pf) == f);
}

TEST_CASE("upper-half-plane part of (a + xi b)/((xi-i)^2 (xi+i)^2)") {
    // Taylor oracle at xi = i gives -(a+ib)/(4 (xi-i)^2) - i a/(4 (xi-i));
    // cross-checks the projection used in the boundary computations.
    std::uniform_int_distribution<int> cnum(-9, 9);
    for (int it = 0; it < 25; ++it) {
        GaussRat a(Rat(cnum(rng)), Rat(cnum(rng)));
        GaussRat b(Rat(cnum(rng)), Rat(cnum(rng)));
        RF f({a, b}, {{I, 2}, {-I, 2}});
        RF up = pi_plus(f);
        GaussRat quarter(Rat(1, 4));
        RF expected =
            RF({-(a + I * b) * quarter}, {{I, 2}}) + RF({-I * a * quarter}, {{I, 1}});
        CHECK(up == expected);
    }
}

TEST_CASE("improper input: polynomial part is recovered exactly") {
    // xi^2/(xi-i)^2 = 1 + 2i/(xi-i) - 1/(xi-i)^2
    RF f({GaussRat(0), GaussRat(0), GaussRat(1)}, {{I, 2}});
    auto pf = f.partial_fractions();
    REQUIRE(pf.poly.size() == 1);
    CHECK(pf.poly[0] == GaussRat(1));
    CHECK(RF::from_partial_fractions(pf) == f);
    CHECK_THROWS_AS(pi_plus(f), std::domain_error);
}

TEST_CASE("repeated root listed twice is rejected") {
    CHECK_THROWS_AS(RF({GaussRat(1)}, {{I, 1}, {I, 2}}), std::invalid_argument);
}

TEST_CASE("real pole is rejected by pi_plus") {
    RF f({GaussRat(1)}, {{GaussRat(0), 1}, {I, 1}});
    CHECK_THROWS_AS(pi_plus(f), std::domain_error);
}

TEST_CASE("partial fractions recombine to the identity on random inputs") {
    for (int it = 0; it < 200; ++it) {
        RF f = random_proper_pm_i();
        CHECK(RF::from_partial_fractions(f.partial_fractions()) == f);
    }
}

TEST_CASE("pi_plus idempotent and pi_plus + pi_minus = id on 200 random inputs") {
    for (int it = 0; it < 200; ++it) {
        RF f = random_proper_pm_i();
        RF up = pi_plus(f);
        CHECK(pi_plus(up) == up);
        CHECK(up + pi_minus(f) == f);
    }
}

TEST_CASE("derivative matches the quotient rule") {
    // d/dxi [1/(xi-i)] = -1/(xi-i)^2
    RF f({GaussRat(1)}, {{I, 1}});
    CHECK(f.derivative() == RF({GaussRat(-1)}, {{I, 2}}));
    // product rule on random samples: (fg)' = f'g + fg'
    for (int it = 0; it < 40; ++it) {
        RF f1 = random_proper_pm_i(), f2 = random_proper_pm_i();
        CHECK((f1 * f2).derivative() == f1.derivative() * f2 + f1 * f2.derivative());
    }
}

TEST_CASE("cancellation keeps representations canonical") {
    // (xi^2+1)/((xi-i)^2(xi+i)) = 1/(xi-i)
    RF f({GaussRat(1), GaussRat(0), GaussRat(1)}, {{I, 2}, {-I, 1}});
    CHECK(f == RF({GaussRat(1)}, {{I, 1}}));
    CHECK(f.den_degree() == 1);
}
