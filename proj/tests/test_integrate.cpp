#include "wres/integrate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wres;

using RF = RationalFn<GaussRat>;

namespace {
const GaussRat I = GaussRat::i();
std::mt19937_64 rng(240601);
} // namespace

TEST_CASE("arctangent normalization: integral of 1/(1+xi^2) is pi") {
    RF f({GaussRat(1)}, {{I, 1}, {-I, 1}});
    CHECK(xi_n_integral(f, Contour::RealLine) == ScalarExpr::token(Sym::Pi));
    CHECK(xi_n_integral(f, Contour::GammaPlus) == ScalarExpr::token(Sym::Pi));
}

TEST_CASE("Gamma+ integral of 1/((xi-i)^2 (xi+i)^3) is -3 pi i / 8") {
    // derivative-formula oracle: 2 pi i * d/dxi[(xi+i)^-3] at xi = i
    //                          = 2 pi i * (-3)(2i)^-4 = -3 pi i/8
    RF f({GaussRat(1)}, {{I, 2}, {-I, 3}});
    ScalarExpr got = xi_n_integral(f, Contour::GammaPlus);
    ScalarExpr expect =
        ScalarExpr(GaussRat(Rat(0), Rat(-3, 8))) * ScalarExpr::token(Sym::Pi);
    CHECK(got == expect);
}

TEST_CASE("odd integrand vanishes") {
    RF f({GaussRat(0), GaussRat(1)}, {{I, 2}, {-I, 2}});
    CHECK(xi_n_integral(f, Contour::RealLine).is_zero());
}

TEST_CASE("slow decay is rejected on the real line but allowed on Gamma+") {
    RF f({GaussRat(1)}, {{I, 1}});
    CHECK_THROWS_AS(xi_n_integral(f, Contour::RealLine), std::domain_error);
    CHECK(!xi_n_integral(f, Contour::GammaPlus).is_zero());
}

TEST_CASE("reflection antisymmetry of the residue sum") {
    // f(xi) -> conj-reflected f(-xi) with i -> -i flips the UHP residue sum
    std::uniform_int_distribution<int> cn(-5, 5), mult(1, 3);
    for (int it = 0; it < 60; ++it) {
        int mp = mult(rng), mm = mult(rng);
        std::vector<GaussRat> num(mp + mm >= 2 ? mp + mm - 2 : 0);
        if (num.empty())
            num.push_back(GaussRat(1));
        for (auto& c : num)
            c = GaussRat(Rat(cn(rng)), Rat(cn(rng)));
        RF f(num, {{I, mp}, {-I, mm}});
        if (!f.is_proper() || f.den_degree() - f.num_degree() < 2)
            continue;
        // reflected function: xi -> -xi and i -> -i maps the computation to
        // its mirror; the UHP residue sums are conjugate-antisymmetric, so
        // the integrals are complex conjugates
        std::vector<GaussRat> rnum;
        GaussRat sign = (mp + mm) % 2 ? GaussRat(-1) : GaussRat(1);
        for (size_t k = 0; k < num.size(); ++k) {
            GaussRat c = num[k].conj() * sign;
            if (k % 2 == 1)
                c = -c;
            rnum.push_back(c);
        }
        RF g(rnum, {{I, mp}, {-I, mm}});
        GaussRat sf = f.residues_upper_half_plane();
        GaussRat sg = g.residues_upper_half_plane();
        CHECK((sg + sf.conj()).is_zero());
        ScalarExpr a = xi_n_integral(f, Contour::RealLine);
        ScalarExpr b = xi_n_integral(g, Contour::RealLine);
        GaussRat ca, cb;
        for (auto& [m, c] : a.terms())
            ca = c;
        for (auto& [m, c] : b.terms())
            cb = c;
        CHECK(ca == cb.conj());
    }
}

TEST_CASE("sphere moments") {
    // odd moment
    XiPoly odd = XiPoly::var(1) * XiPoly::var(2) * XiPoly::var(3);
    CHECK(sphere_integral(odd, 3).is_zero());
    // total measure
    CHECK(sphere_integral(XiPoly(1), 3) == ScalarExpr::token(Sym::Omega));
    // xi_1^2 over S^2 in R^3: Omega/3
    CHECK(sphere_integral(XiPoly::var(1, 2), 3) ==
          ScalarExpr::token(Sym::Omega).scaled(GaussRat(Rat(1, 3))));
    // sum_i xi_i^2 integrates to the total measure, any m
    for (int m : {3, 5}) {
        XiPoly s;
        for (int i = 1; i <= m; ++i)
            s += XiPoly::var(i, 2);
        CHECK(sphere_integral(s, m) == ScalarExpr::token(Sym::Omega));
    }
    // degree-4 moments: xi_1^4 -> 3 Omega/(m(m+2)), xi_1^2 xi_2^2 -> Omega/(m(m+2))
    CHECK(sphere_integral(XiPoly::var(1, 4), 5) ==
          ScalarExpr::token(Sym::Omega).scaled(GaussRat(Rat(3, 35))));
    CHECK(sphere_integral(XiPoly::var(1, 2) * XiPoly::var(2, 2), 5) ==
          ScalarExpr::token(Sym::Omega).scaled(GaussRat(Rat(1, 35))));
    // linearity with ScalarExpr coefficients
    XiPoly p = XiPoly::var(1, 2).scaled(ScalarExpr::token(Sym::Hp));
    CHECK(sphere_integral(p, 3) ==
          ScalarExpr::token(Sym::Hp).scaled(GaussRat(Rat(1, 3))) *
              ScalarExpr::token(Sym::Omega));
    // a variable beyond xi_m is rejected
    CHECK_THROWS_AS(sphere_integral(XiPoly::var(4), 3), std::domain_error);
}
