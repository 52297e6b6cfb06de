#include "wres/exterior_rep.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wres;

TEST_CASE("n = 1 matrix of c(e_1) on the basis {1, e_1}") {
    ExtMatrix c = build_c(1, 1);
    CHECK(c(0, 0) == GaussRat(0));
    CHECK(c(0, 1) == GaussRat(-1));
    CHECK(c(1, 0) == GaussRat(1));
    CHECK(c(1, 1) == GaussRat(0));
}

TEST_CASE("the two-action anticommutation relations hold as matrix identities up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        int dim = 1 << n;
        ExtMatrix id = ExtMatrix::identity(dim);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                GaussRat delta = i == j ? GaussRat(1) : GaussRat(0);
                ExtMatrix ci = build_c(i, n), cj = build_c(j, n);
                ExtMatrix hi = build_chat(i, n), hj = build_chat(j, n);
                CHECK(hi * hj + hj * hi == id.scaled(GaussRat(2) * delta));
                CHECK(ci * cj + cj * ci == id.scaled(GaussRat(-2) * delta));
                CHECK((ci * hj + hj * ci).is_zero());
            }
    }
}

TEST_CASE("c(e_j)^2 = -identity and trace normalization") {
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            ExtMatrix c = build_c(j, n);
            CHECK(c * c == -ExtMatrix::identity(1 << n));
        }
    CHECK(ExtMatrix::identity(16).trace() == GaussRat(16));
}

TEST_CASE("oracle traces of pinned words") {
    CHECK(oracle_trace({gen_c(1), gen_c(1)}, 4) == GaussRat(-16));
    CHECK(oracle_trace({gen_c(1), gen_c(2)}, 4) == GaussRat(0));
    CHECK(oracle_trace({gen_c(1), gen_chat(2), gen_chat(2), gen_c(1)}, 4) == GaussRat(-16));
    CHECK(oracle_trace({gen_c(4), gen_c(4)}, 6) == GaussRat(-64));
}

TEST_CASE("size guard and JET rejection") {
    CHECK_THROWS_AS(build_c(1, 9), std::out_of_range);
    CHECK_THROWS_AS(oracle_trace({gen_jet(1)}, 4), std::domain_error);
}
