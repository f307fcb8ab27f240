#include <doctest.h>

#include "lmod/posetmod.hpp"

using namespace lmod;

namespace {

Group Z(int r = 1) { return Group{r, {}}; }

}  // namespace

TEST_CASE("cohomology of hand-built complexes") {
    Complex c;
    c.deg = {0, 1};
    c.d = IntMatrix(2, 2);
    c.d(1, 0) = 2;
    auto H = cohomology(c);
    REQUIRE(H.deg.size() == 1);
    CHECK(H.deg.at(1) == Group{0, {2}});
    CHECK(H.str() == "Z/2[-1]");

    // cochains of a triangle boundary: vertices in degree 0, edges in degree 1
    Complex t;
    t.deg = {0, 0, 0, 1, 1, 1};
    t.d = IntMatrix(6, 6);
    int edges[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (int e = 0; e < 3; ++e) {
        t.d(3 + e, edges[e][0]) = -1;
        t.d(3 + e, edges[e][1]) = 1;
    }
    auto T = cohomology(t);
    CHECK(T.deg.at(0) == Z());
    CHECK(T.deg.at(1) == Z());
    CHECK(T.total_rank() == 2);
}

TEST_CASE("induced rank of a chain map") {
    // a: one cocycle in degree 1; b: e0 -> e1, acyclic
    Complex a;
    a.deg = {1};
    a.d = IntMatrix(1, 1);
    Complex b;
    b.deg = {0, 1};
    b.d = IntMatrix(2, 2);
    b.d(1, 0) = 1;
    IntMatrix f(2, 1);
    f(1, 0) = 1;
    CHECK((b.d * f) == (f * a.d));
    for (auto& [d, r] : induced_rank(a, b, f)) CHECK(r == 0);

    // c: a cocycle in degree 1 next to a free class in degree 0
    Complex c;
    c.deg = {0, 1};
    c.d = IntMatrix(2, 2);
    IntMatrix g(2, 1);
    g(1, 0) = 3;
    auto rk = induced_rank(a, c, g);
    CHECK(rk[1] == 1);
}

TEST_CASE("constant module") {
    auto M = constant_module(3);
    CHECK(satisfies_condition(M));
    for (Mask q : M.faces()) CHECK(local_cohomology(M, q).str() == "Z");
    CHECK(supported_local_cohomology(M, M.top).str() == "Z");
    CHECK(supported_local_cohomology(M, 3).is_zero());
}

TEST_CASE("rank 1 truncation at the base") {
    for (int n = -2; n <= 2; ++n) {
        TruncationProfile p(1);
        p.cutoff[0] = Cutoff::at(n);
        std::vector<bool> eff;
        auto M = build_from_profile(p, nullptr, &eff);
        CHECK(satisfies_condition(M));
        CHECK(eff[0] == (n < 0));
        CHECK(supported_local_cohomology(M, 1).str() == (n < 0 ? "0" : "Z"));
        // local cohomology at the base lives in degrees <= n
        auto H = local_cohomology(M, 0);
        if (!H.is_zero()) CHECK(H.max_degree() <= n);
    }
    bool changed = true;
    auto M = truncate_at(constant_module(2), 0, Cutoff::never(), &changed);
    CHECK_FALSE(changed);
    CHECK(supported_local_cohomology(M, 3).str() == "Z");
}

TEST_CASE("condition violations are detected") {
    PosetModule M;
    M.r = 1;
    M.top = 1;
    M.deg = {{1, 2}, {0}};
    IntMatrix d0(2, 2);
    d0(1, 0) = 1;  // f1 -> f2
    M.g[{0, 0}] = d0;
    M.g[{1, 1}] = IntMatrix(1, 1);
    IntMatrix g01(2, 1);
    g01(0, 0) = 1;  // e -> f1
    M.g[{0, 1}] = g01;
    CHECK_FALSE(satisfies_condition(M));
    g01(0, 0) = 0;
    M.g[{0, 1}] = g01;
    CHECK(satisfies_condition(M));
}

TEST_CASE("truncation orders") {
    auto o = truncation_order(3), r = truncation_order(3, true);
    CHECK(o == std::vector<Mask>{3, 5, 6, 1, 2, 4, 0});
    CHECK(r == std::vector<Mask>{6, 5, 3, 4, 2, 1, 0});
}

TEST_CASE("closed face pullback of the constant module") {
    auto M = constant_module(3);
    for (Mask R = 0; R < 8; ++R) {
        auto N = pullback_closed_face(M, R);
        CHECK(satisfies_condition(N));
        CHECK(supported_local_cohomology(N, R).str() == "Z");
    }
}

TEST_CASE("graded abelian formatting") {
    GradedAbelian H;
    CHECK(H.str() == "0");
    H.deg[1] = Z(2);
    H.deg[3] = Group{0, {2}};
    CHECK(H.str() == "Z^2[-1] + Z/2[-3]");
    CHECK(H.has_torsion());
    CHECK(H.shifted(1).min_degree() == 2);
}
