#include <doctest.h>

#include "lmod/satake.hpp"

using namespace lmod;

namespace {

// component of the weight node in the graph on psi + {mu}
Mask brute_kappa(const RootDatum& D, Mask mu, Mask psi) {
    Mask k = 0;
    std::vector<int> stack;
    for (int i = 0; i < D.rank; ++i)
        if ((psi & mu) >> i & 1) {
            k |= Mask(1) << i;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < D.rank; ++j)
            if ((psi >> j & 1) && !(k >> j & 1) && D.cartan(i, j) != 0) {
                k |= Mask(1) << j;
                stack.push_back(j);
            }
    }
    return k;
}

}  // namespace

TEST_CASE("kappa and omega against brute force") {
    struct Case {
        const char* label;
        Mask mu;
    };
    for (auto c : {Case{"C2", 2}, Case{"C3", 4}, Case{"C4", 8}, Case{"C5", 16}, Case{"A4", 2}, Case{"B3", 1},
                   Case{"D4", 0b1010}}) {
        auto D = build_root_system(c.label);
        auto S = make_satake(D, c.mu);
        for (Mask psi = 0; psi <= D.full(); ++psi) {
            Mask k = brute_kappa(D, c.mu, psi);
            auto kz = kappa_zeta(S, psi);
            CHECK(kz.kappa == k);
            CHECK(kz.zeta == (psi & ~k));
            // the largest superset with the same kappa
            Mask big = psi;
            int maximal = 0;
            for (Mask Q = 0; Q <= D.full(); ++Q)
                if ((Q & psi) == psi && brute_kappa(D, c.mu, Q) == k) big |= Q;
            for (Mask Q = 0; Q <= D.full(); ++Q)
                if ((Q & psi) == psi && brute_kappa(D, c.mu, Q) == k && Q == big) ++maximal;
            INFO(c.label << " psi=" << mask_str(psi, D.rank));
            CHECK(maximal == 1);
            CHECK(omega(S, psi) == big);
            CHECK(omega(S, omega(S, psi)) == omega(S, psi));
            CHECK(kappa_zeta(S, omega(S, psi)).kappa == k);
        }
    }
}

TEST_CASE("fibers partition the parabolics") {
    for (auto label : {"C2", "C3", "C4", "A3"}) {
        auto D = build_root_system(label);
        auto S = make_satake(D, Mask(1) << (D.rank - 1));
        size_t n = 0;
        for (Mask R : saturated_parabolics(S))
            for (Mask P : fiber_strata(S, R)) {
                CHECK(p_dagger(S, P) == R);
                ++n;
            }
        CHECK(n == (size_t(1) << D.rank));
    }
    auto D = build_root_system("C3");
    auto S = baily_borel(D);
    CHECK_THROWS_AS(fiber_strata(S, 0), std::invalid_argument);
    CHECK(fiber_strata(S, D.full()).size() == 1);
    CHECK_THROWS_AS(make_satake(D, 0), std::invalid_argument);
    CHECK_THROWS_AS(baily_borel(build_root_system("A3")), std::invalid_argument);
}

TEST_CASE("complementary parabolic") {
    Mask full = 7;
    CHECK(complementary_parabolic(1, 3, full) == 5);  // C3 example
    for (Mask Q = 0; Q < 8; ++Q) {
        CHECK(complementary_parabolic(Q, full, full) == Q);
        CHECK(complementary_parabolic(Q, Q, full) == full);
    }
}

TEST_CASE("closed face pullback then supports equals supports at T") {
    auto D = build_root_system("C3");
    for (auto fam : {"ic(m)", "ic(n)", "wc(mu)"}) {
        auto f = parse_family(fam);
        for (auto& c : kostant_decomposition(D, {1, 0, 1}, 0)) {
            auto M = build_thread(D, c, f);
            for (Mask R = 0; R < 8; ++R) {
                auto N = pullback_closed_face(M, R);
                for (Mask Q = 0; Q < 8; ++Q) {
                    if ((Q & ~R) != 0) continue;
                    Mask T = complementary_parabolic(Q, R, 7);
                    INFO(fam << " Q=" << mask_str(Q, 3) << " R=" << mask_str(R, 3));
                    CHECK(supported_local_cohomology(N, Q) == supported_local_cohomology(M, T));
                }
            }
        }
    }
}

TEST_CASE("dimensions for the Baily-Borel datum") {
    auto D = build_root_system("C3");
    auto S = baily_borel(D);
    CHECK(dim_D_high(S, D.full()) == dim_symmetric_space(D));
    CHECK(codim_boundary_component(S, D.full()) == 0);
    CHECK(dim_D_high(S, 0b011) == 0);  // kappa empty
    CHECK(dim_D_high(S, 0b110) == 6);  // C2 factor
}

TEST_CASE("functoriality bounds on C2") {
    auto D = build_root_system("C2");
    auto S = baily_borel(D);
    for (Mask R : saturated_parabolics(S)) {
        if (R == D.full()) continue;
        for (auto fam : {"ic(m)", "ic(n)"}) {
            auto fr = restrict_to_fiber(S, {2, 1}, parse_family(fam), R);
            CHECK(fr.star_ok());
            CHECK(fr.shriek_ok());
        }
    }
    CHECK_THROWS_AS(restrict_to_fiber(S, {0, 0}, parse_family("ic(m)"), 0), std::invalid_argument);
}
