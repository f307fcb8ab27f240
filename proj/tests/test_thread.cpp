#include <doctest.h>

#include "lmod/thread.hpp"

using namespace lmod;

TEST_CASE("family names round trip") {
    for (auto& f : all_families()) CHECK(parse_family(f.str()).str() == f.str());
    CHECK(parse_family("ic-n").str() == "ic(n)");
    CHECK(parse_family("wc-mu").str() == "wc(mu)");
    CHECK_THROWS_AS(parse_family("ic(x)"), std::invalid_argument);
}

TEST_CASE("face coordinates") {
    auto D = build_root_system("C4");
    auto fc = face_coords(D, 0b0101);
    CHECK(fc.r() == 2);
    for (Mask l = 0; l < 4; ++l) CHECK(fc.local(fc.global(l)) == l);
    CHECK(fc.global(0) == 0b0101);
    CHECK(fc.global(3) == D.full());
}

TEST_CASE("pushforward threads are constant") {
    auto D = build_root_system("C3");
    for (Mask P = 0; P < D.full(); ++P)
        for (auto& c : kostant_decomposition(D, {0, 1, 0}, P)) {
            auto M = build_thread(D, c, parse_family("pushforward"));
            for (Mask q : M.faces()) CHECK(local_cohomology(M, q).str() == "Z");
        }
}

TEST_CASE("shifted perversity") {
    auto D = build_root_system("C2");
    for (auto& c : kostant_decomposition(D, {0, 0}, 0)) {
        // codim 6 at the Borel
        CHECK(shifted_perversity(D, c, 0, Perversity::m) == 2 - c.degree);
        CHECK(shifted_perversity(D, c, 0, Perversity::n) == 2 - c.degree);
    }
    auto c = kostant_decomposition(D, {0, 0}, 1)[0];
    CHECK_THROWS_AS(shifted_perversity(D, c, 0, Perversity::m), std::invalid_argument);
}

TEST_CASE("ic threads truncate exactly where local cohomology exceeds p_w") {
    auto D = build_root_system("A3");
    auto f = parse_family("ic(m)");
    for (Mask P = 0; P < D.full(); ++P)
        for (auto& c : kostant_decomposition(D, {1, 0, 1}, P)) {
            auto M = build_thread(D, c, f);
            auto fc = face_coords(D, P);
            for (Mask q : M.faces()) {
                if (q == M.top) continue;
                auto H = local_cohomology(M, q);
                if (!H.is_zero()) CHECK(H.max_degree() <= shifted_perversity(D, c, fc.global(q), f.p));
            }
        }
}
