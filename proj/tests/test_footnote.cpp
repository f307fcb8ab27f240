#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "lmod/footnote.hpp"

using namespace lmod;

namespace {

std::vector<bool> marks(std::initializer_list<Mask> faces) {
    std::vector<bool> e(15, false);
    for (Mask f : faces) e[f] = true;
    return e;
}

}  // namespace

TEST_CASE("rank 4 configurations") {
    CHECK(classify_rank4(marks({7, 11, 13, 14, 3, 5, 9})) == Rank4Config::first);
    CHECK(classify_rank4(marks({7, 11, 13, 14, 3, 6, 12})) == Rank4Config::none);   // path
    CHECK(classify_rank4(marks({7, 11, 13, 14, 3, 5, 9, 1})) == Rank4Config::none);  // plus a vertex
    CHECK(classify_rank4(marks({1, 2, 4, 8, 3, 5, 6})) == Rank4Config::second);
    CHECK(classify_rank4(marks({1, 2, 4, 8, 3, 5, 9})) == Rank4Config::none);  // star, not a triangle
    CHECK(classify_rank4(marks({0, 7, 11, 13, 14, 3, 5, 9})) == Rank4Config::none);
    CHECK_THROWS_AS(classify_rank4(std::vector<bool>(4)), std::invalid_argument);
}

TEST_CASE("the Sp20 word") {
    CHECK(footnote_word().size() == 42);
    CHECK(popcount(footnote_levi()) == 6);
    auto D = build_root_system("C10");
    auto fc = check_footnote_word(D);
    CHECK(fc.reduced);
    CHECK(fc.min_rep);
    CHECK(fc.dim_n == 90);
    CHECK(fc.n.config == Rank4Config::first);
    CHECK(fc.n.link.str() == "Z[-1] + Z[-2]");
    CHECK_THROWS_AS(check_footnote_word(build_root_system("C9")), std::invalid_argument);
}

TEST_CASE("exhaustive search on a small group matches direct classification") {
    auto D = build_root_system("C5");
    Mask levi = 0b00010;
    auto fc = face_coords(D, levi);
    long first[2] = {0, 0}, second[2] = {0, 0}, n = 0;
    for (auto& w : enumerate_min_coset_reps(D, levi)) {
        ++n;
        auto inv = inversion_set(D, w);
        for (int p = 0; p < 2; ++p) {
            std::vector<int> pw;
            for (Mask l = 0; l < 15; ++l) {
                Mask Q = fc.global(l);
                pw.push_back(codim_and_perversity(D, Q, p ? Perversity::n : Perversity::m).value -
                             bidegree_lower(D, inv, Q));
            }
            auto c = classify_profile(pw).config;
            first[p] += c == Rank4Config::first;
            second[p] += c == Rank4Config::second;
        }
    }
    auto ck = (std::filesystem::temp_directory_path() / "lmod_test_ckpt.json").string();
    std::remove(ck.c_str());
    ExhaustiveOptions opt;
    opt.jobs = 2;
    opt.min_subtrees = 50;
    opt.checkpoint = ck;
    auto r = exhaustive_footnote_search(D, levi, opt);
    CHECK(r.visited == n);
    CHECK(n == 1920);
    for (int p = 0; p < 2; ++p) {
        CHECK(r.first[p] == first[p]);
        CHECK(r.second[p] == second[p]);
        CHECK(long(r.words[p].size()) == first[p]);
    }
    // a finished checkpoint resumes without recomputation
    auto again = exhaustive_footnote_search(D, levi, opt);
    CHECK(again.resumed_seeds == again.seeds);
    CHECK(again.visited == r.visited);
    CHECK(again.first[1] == r.first[1]);
    std::remove(ck.c_str());
    CHECK_THROWS_AS(exhaustive_footnote_search(D, 0b00110, opt), std::invalid_argument);
}
