#include <doctest.h>

#include <set>

#include "lmod/microsupport.hpp"

using namespace lmod;

TEST_CASE("pushforward closed form on B2") {
    auto D = build_root_system("B2");
    for (IVec lambda : {IVec{0, 0}, IVec{1, 2}}) {
        std::set<std::pair<Mask, int>> expect, got;
        for (Mask P = 0; P <= D.full(); ++P) {
            auto cls = kostant_decomposition(D, lambda, P);
            for (size_t i = 0; i < cls.size(); ++i) {
                bool nonpos = true;
                for (auto& [j, v] : cls[i].pairing) nonpos = nonpos && sgn(v) <= 0;
                if (nonpos && is_self_contragredient(D, cls[i])) expect.insert({P, cls[i].degree * 100 + int(i)});
            }
        }
        auto ms = micro_support(D, lambda, parse_family("pushforward"), 2);
        for (auto& e : ms.entries) {
            auto cls = kostant_decomposition(D, lambda, e.P);
            for (size_t i = 0; i < cls.size(); ++i)
                if (cls[i].w == e.cls.w) got.insert({e.P, e.cls.degree * 100 + int(i)});
            CHECK(e.c == e.cls.degree);
            CHECK(e.d == e.cls.degree);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("A2 fundamental entries") {
    auto D = build_root_system("A2");
    auto f = parse_family("ic(m)");
    auto ms = micro_support(D, {0, 0}, f);
    std::set<std::string> fund;
    for (auto& e : ms.entries) {
        auto fc = classify_fundamental(D, e, f);
        if (fc.fundamental) {
            CHECK(fc.values_ok);
            fund.insert(mask_str(e.P, 2) + " " + word_str(reduced_word(D, e.cls.w)));
        }
    }
    CHECK(fund == std::set<std::string>{"{1} s2", "{2} s1"});
    CHECK(ms.essential().size() == 1);
    CHECK_THROWS_AS(classify_fundamental(D, ms.entries[0], parse_family("wc(mu)")), std::invalid_argument);
}

TEST_CASE("C2 at the trivial weight") {
    auto D = build_root_system("C2");
    for (auto fam : {"ic(m)", "ic(n)", "wc(mu)", "wc(nu)"}) {
        auto ms = micro_support(D, {0, 0}, parse_family(fam));
        REQUIRE(ms.entries.size() == 1);
        CHECK(ms.entries[0].P == D.full());
        CHECK(ms.entries[0].essential);
        CHECK(ms.entries[0].c == 0);
    }
}

TEST_CASE("parallel runs agree") {
    auto D = build_root_system("C3");
    auto a = micro_support(D, {1, 0, 1}, parse_family("ic(n)"), 1);
    auto b = micro_support(D, {1, 0, 1}, parse_family("ic(n)"), 4);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].P == b.entries[i].P);
        CHECK(a.entries[i].cls.w == b.entries[i].cls.w);
        CHECK(a.entries[i].c == b.entries[i].c);
    }
}

TEST_CASE("split oracle and degree bounds") {
    auto D = build_root_system("C2");
    auto o = split_oracle(D);
    CHECK(*o.dimD(D.full()) == 6);
    CHECK(dim_symmetric_space(D) == 6);
    CHECK(*o.dimD(0) == 0);
    CHECK(*o.dimD(1) == 2);
    auto ms = micro_support(D, {0, 0}, parse_family("ic(m)"));
    auto b = global_degree_bounds(D, ms.entries, o);
    CHECK_FALSE(b.empty);
    CHECK(b.str() == "(0, 6)");
    CHECK(global_degree_bounds(D, {}, o).str() == "(+inf, -inf)");

    RealFormOracle none{"none", [](Mask) { return std::optional<int>{}; },
                        [](Mask, const KostantClass&) { return std::optional<int>{}; }};
    try {
        global_degree_bounds(D, ms.entries, none);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
    }
}
