#include "lmod/footnote.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "lmod/parallel.hpp"

namespace lmod {

const char* rank4_config_name(Rank4Config c) {
    switch (c) {
    case Rank4Config::first: return "first";
    case Rank4Config::second: return "second";
    default: return "none";
    }
}

Rank4Config classify_rank4(const std::vector<bool>& eff) {
    if (eff.size() < 15) throw std::invalid_argument("classify_rank4 needs the 15 proper faces of a 3-simplex");
    if (eff[0]) return Rank4Config::none;
    std::vector<Mask> by[4];
    for (Mask l = 1; l < 15; ++l)
        if (eff[l]) by[popcount(l)].push_back(l);
    if (by[2].size() != 3) return Rank4Config::none;
    Mask common = 15, uni = 0;
    for (Mask e : by[2]) {
        common &= e;
        uni |= e;
    }
    if (by[3].size() == 4 && by[1].empty() && common) return Rank4Config::first;
    if (by[1].size() == 4 && by[3].empty() && popcount(uni) == 3) return Rank4Config::second;
    return Rank4Config::none;
}

Mask footnote_levi() {
    Mask P = 0;
    for (int a : {2, 4, 5, 7, 8, 9}) P |= Mask(1) << (a - 1);
    return P;
}

std::vector<int> footnote_word() {
    std::vector<int> w;
    for (int a : {3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 8, 10, 9, 8, 7, 6, 5, 4,
                  10, 9, 8, 7, 6, 5, 10, 9, 8, 7, 6, 10, 9, 8, 7, 10, 9, 8, 10, 9, 10})
        w.push_back(a - 1);
    return w;
}

FootnoteProfile classify_profile(const std::vector<int>& pw) {
    FootnoteProfile fp;
    fp.pw = pw;
    TruncationProfile prof(4);
    for (Mask l = 0; l < 15; ++l) prof.cutoff[l] = Cutoff::at(pw[l]);
    auto M = build_from_profile(prof, nullptr, &fp.effective);
    fp.config = classify_rank4(fp.effective);
    fp.link = link_cohomology(M, 0);
    return fp;
}

namespace {

std::vector<int> profile_values(const RootDatum& D, const FaceCoords& fc, const std::vector<int>& inversions,
                                Perversity p) {
    std::vector<int> pw;
    for (Mask l = 0; l + 1 < (Mask(1) << fc.r()); ++l) {
        Mask Q = fc.global(l);
        pw.push_back(codim_and_perversity(D, Q, p).value - bidegree_lower(D, inversions, Q));
    }
    return pw;
}

}  // namespace

FootnoteCheck check_footnote_word(const RootDatum& D) {
    if (D.cartan_type != 'C' || D.rank != 10) throw std::invalid_argument("the footnote example lives in C10");
    FootnoteCheck fc;
    auto word = footnote_word();
    auto w = weyl_from_word(D, word);
    Mask P = footnote_levi();
    fc.length = weyl_length(D, w);
    fc.reduced = fc.length == int(word.size());
    fc.min_rep = is_min_coset_rep(D, w, P);
    fc.dim_n = dim_nilradical(D, P);
    fc.codim = codim_and_perversity(D, P, Perversity::m).codim;
    auto faces = face_coords(D, P);
    auto inv = inversion_set(D, w);
    fc.m = classify_profile(profile_values(D, faces, inv, Perversity::m));
    fc.n = classify_profile(profile_values(D, faces, inv, Perversity::n));
    return fc;
}

namespace {

using Key = std::array<int8_t, 15>;

Rank4Config memo_classify(const Key& k, std::atomic<long>& fresh) {
    thread_local std::map<Key, Rank4Config> memo;
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    std::vector<int> pw(k.begin(), k.end());
    auto c = classify_profile(pw).config;
    memo.emplace(k, c);
    fresh++;
    return c;
}

struct Tally {
    long visited = 0;
    long first[2] = {0, 0}, second[2] = {0, 0};
    std::vector<std::vector<int>> words[2];
    void add(const Tally& o) {
        visited += o.visited;
        for (int p = 0; p < 2; ++p) {
            first[p] += o.first[p];
            second[p] += o.second[p];
            words[p].insert(words[p].end(), o.words[p].begin(), o.words[p].end());
        }
    }
};

nlohmann::json tally_json(const Tally& t) {
    return {{"visited", t.visited},
            {"first", {t.first[0], t.first[1]}},
            {"second", {t.second[0], t.second[1]}},
            {"words_m", t.words[0]},
            {"words_n", t.words[1]}};
}

Tally tally_from_json(const nlohmann::json& j) {
    Tally t;
    t.visited = j.at("visited");
    for (int p = 0; p < 2; ++p) {
        t.first[p] = j.at("first")[p];
        t.second[p] = j.at("second")[p];
    }
    t.words[0] = j.at("words_m").get<std::vector<std::vector<int>>>();
    t.words[1] = j.at("words_n").get<std::vector<std::vector<int>>>();
    return t;
}

}  // namespace

ExhaustiveResult exhaustive_footnote_search(const RootDatum& D, Mask levi, const ExhaustiveOptions& opt) {
    auto fc = face_coords(D, levi);
    if (fc.r() != 4) throw std::invalid_argument("exhaustive search needs parabolic rank 4");
    int pv[2][15];
    for (int p = 0; p < 2; ++p)
        for (Mask l = 0; l < 15; ++l)
            pv[p][l] = codim_and_perversity(D, fc.global(l), p ? Perversity::n : Perversity::m).value;
    std::vector<uint16_t> contrib(D.num_positive(), 0);
    for (int k = 0; k < D.num_positive(); ++k)
        for (Mask l = 0; l < 15; ++l)
            if (D.root_support[k] & ~fc.global(l)) contrib[k] |= uint16_t(1u << l);

    std::atomic<long> fresh{0};
    using Counts = std::array<int, 15>;
    auto evaluate = [&](const WeylElement& w, const Counts& lq, Tally& t) {
        t.visited++;
        for (int p = 0; p < 2; ++p) {
            Key k;
            // local cohomology of a rank-4 thread sits in degrees 0..4
            for (int l = 0; l < 15; ++l) k[l] = int8_t(std::clamp(pv[p][l] - lq[l], -1, 5));
            auto c = memo_classify(k, fresh);
            if (c == Rank4Config::first) {
                t.first[p]++;
                t.words[p].push_back(reduced_word(D, w));
            } else if (c == Rank4Config::second) {
                t.second[p]++;
            }
        }
    };
    auto step = [&](const Counts& c, int root) {
        Counts n = c;
        for (int l = 0; l < 15; ++l)
            if (contrib[root] >> l & 1) n[l]++;
        return n;
    };

    // shallow levels breadth-first, deeper subtrees in parallel
    Tally shallow;
    std::vector<std::pair<CosetNode, Counts>> level{{coset_tree_root(D, levi), Counts{}}}, seeds;
    int split_depth = -1;
    for (int depth = 0; !level.empty(); ++depth) {
        if (level.size() >= opt.min_subtrees) {
            split_depth = depth;
            seeds = std::move(level);
            break;
        }
        std::vector<std::pair<CosetNode, Counts>> next;
        for (auto& [node, cnt] : level) {
            evaluate(node.w, cnt, shallow);
            for (auto& ch : coset_children(D, node)) {
                Counts c2 = step(cnt, ch.new_root);
                next.emplace_back(std::move(ch), c2);
            }
        }
        level = std::move(next);
    }

    ExhaustiveResult res;
    res.seeds = long(seeds.size());
    std::vector<char> done(seeds.size(), 0);
    Tally deep;
    std::mutex mu;
    nlohmann::json meta = {{"group", D.name()}, {"levi", levi}, {"split_depth", split_depth},
                           {"seeds", res.seeds}};
    if (!opt.checkpoint.empty() && std::filesystem::exists(opt.checkpoint)) {
        std::ifstream in(opt.checkpoint);
        auto j = nlohmann::json::parse(in, nullptr, false);
        if (!j.is_discarded() && j.value("meta", nlohmann::json()) == meta) {
            for (long i : j.at("done").get<std::vector<long>>()) done[size_t(i)] = 1;
            deep = tally_from_json(j.at("tally"));
            res.resumed_seeds = j.at("done").size();
        }
    }
    auto save = [&] {
        if (opt.checkpoint.empty()) return;
        std::vector<long> d;
        for (size_t i = 0; i < done.size(); ++i)
            if (done[i]) d.push_back(long(i));
        nlohmann::json j = {{"meta", meta}, {"done", d}, {"tally", tally_json(deep)}};
        std::string tmp = opt.checkpoint + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump() << "\n";
        }
        std::filesystem::rename(tmp, opt.checkpoint);
    };

    std::vector<size_t> todo;
    for (size_t i = 0; i < seeds.size(); ++i)
        if (!done[i]) todo.push_back(i);
    long finished = res.resumed_seeds;
    int last_pct = -1, last_pct_shown = -1;
    parallel_for(todo.size(), opt.jobs, [&](size_t k) {
        size_t i = todo[k];
        Tally t;
        std::vector<Counts> stack(size_t(D.num_positive()) + 2);
        int base = seeds[i].first.length;
        stack[base] = seeds[i].second;
        for_each_min_coset_rep(D, seeds[i].first, [&](const CosetVisit& v) {
            if (v.length > base) stack[v.length] = step(stack[v.length - 1], v.new_root);
            evaluate(v.w, stack[v.length], t);
            return true;
        });
        std::lock_guard<std::mutex> lk(mu);
        deep.add(t);
        done[i] = 1;
        ++finished;
        int pct = int(100 * finished / std::max<long>(1, res.seeds));
        if (pct != last_pct) {
            last_pct = pct;
            save();
        }
        if (opt.progress && pct != last_pct_shown) {
            last_pct_shown = pct;
            *opt.progress << "progress: " << finished << "/" << res.seeds << " subtrees, " << deep.visited
                          << " elements\n"
                          << std::flush;
        }
    });

    save();
    deep.add(shallow);
    res.visited = deep.visited;
    for (int p = 0; p < 2; ++p) {
        res.first[p] = deep.first[p];
        res.second[p] = deep.second[p];
        res.words[p] = deep.words[p];
        std::sort(res.words[p].begin(), res.words[p].end());
    }
    res.profiles = fresh;
    return res;
}

}  // namespace lmod
