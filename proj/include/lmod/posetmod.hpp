#pragma once

#include <atomic>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lmod/intmat.hpp"
#include "lmod/rootweyl.hpp"

namespace lmod {

// Faces of the cone on a simplex with r vertices are subsets of {0..r-1}:
// the empty face is the base stratum P0, the full set is the open face G.

struct Cutoff {
    enum Kind { finite, plus_inf, minus_inf } kind = plus_inf;
    int value = 0;
    static Cutoff at(int v) { return {finite, v}; }
    static Cutoff never() { return {plus_inf, 0}; }
    static Cutoff kill() { return {minus_inf, 0}; }
    bool operator==(const Cutoff&) const = default;
    std::string str() const;
};

struct TruncationProfile {
    int r = 0;
    std::vector<Cutoff> cutoff;  // indexed by face mask; the open face is ignored
    explicit TruncationProfile(int rank = 0) : r(rank), cutoff(size_t(1) << rank) {}
};

struct Group {
    int free_rank = 0;
    std::vector<int64_t> torsion;
    bool operator==(const Group&) const = default;
};

struct GradedAbelian {
    std::map<int, Group> deg;  // only nonzero degrees are stored
    bool is_zero() const { return deg.empty(); }
    bool has_torsion() const;
    int min_degree() const { return deg.begin()->first; }
    int max_degree() const { return deg.rbegin()->first; }
    int free_rank(int d) const;
    int total_rank() const;
    GradedAbelian shifted(int k) const;  // degrees + k
    std::string str() const;             // "Z^2[-1]", "0"
    bool operator==(const GradedAbelian&) const = default;
};

struct Complex {
    std::vector<int> deg;  // degree of each basis element
    IntMatrix d;           // d(i,j) = coefficient of e_i in d(e_j)
};

GradedAbelian cohomology(const Complex& C);
// per-degree rank (over Q) of the map on cohomology induced by a chain map
// F: C -> C2 (F has |C2| rows and |C| columns)
std::map<int, int> induced_rank(const Complex& C, const Complex& C2, const IntMatrix& F);

struct PosetModule {
    int r = 0;
    Mask top = 0;
    std::vector<std::vector<int>> deg;                  // generator degrees per face
    std::map<std::pair<Mask, Mask>, IntMatrix> g;       // (R,S), R subset of S: E_S -> E_R
    int size(Mask f) const { return int(deg[f].size()); }
    bool has_face(Mask f) const { return (f & ~top) == 0; }
    std::vector<Mask> faces() const;  // all faces below top, ascending
};

struct ModuleStats {
    std::atomic<long> checked{0};
    std::atomic<long> violations{0};
};
ModuleStats& module_stats();

Complex total_complex(const PosetModule& M, const std::vector<Mask>& faces);
bool satisfies_condition(const PosetModule& M);

PosetModule constant_module(int r);  // Z in degree 0 on the open face
PosetModule restrict_shriek(const PosetModule& M, Mask Q);
Complex local_complex(const PosetModule& M, Mask Q);
// cone(M -> i_Q* tau^{>n} i_Q^* M)[-1]; `changed` reports whether
// tau^{>n} of the local cohomology at Q was nonzero
PosetModule truncate_at(const PosetModule& M, Mask Q, Cutoff n, bool* changed = nullptr);
// pullback to the closed face R: E'_P = sum over X >= P with X cap R = P
PosetModule pullback_closed_face(const PosetModule& M, Mask R);

// proper faces by decreasing dimension; ties ascending (or descending)
std::vector<Mask> truncation_order(int r, bool reverse_ties = false);
PosetModule build_from_profile(const TruncationProfile& prof, const std::vector<Mask>* order = nullptr,
                               std::vector<bool>* effective = nullptr);

GradedAbelian local_cohomology(const PosetModule& M, Mask Q);
GradedAbelian supported_local_cohomology(const PosetModule& M, Mask Q);
// faces strictly above Q: the deleted neighbourhood of the stratum Q
GradedAbelian link_cohomology(const PosetModule& M, Mask Q);
std::map<int, int> attaching_map_rank(const PosetModule& M, Mask Q1, Mask Q2);
// rank of H(i_Q^*) -> H(link at Q) per degree
std::map<int, int> deleted_neighbourhood_rank(const PosetModule& M, Mask Q);

// cohomology of the link of the base with the closed face Q removed
GradedAbelian punctured_link_cohomology(const PosetModule& M, Mask Q);

struct E1Term {
    int p = 0, q = 0;
    Mask R = 0;
    Group group;
    int total() const;
    bool fary = false;
};
struct E1Page {
    std::vector<E1Term> terms;
    std::set<int> nonzero_totals() const;
};
E1Page mv_E1_page(const PosetModule& M, Mask Q);
E1Page fary_E1_page(const PosetModule& M, Mask Q);

}  // namespace lmod
