#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmod/kostant.hpp"
#include "lmod/posetmod.hpp"
#include "lmod/thread.hpp"

namespace lmod {

struct MicroSupportEntry {
    Mask P = 0;
    KostantClass cls;
    Mask QV = 0, QVp = 0;
    std::vector<Mask> window;                // Q in [QV, QV'] with nonzero supported group
    std::map<Mask, GradedAbelian> groups;    // supported groups on the window, thread degrees
    int c = 0, d = 0;                        // total degrees
    std::map<int, int> attaching_rank;       // H(QV) -> H(QV') in thread degrees
    bool essential = false;
    bool fundamental = false;
};

struct MicroSupport {
    std::vector<MicroSupportEntry> entries;  // canonical order: P ascending, then W_P order
    long classes = 0;
    long skipped_not_self_contragredient = 0;
    std::vector<MicroSupportEntry> essential() const;
};

MicroSupport micro_support(const RootDatum& D, const IVec& lambda, const FamilySpec& f, int jobs = 1);

// Q_V = P, Q'_V = G, l(w) = dim n_P / 2
bool has_fundamental_triple(const RootDatum& D, const MicroSupportEntry& e);

struct FundamentalCheck {
    bool fundamental = false;
    bool values_ok = true;
    std::string detail;
};
// Throws std::invalid_argument unless f is an ic family.
FundamentalCheck classify_fundamental(const RootDatum& D, const MicroSupportEntry& e, const FamilySpec& f);

struct RealFormOracle {
    std::string preset;
    std::function<std::optional<int>(Mask)> dimD;
    std::function<std::optional<int>(Mask, const KostantClass&)> dimDV;
};
RealFormOracle split_oracle(const RootDatum& D);
int dim_symmetric_space(const RootDatum& D);  // split preset: |Phi+| + rank

struct DegreeBounds {
    bool empty = true;  // then (c, d) = (+inf, -inf)
    Rat c{0}, d{0};
    int64_t c_ceil() const;
    int64_t d_floor() const;
    std::string str() const;
};
// Throws std::invalid_argument naming the parabolic the oracle cannot supply.
DegreeBounds global_degree_bounds(const RootDatum& D, const std::vector<MicroSupportEntry>& entries,
                                  const RealFormOracle& oracle);

}  // namespace lmod
