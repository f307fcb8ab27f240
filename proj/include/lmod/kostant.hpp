#pragma once

#include <map>
#include <vector>

#include "lmod/rootweyl.hpp"

namespace lmod {

// Orthogonal projection onto span(Delta^P)^perp (the a_P part).
class LeviProjector {
public:
    LeviProjector(const RootDatum& D, Mask levi);
    RVec operator()(const RVec& x) const;
    // (proj x, proj alpha_j) for a simple root j outside the Levi
    Rat pair_simple(const RVec& x, int j) const;

private:
    const RootDatum* D_;
    Mask levi_;
    std::vector<int> idx_;
    std::vector<std::vector<Rat>> ginv_;
    std::vector<RVec> proj_simple_;
};

struct KostantClass {
    Mask P = 0;
    WeylElement w;
    IVec wlr;      // labels of w(lambda+rho)
    IVec mu;       // labels of w(lambda+rho)-rho
    RVec mu_amb;
    int degree = 0;
    RVec xi;       // a_P-projection of mu
    std::vector<int> inversions;
    std::map<Mask, int> bidegree;         // Q -> l_Q(w), for P <= Q <= G
    std::map<int, Rat> pairing;           // j in Delta_P -> (proj w(lambda+rho), proj alpha_j)
};

bool is_dominant(const RootDatum& D, const IVec& lambda);

// One class per w in W_P, in the canonical order of W_P.
// Throws std::invalid_argument if lambda is not dominant.
std::vector<KostantClass> kostant_decomposition(const RootDatum& D, const IVec& lambda, Mask P);

bool is_self_contragredient(const RootDatum& D, const KostantClass& c);

struct Bracket {
    Mask QV;
    Mask QVp;
};
Bracket bracketing_parabolics(const RootDatum& D, const KostantClass& c);
// same, but only the restricted roots inside the Levi of R participate
Bracket bracketing_parabolics_within(const RootDatum& D, const KostantClass& c, Mask R);

// Weight profiles eta = -rho + eps*coef*rho with eps > 0 infinitesimal.
enum class WeightProfile { mu, nu };
// chi >= eta_Q for the a_Q-weight chi of the class at face Q >= P
bool weight_at_least_profile(const RootDatum& D, const KostantClass& c, Mask Q, WeightProfile eta);

// opposition involution test for lambda: -w_0 lambda = lambda
bool is_self_dual(const RootDatum& D, const IVec& lambda);

}  // namespace lmod
