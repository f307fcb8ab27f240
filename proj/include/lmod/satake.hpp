#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmod/kostant.hpp"
#include "lmod/microsupport.hpp"
#include "lmod/thread.hpp"

namespace lmod {

// The defining weight is given by the simple roots it is not orthogonal to.
struct SatakeDatum {
    const RootDatum* D = nullptr;
    Mask mu_support = 0;
    bool equal_rank = true;
};
// Throws std::invalid_argument on an empty or out-of-range support.
SatakeDatum make_satake(const RootDatum& D, Mask mu_support, bool equal_rank = true);
// mu on the last node of C_n
SatakeDatum baily_borel(const RootDatum& D);

struct KappaZeta {
    Mask kappa = 0, zeta = 0;
    bool orthogonal = true;  // kappa and zeta are orthogonal as root sets
};
KappaZeta kappa_zeta(const SatakeDatum& S, Mask psi);
Mask omega(const SatakeDatum& S, Mask psi);  // Levi of P^dagger
Mask p_dagger(const SatakeDatum& S, Mask P);
bool is_saturated(const SatakeDatum& S, Mask P);
std::vector<Mask> saturated_parabolics(const SatakeDatum& S);
// Throws std::invalid_argument if R is not saturated.
std::vector<Mask> fiber_strata(const SatakeDatum& S, Mask R);

// Delta^T = Delta \ (Delta^R \ Delta^Q)
Mask complementary_parabolic(Mask Q, Mask R, Mask full);

int dim_D_high(const SatakeDatum& S, Mask R);  // |Phi+(kappa)| + #kappa
int codim_boundary_component(const SatakeDatum& S, Mask R);
int dim_D_low(const SatakeDatum& S, Mask P);
int dim_D_low_V(const SatakeDatum& S, Mask P, const KostantClass& c);

struct FiberEntry {
    Mask P = 0;
    KostantClass cls;
    Mask QV = 0, QVp = 0;
    std::map<Mask, GradedAbelian> star_groups;   // keyed by Q, supported at comp(Q,R)
    std::map<Mask, GradedAbelian> shriek_groups; // keyed by Q, supported at Q
    bool has_star = false, has_shriek = false;
    int d_star = 0, c_shriek = 0;  // total degrees; c includes the dim D_{R,h} shift
};

struct FiberRestriction {
    Mask R = 0;
    std::vector<FiberEntry> entries;
    bool star_empty = true, shriek_empty = true;
    Rat d_star{0}, c_shriek{0};
    Rat star_bound{0}, shriek_bound{0};  // 1/2 codim -+ #Delta_R
    bool star_ok() const { return star_empty || d_star <= star_bound; }
    bool shriek_ok() const { return shriek_empty || c_shriek >= shriek_bound; }
};
// Throws std::invalid_argument if R is not saturated.
FiberRestriction restrict_to_fiber(const SatakeDatum& S, const IVec& lambda, const FamilySpec& f, Mask R);

struct PairingShiftCase {
    Mask P = 0;
    std::vector<int> word;
    int alpha0 = -1, alpha1 = -1;
    std::vector<std::string> violations;
};
// The step from P to P~ with Delta_P^{P~} = {alpha0} for classes with
// positive pairing against alpha0.
std::vector<PairingShiftCase> pairing_shift_cases(const SatakeDatum& S, const IVec& lambda);

}  // namespace lmod
