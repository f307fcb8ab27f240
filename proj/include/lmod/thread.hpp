#pragma once

#include <string>
#include <vector>

#include "lmod/kostant.hpp"
#include "lmod/posetmod.hpp"

namespace lmod {

enum class Family { pushforward, ic, wc };

struct FamilySpec {
    Family family = Family::ic;
    Perversity p = Perversity::m;
    WeightProfile eta = WeightProfile::nu;
    std::string str() const;  // "pushforward", "ic(m)", "wc(nu)"
};
// accepts the forms produced by str() plus "ic-m", "wc-mu"; throws std::invalid_argument
FamilySpec parse_family(const std::string& s);
std::vector<FamilySpec> all_families();

// Local face k <-> k-th simple root outside the Levi of the base P0.
struct FaceCoords {
    Mask P0 = 0;
    std::vector<int> roots;
    int r() const { return int(roots.size()); }
    Mask global(Mask local) const;
    Mask local(Mask global) const;
};
FaceCoords face_coords(const RootDatum& D, Mask P0);

// p_w(Q) = p(codim Q) - l_Q(w) for a proper face Q >= P (global mask)
int shifted_perversity(const RootDatum& D, const KostantClass& c, Mask Q, Perversity p);
Cutoff thread_cutoff(const RootDatum& D, const KostantClass& c, Mask Q, const FamilySpec& f);
TruncationProfile thread_profile(const RootDatum& D, const KostantClass& c, const FamilySpec& f);
PosetModule build_thread(const RootDatum& D, const KostantClass& c, const FamilySpec& f, bool reverse_ties = false);

}  // namespace lmod
