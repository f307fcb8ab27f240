#include "lmod/thread.hpp"

#include <stdexcept>

namespace lmod {

std::string FamilySpec::str() const {
    switch (family) {
    case Family::pushforward: return "pushforward";
    case Family::ic: return p == Perversity::m ? "ic(m)" : "ic(n)";
    case Family::wc: return eta == WeightProfile::mu ? "wc(mu)" : "wc(nu)";
    }
    return "?";
}

FamilySpec parse_family(const std::string& s) {
    for (auto& f : all_families()) {
        std::string a = f.str(), b = a;
        for (auto& ch : b)
            if (ch == '(') ch = '-';
        if (!b.empty() && b.back() == ')') b.pop_back();
        if (s == a || s == b) return f;
    }
    throw std::invalid_argument("unknown family '" + s + "'");
}

std::vector<FamilySpec> all_families() {
    return {{Family::pushforward, Perversity::m, WeightProfile::nu},
            {Family::ic, Perversity::m, WeightProfile::nu},
            {Family::ic, Perversity::n, WeightProfile::nu},
            {Family::wc, Perversity::m, WeightProfile::mu},
            {Family::wc, Perversity::m, WeightProfile::nu}};
}

Mask FaceCoords::global(Mask local) const {
    Mask g = P0;
    for (int k = 0; k < r(); ++k)
        if (local >> k & 1) g |= Mask(1) << roots[k];
    return g;
}

Mask FaceCoords::local(Mask global) const {
    Mask l = 0;
    for (int k = 0; k < r(); ++k)
        if (global >> roots[k] & 1) l |= Mask(1) << k;
    return l;
}

FaceCoords face_coords(const RootDatum& D, Mask P0) {
    FaceCoords fc;
    fc.P0 = P0;
    for (int i = 0; i < D.rank; ++i)
        if (!(P0 >> i & 1)) fc.roots.push_back(i);
    return fc;
}

int shifted_perversity(const RootDatum& D, const KostantClass& c, Mask Q, Perversity p) {
    auto it = c.bidegree.find(Q);
    if (it == c.bidegree.end()) throw std::invalid_argument("face is not above the base parabolic");
    return codim_and_perversity(D, Q, p).value - it->second;
}

Cutoff thread_cutoff(const RootDatum& D, const KostantClass& c, Mask Q, const FamilySpec& f) {
    switch (f.family) {
    case Family::pushforward: return Cutoff::never();
    case Family::ic: return Cutoff::at(shifted_perversity(D, c, Q, f.p));
    case Family::wc: return weight_at_least_profile(D, c, Q, f.eta) ? Cutoff::never() : Cutoff::kill();
    }
    return Cutoff::never();
}

TruncationProfile thread_profile(const RootDatum& D, const KostantClass& c, const FamilySpec& f) {
    auto fc = face_coords(D, c.P);
    TruncationProfile prof(fc.r());
    Mask top = (Mask(1) << fc.r()) - 1;
    for (Mask l = 0; l < top; ++l) prof.cutoff[l] = thread_cutoff(D, c, fc.global(l), f);
    return prof;
}

PosetModule build_thread(const RootDatum& D, const KostantClass& c, const FamilySpec& f, bool reverse_ties) {
    auto prof = thread_profile(D, c, f);
    auto order = truncation_order(prof.r, reverse_ties);
    return build_from_profile(prof, &order);
}

}  // namespace lmod
