#include "lmod/satake.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lmod {

namespace {

bool adjacent(const RootDatum& D, int i, int j) { return i != j && sgn(D.gram[i][j]) != 0; }

Mask bit(int i) { return Mask(1) << i; }

std::vector<Mask> subsets_between(Mask lo, Mask hi) {
    Mask extra = hi & ~lo;
    std::vector<Mask> out;
    for (Mask s = 0;; s = ((s | ~extra) + 1) & extra) {
        out.push_back(lo | s);
        if (s == extra) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SatakeDatum make_satake(const RootDatum& D, Mask mu_support, bool equal_rank) {
    if (mu_support == 0 || (mu_support & ~D.full()))
        throw std::invalid_argument("satake weight support must be a nonempty set of simple roots");
    return {&D, mu_support, equal_rank};
}

SatakeDatum baily_borel(const RootDatum& D) {
    if (D.cartan_type != 'C') throw std::invalid_argument("Baily-Borel preset is only defined for type C");
    return make_satake(D, bit(D.rank - 1), true);
}

KappaZeta kappa_zeta(const SatakeDatum& S, Mask psi) {
    const RootDatum& D = *S.D;
    KappaZeta kz;
    Mask k = psi & S.mu_support;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < D.rank; ++i) {
            if (!(psi >> i & 1) || (k >> i & 1)) continue;
            for (int j = 0; j < D.rank; ++j)
                if ((k >> j & 1) && adjacent(D, i, j)) {
                    k |= bit(i);
                    grew = true;
                    break;
                }
        }
    }
    kz.kappa = k;
    kz.zeta = psi & ~k;
    for (int i = 0; i < D.rank; ++i)
        for (int j = 0; j < D.rank; ++j)
            if ((k >> i & 1) && (kz.zeta >> j & 1) && sgn(D.gram[i][j])) kz.orthogonal = false;
    return kz;
}

Mask omega(const SatakeDatum& S, Mask psi) {
    const RootDatum& D = *S.D;
    Mask k = kappa_zeta(S, psi).kappa;
    Mask out = psi;
    for (int a = 0; a < D.rank; ++a) {
        if ((psi >> a & 1) || (S.mu_support >> a & 1)) continue;
        bool touches = false;
        for (int j = 0; j < D.rank; ++j)
            if ((k >> j & 1) && adjacent(D, a, j)) touches = true;
        if (!touches) out |= bit(a);
    }
    return out;
}

Mask p_dagger(const SatakeDatum& S, Mask P) { return omega(S, P); }

bool is_saturated(const SatakeDatum& S, Mask P) { return omega(S, P) == P; }

std::vector<Mask> saturated_parabolics(const SatakeDatum& S) {
    std::vector<Mask> out;
    for (Mask P = 0; P <= S.D->full(); ++P)
        if (is_saturated(S, P)) out.push_back(P);
    return out;
}

std::vector<Mask> fiber_strata(const SatakeDatum& S, Mask R) {
    if (!is_saturated(S, R)) throw std::invalid_argument("parabolic " + mask_str(R, S.D->rank) + " is not saturated");
    std::vector<Mask> out;
    for (Mask P : subsets_between(0, R))
        if (omega(S, P) == R) out.push_back(P);
    return out;
}

Mask complementary_parabolic(Mask Q, Mask R, Mask full) { return full & ~(R & ~Q); }

int dim_D_high(const SatakeDatum& S, Mask R) {
    Mask k = kappa_zeta(S, R).kappa;
    return levi_positive_count(*S.D, k) + popcount(k);
}

int codim_boundary_component(const SatakeDatum& S, Mask R) {
    return dim_symmetric_space(*S.D) - dim_D_high(S, R);
}

int dim_D_low(const SatakeDatum& S, Mask P) {
    Mask z = kappa_zeta(S, P).zeta;
    return levi_positive_count(*S.D, z) + popcount(z);
}

int dim_D_low_V(const SatakeDatum& S, Mask P, const KostantClass& c) {
    const RootDatum& D = *S.D;
    Mask z = kappa_zeta(S, P).zeta;
    std::vector<int> perp;
    for (int i = 0; i < D.num_positive(); ++i)
        if (!(D.root_support[i] & ~z) && !sgn(dot(D.root_ambient(D.positive_roots[i]), c.mu_amb))) perp.push_back(i);
    IntMatrix m(D.rank, int(perp.size()));
    for (int j = 0; j < int(perp.size()); ++j)
        for (int i = 0; i < D.rank; ++i) m(i, j) = D.positive_roots[perp[j]][i];
    return int(perp.size()) + (perp.empty() ? 0 : rank(m));
}

FiberRestriction restrict_to_fiber(const SatakeDatum& S, const IVec& lambda, const FamilySpec& f, Mask R) {
    const RootDatum& D = *S.D;
    FiberRestriction out;
    out.R = R;
    auto fiber = fiber_strata(S, R);
    int dh = dim_D_high(S, R);
    int codim = codim_boundary_component(S, R);
    int nR = D.rank - popcount(R);
    out.star_bound = Rat(codim, 2) - nR;
    out.shriek_bound = Rat(codim, 2) + nR;
    for (Mask P : fiber) {
        auto fc = face_coords(D, P);
        for (auto& c : kostant_decomposition(D, lambda, P)) {
            if (!is_self_contragredient(D, c)) continue;
            PosetModule M = build_thread(D, c, f);
            PosetModule MR = pullback_closed_face(M, fc.local(R));
            auto br = bracketing_parabolics_within(D, c, R);
            FiberEntry e;
            e.P = P;
            e.cls = c;
            e.QV = br.QV;
            e.QVp = br.QVp;
            for (Mask Q : subsets_between(br.QV, br.QVp)) {
                auto hs = supported_local_cohomology(MR, fc.local(Q));
                if (!hs.is_zero()) {
                    int d = hs.max_degree() + c.degree;
                    e.d_star = e.has_star ? std::max(e.d_star, d) : d;
                    e.has_star = true;
                    e.star_groups[Q] = hs;
                }
                auto hb = supported_local_cohomology(M, fc.local(Q));
                if (!hb.is_zero()) {
                    int cc = hb.min_degree() + c.degree + dh;
                    e.c_shriek = e.has_shriek ? std::min(e.c_shriek, cc) : cc;
                    e.has_shriek = true;
                    e.shriek_groups[Q] = hb;
                }
            }
            if (!e.has_star && !e.has_shriek) continue;
            int dl = dim_D_low(S, P), dv = dim_D_low_V(S, P, c);
            if (e.has_star) {
                Rat v = Rat(dl + dv, 2) + e.d_star;
                out.d_star = out.star_empty ? v : std::max(out.d_star, v);
                out.star_empty = false;
            }
            if (e.has_shriek) {
                Rat v = Rat(dl - dv, 2) + e.c_shriek;
                out.c_shriek = out.shriek_empty ? v : std::min(out.c_shriek, v);
                out.shriek_empty = false;
            }
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<PairingShiftCase> pairing_shift_cases(const SatakeDatum& S, const IVec& lambda) {
    const RootDatum& D = *S.D;
    std::vector<PairingShiftCase> out;
    IVec lr = lambda;
    for (auto& v : lr) v += 1;
    for (Mask R : saturated_parabolics(S)) {
        if (popcount(R) != D.rank - 1) continue;
        int a0 = __builtin_ctz(D.full() & ~R);
        for (Mask P : fiber_strata(S, R)) {
            Mask Pt = P | bit(a0);
            LeviProjector proj(D, P), projt(D, Pt);
            RVec a0p = proj(D.simple_roots[a0]);
            int a1 = -1, hits = 0;
            for (int a = 0; a < D.rank; ++a) {
                if ((Pt >> a & 1)) continue;
                if (sgn(dot(a0p, proj(D.simple_roots[a])))) {
                    a1 = a;
                    ++hits;
                }
            }
            if (hits > 1) continue;
            for (auto& c : kostant_decomposition(D, lambda, P)) {
                if (!is_self_contragredient(D, c) || sgn(c.pairing.at(a0)) <= 0) continue;
                PairingShiftCase pc;
                pc.P = P;
                pc.word = reduced_word(D, c.w);
                pc.alpha0 = a0;
                pc.alpha1 = a1;
                auto fz = factorize(D, c.w, P, Pt);
                RVec xt = D.weight_ambient(apply_weight(fz.lower, lr));
                for (int a = 0; a < D.rank; ++a) {
                    if ((Pt >> a & 1)) continue;
                    Rat before = c.pairing.at(a), after = projt.pair_simple(xt, a);
                    bool ok = a == a1 ? after > before : after == before;
                    if (!ok) {
                        std::ostringstream os;
                        os << "alpha" << a + 1 << ": " << before << " -> " << after;
                        pc.violations.push_back(os.str());
                    }
                }
                out.push_back(std::move(pc));
            }
        }
    }
    return out;
}

}  // namespace lmod
