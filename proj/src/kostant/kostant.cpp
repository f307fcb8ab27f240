#include "lmod/kostant.hpp"

#include <stdexcept>

namespace lmod {

LeviProjector::LeviProjector(const RootDatum& D, Mask levi) : D_(&D), levi_(levi) {
    for (int i = 0; i < D.rank; ++i)
        if (levi >> i & 1) idx_.push_back(i);
    int k = int(idx_.size());
    std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k)), inv(k, std::vector<Rat>(k, Rat(0)));
    for (int a = 0; a < k; ++a) {
        inv[a][a] = 1;
        for (int b = 0; b < k; ++b) g[a][b] = D.gram[idx_[a]][idx_[b]];
    }
    for (int c = 0; c < k; ++c) {
        int p = c;
        while (!sgn(g[p][c])) ++p;
        std::swap(g[p], g[c]);
        std::swap(inv[p], inv[c]);
        Rat d = g[c][c];
        for (int j = 0; j < k; ++j) {
            g[c][j] /= d;
            inv[c][j] /= d;
        }
        for (int r = 0; r < k; ++r) {
            if (r == c || !sgn(g[r][c])) continue;
            Rat f = g[r][c];
            for (int j = 0; j < k; ++j) {
                g[r][j] -= f * g[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    ginv_ = inv;
    proj_simple_.resize(D.rank);
    for (int j = 0; j < D.rank; ++j) proj_simple_[j] = (*this)(D.simple_roots[j]);
}

RVec LeviProjector::operator()(const RVec& x) const {
    int k = int(idx_.size());
    std::vector<Rat> b(k);
    for (int a = 0; a < k; ++a) b[a] = dot(x, D_->simple_roots[idx_[a]]);
    RVec r = x;
    for (int a = 0; a < k; ++a) {
        Rat c = 0;
        for (int e = 0; e < k; ++e) c += ginv_[a][e] * b[e];
        if (sgn(c)) r = axpy(r, -c, D_->simple_roots[idx_[a]]);
    }
    return r;
}

Rat LeviProjector::pair_simple(const RVec& x, int j) const { return dot((*this)(x), proj_simple_[j]); }

bool is_dominant(const RootDatum& D, const IVec& lambda) {
    if (int(lambda.size()) != D.rank) return false;
    for (auto v : lambda)
        if (v < 0) return false;
    return true;
}

std::vector<KostantClass> kostant_decomposition(const RootDatum& D, const IVec& lambda, Mask P) {
    if (!is_dominant(D, lambda)) throw std::invalid_argument("lambda is not a dominant weight");
    LeviProjector proj(D, P);
    IVec lr = lambda;
    for (auto& v : lr) v += 1;
    std::vector<Mask> supersets;
    Mask free = D.full() & ~P;
    for (Mask s = free;; s = (s - 1) & free) {
        supersets.push_back(P | s);
        if (s == 0) break;
    }
    std::vector<KostantClass> out;
    for (auto& w : enumerate_min_coset_reps(D, P)) {
        KostantClass c;
        c.P = P;
        c.w = w;
        c.wlr = apply_weight(w, lr);
        c.mu = c.wlr;
        for (auto& v : c.mu) v -= 1;
        c.mu_amb = D.weight_ambient(c.mu);
        c.xi = proj(c.mu_amb);
        c.inversions = inversion_set(D, w);
        c.degree = int(c.inversions.size());
        for (Mask Q : supersets) c.bidegree[Q] = bidegree_lower(D, c.inversions, Q);
        RVec x = D.weight_ambient(c.wlr);
        for (int j = 0; j < D.rank; ++j)
            if (!(P >> j & 1)) c.pairing[j] = proj.pair_simple(x, j);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_self_contragredient(const RootDatum& D, const KostantClass& c) {
    if (c.P == 0) return true;
    WeylElement w0 = longest_element(D, c.P);
    IVec m = apply_weight(w0, c.mu);
    for (int i = 0; i < D.rank; ++i)
        if ((c.P >> i & 1) && -m[i] != c.mu[i]) return false;
    return true;
}

Bracket bracketing_parabolics(const RootDatum& D, const KostantClass& c) {
    return bracketing_parabolics_within(D, c, D.full());
}

Bracket bracketing_parabolics_within(const RootDatum&, const KostantClass& c, Mask R) {
    Bracket b{c.P, c.P};
    for (auto& [j, v] : c.pairing) {
        if (!(R >> j & 1)) continue;
        if (sgn(v) < 0) b.QV |= Mask(1) << j;
        if (sgn(v) <= 0) b.QVp |= Mask(1) << j;
    }
    return b;
}

bool weight_at_least_profile(const RootDatum& D, const KostantClass& c, Mask Q, WeightProfile eta) {
    // chi - eta_Q = proj_Q(w(lambda+rho)) - eps*proj_Q(rho); the coefficient on
    // the projected simple root alpha_j is a positive multiple of the pairing
    // with the fundamental weight j.
    RVec x = D.weight_ambient(c.wlr);
    for (int j = 0; j < D.rank; ++j) {
        if (Q >> j & 1) continue;
        Rat a = dot(x, D.fundamental_weights[j]);
        Rat b = eta == WeightProfile::mu ? -dot(D.rho, D.fundamental_weights[j]) : Rat(0);
        if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) return false;
    }
    return true;
}

bool is_self_dual(const RootDatum& D, const IVec& lambda) {
    WeylElement w0 = longest_element(D, D.full());
    IVec m = apply_weight(w0, lambda);
    for (int i = 0; i < D.rank; ++i)
        if (-m[i] != lambda[i]) return false;
    return true;
}

}  // namespace lmod
