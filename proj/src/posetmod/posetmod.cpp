#include "lmod/posetmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lmod {

std::string Cutoff::str() const {
    if (kind == plus_inf) return "+inf";
    if (kind == minus_inf) return "-inf";
    return std::to_string(value);
}

bool GradedAbelian::has_torsion() const {
    for (auto& [d, g] : deg)
        if (!g.torsion.empty()) return true;
    return false;
}

int GradedAbelian::free_rank(int d) const {
    auto it = deg.find(d);
    return it == deg.end() ? 0 : it->second.free_rank;
}

int GradedAbelian::total_rank() const {
    int s = 0;
    for (auto& [d, g] : deg) s += g.free_rank;
    return s;
}

GradedAbelian GradedAbelian::shifted(int k) const {
    GradedAbelian out;
    for (auto& [d, g] : deg) out.deg[d + k] = g;
    return out;
}

std::string GradedAbelian::str() const {
    if (deg.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string& base, int d) {
        if (!first) os << " + ";
        first = false;
        os << base;
        if (d != 0) os << "[" << -d << "]";
    };
    for (auto& [d, g] : deg) {
        if (g.free_rank == 1) put("Z", d);
        else if (g.free_rank > 1) put("Z^" + std::to_string(g.free_rank), d);
        for (auto t : g.torsion) put("Z/" + std::to_string(t), d);
    }
    return os.str();
}

namespace {

std::map<int, std::vector<int>> by_degree(const std::vector<int>& deg) {
    std::map<int, std::vector<int>> m;
    for (int i = 0; i < int(deg.size()); ++i) m[deg[i]].push_back(i);
    return m;
}

const std::vector<int>& idx_or_empty(const std::map<int, std::vector<int>>& m, int d) {
    static const std::vector<int> empty;
    auto it = m.find(d);
    return it == m.end() ? empty : it->second;
}

}  // namespace

GradedAbelian cohomology(const Complex& C) {
    auto bd = by_degree(C.deg);
    // rank and torsion of d^k : C^k -> C^{k+1}
    std::map<int, int> rk;
    std::map<int, std::vector<int64_t>> tors;
    for (auto& [k, cols] : bd) {
        auto& rows = idx_or_empty(bd, k + 1);
        if (rows.empty()) continue;
        auto inv = smith_invariants(C.d.block(rows, cols));
        rk[k] = int(inv.size());
        for (auto v : inv)
            if (v > 1) tors[k].push_back(v);
    }
    GradedAbelian H;
    for (auto& [k, idx] : bd) {
        Group g;
        g.free_rank = int(idx.size()) - rk[k] - rk[k - 1];
        if (tors.count(k - 1)) g.torsion = tors[k - 1];
        if (g.free_rank != 0 || !g.torsion.empty()) H.deg[k] = g;
    }
    return H;
}

std::map<int, int> induced_rank(const Complex& C, const Complex& C2, const IntMatrix& F) {
    auto b1 = by_degree(C.deg), b2 = by_degree(C2.deg);
    std::map<int, int> out;
    for (auto& [k, cols] : b1) {
        auto& tgt = idx_or_empty(b2, k);
        if (tgt.empty()) continue;
        auto& up = idx_or_empty(b1, k + 1);
        IntMatrix Z;
        if (up.empty()) Z = IntMatrix::identity(int(cols.size()));
        else Z = column_echelon(C.d.block(up, cols)).kernel();
        if (Z.cols == 0) continue;
        IntMatrix FZ = F.block(tgt, cols) * Z;
        auto& down = idx_or_empty(b2, k - 1);
        int r;
        if (down.empty()) r = rank(FZ);
        else {
            IntMatrix B = C2.d.block(tgt, down);
            r = rank(hcat(FZ, B)) - rank(B);
        }
        if (r) out[k] = r;
    }
    return out;
}

std::vector<Mask> PosetModule::faces() const {
    std::vector<Mask> f;
    for (Mask s = 0;; s = ((s | ~top) + 1) & top) {
        f.push_back(s);
        if (s == top) break;
    }
    std::sort(f.begin(), f.end());
    return f;
}

ModuleStats& module_stats() {
    static ModuleStats s;
    return s;
}

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

void checked(const PosetModule& M) {
    auto& st = module_stats();
    st.checked++;
    if (!satisfies_condition(M)) {
        st.violations++;
        throw std::logic_error("constructed poset module violates d^2 = 0");
    }
}

}  // namespace

Complex total_complex(const PosetModule& M, const std::vector<Mask>& faces) {
    std::vector<int> off(faces.size() + 1, 0);
    for (size_t i = 0; i < faces.size(); ++i) off[i + 1] = off[i] + M.size(faces[i]);
    Complex C;
    C.d = IntMatrix(off.back(), off.back());
    for (size_t i = 0; i < faces.size(); ++i)
        for (int a = 0; a < M.size(faces[i]); ++a) C.deg.push_back(M.deg[faces[i]][a]);
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = 0; j < faces.size(); ++j) {
            if (!subset(faces[i], faces[j])) continue;
            auto it = M.g.find({faces[i], faces[j]});
            if (it == M.g.end()) continue;
            const IntMatrix& m = it->second;
            for (int a = 0; a < m.rows; ++a)
                for (int b = 0; b < m.cols; ++b) C.d(off[i] + a, off[j] + b) = m(a, b);
        }
    return C;
}

bool satisfies_condition(const PosetModule& M) {
    // degree +1 on every block, then d^2 = 0 on the total complex
    for (auto& [key, m] : M.g) {
        auto [R, S] = key;
        if (!subset(R, S) || m.rows != M.size(R) || m.cols != M.size(S)) return false;
        for (int a = 0; a < m.rows; ++a)
            for (int b = 0; b < m.cols; ++b)
                if (m(a, b) != 0 && M.deg[R][a] != M.deg[S][b] + 1) return false;
    }
    Complex C = total_complex(M, M.faces());
    return (C.d * C.d).is_zero();
}

PosetModule constant_module(int r) {
    PosetModule M;
    M.r = r;
    M.top = r >= 32 ? ~Mask(0) : (Mask(1) << r) - 1;
    M.deg.assign(size_t(1) << r, {});
    M.deg[M.top] = {0};
    checked(M);
    return M;
}

PosetModule restrict_shriek(const PosetModule& M, Mask Q) {
    if (!subset(Q, M.top)) throw std::invalid_argument("restrict_shriek: face outside module");
    PosetModule N;
    N.r = M.r;
    N.top = Q;
    N.deg.assign(M.deg.size(), {});
    for (Mask f : N.faces()) N.deg[f] = M.deg[f];
    for (auto& [key, m] : M.g)
        if (subset(key.second, Q)) N.g[key] = m;
    checked(N);
    return N;
}

namespace {

std::vector<Mask> faces_between(const PosetModule& M, Mask lo, Mask hi) {
    std::vector<Mask> out;
    for (Mask f : M.faces())
        if (subset(lo, f) && subset(f, hi)) out.push_back(f);
    return out;
}

}  // namespace

Complex local_complex(const PosetModule& M, Mask Q) { return total_complex(M, faces_between(M, Q, M.top)); }

namespace {

// tau^{>n} C as a free complex N with the projection phi: C -> N.
struct Truncated {
    Complex N;
    IntMatrix phi;
};

Truncated tau_above(const Complex& C, Cutoff n) {
    int sz = int(C.deg.size());
    if (n.kind == Cutoff::minus_inf) return {C, IntMatrix::identity(sz)};
    std::vector<int> at, hi, up;
    for (int i = 0; i < sz; ++i) {
        if (C.deg[i] == n.value) at.push_back(i);
        if (C.deg[i] > n.value) hi.push_back(i);
        if (C.deg[i] == n.value + 1) up.push_back(i);
    }
    int rk = 0;
    IntMatrix B, K;
    if (!at.empty() && !up.empty()) {
        auto ce = column_echelon(C.d.block(up, at));
        rk = ce.rank;
        B = ce.B;
        K = ce.coords();
    }
    Truncated t;
    int ns = rk + int(hi.size());
    t.N.d = IntMatrix(ns, ns);
    t.phi = IntMatrix(ns, sz);
    for (int b = 0; b < rk; ++b) t.N.deg.push_back(n.value);
    for (int i : hi) t.N.deg.push_back(C.deg[i]);
    std::vector<int> pos(sz, -1);
    for (size_t a = 0; a < hi.size(); ++a) pos[hi[a]] = rk + int(a);
    for (size_t a = 0; a < hi.size(); ++a)
        for (size_t b = 0; b < hi.size(); ++b) t.N.d(rk + int(a), rk + int(b)) = C.d(hi[a], hi[b]);
    for (int b = 0; b < rk; ++b)
        for (size_t u = 0; u < up.size(); ++u) t.N.d(pos[up[u]], b) = B(int(u), b);
    for (size_t a = 0; a < hi.size(); ++a) t.phi(rk + int(a), hi[a]) = 1;
    for (int b = 0; b < rk; ++b)
        for (size_t c = 0; c < at.size(); ++c) t.phi(b, at[c]) = K(b, int(c));
    return t;
}

}  // namespace

PosetModule truncate_at(const PosetModule& M, Mask Q, Cutoff n, bool* changed) {
    if (!subset(Q, M.top) || Q == M.top) throw std::invalid_argument("truncate_at: face must be proper");
    if (n.kind == Cutoff::plus_inf) {
        if (changed) *changed = false;
        return M;
    }
    auto up = faces_between(M, Q, M.top);
    Complex C = total_complex(M, up);
    Truncated t = tau_above(C, n);
    if (changed) *changed = !cohomology(t.N).is_zero();
    int ns = int(t.N.deg.size());
    if (ns == 0) return M;

    std::map<Mask, int> off;
    int o = 0;
    for (Mask f : up) {
        off[f] = o;
        o += M.size(f);
    }
    int q0 = M.size(Q);
    PosetModule out = M;
    for (int d : t.N.deg) out.deg[Q].push_back(d + 1);
    int q1 = q0 + ns;

    // maps into faces below Q ignore the new summand
    for (auto& [key, m] : out.g) {
        if (key.second != Q || key.first == Q) continue;
        IntMatrix w(m.rows, q1);
        for (int a = 0; a < m.rows; ++a)
            for (int b = 0; b < q0; ++b) w(a, b) = m(a, b);
        m = w;
    }
    for (Mask S : up) {
        IntMatrix w(q1, M.size(S));
        auto it = M.g.find({Q, S});
        if (it != M.g.end())
            for (int a = 0; a < q0; ++a)
                for (int b = 0; b < w.cols; ++b) w(a, b) = it->second(a, b);
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < w.cols; ++b) w(q0 + a, b) = -t.phi(a, off[S] + b);
        if (S == Q) {
            IntMatrix w2(q1, q1);
            for (int a = 0; a < q1; ++a)
                for (int b = 0; b < q0; ++b) w2(a, b) = w(a, b);
            for (int a = 0; a < ns; ++a)
                for (int b = 0; b < ns; ++b) w2(q0 + a, q0 + b) = -t.N.d(a, b);
            w = w2;
        }
        if (w.is_zero()) out.g.erase({Q, S});
        else out.g[{Q, S}] = w;
    }
    checked(out);
    return out;
}

PosetModule pullback_closed_face(const PosetModule& M, Mask R) {
    if (!subset(R, M.top)) throw std::invalid_argument("pullback_closed_face: face outside module");
    PosetModule N;
    N.r = M.r;
    N.top = R;
    N.deg.assign(M.deg.size(), {});
    std::map<Mask, std::vector<Mask>> comps;
    std::map<Mask, int> off;  // offset of E_X inside E'_{X cap R}
    for (Mask X : M.faces()) {
        Mask P = X & R;
        off[X] = N.size(P);
        comps[P].push_back(X);
        for (int d : M.deg[X]) N.deg[P].push_back(d);
    }
    for (auto& [key, m] : M.g) {
        auto [X, Y] = key;
        Mask P = X & R, P2 = Y & R;
        auto& w = N.g[{P, P2}];
        if (w.rows == 0 && w.cols == 0) w = IntMatrix(N.size(P), N.size(P2));
        for (int a = 0; a < m.rows; ++a)
            for (int b = 0; b < m.cols; ++b) w(off[X] + a, off[Y] + b) = m(a, b);
    }
    checked(N);
    return N;
}

std::vector<Mask> truncation_order(int r, bool reverse_ties) {
    Mask top = (Mask(1) << r) - 1;
    std::vector<Mask> f;
    for (Mask s = 0; s < top; ++s) f.push_back(s);
    std::sort(f.begin(), f.end(), [&](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return reverse_ties ? a > b : a < b;
    });
    return f;
}

PosetModule build_from_profile(const TruncationProfile& prof, const std::vector<Mask>* order,
                               std::vector<bool>* effective) {
    std::vector<Mask> def;
    if (!order) {
        def = truncation_order(prof.r);
        order = &def;
    }
    PosetModule M = constant_module(prof.r);
    if (effective) effective->assign(size_t(1) << prof.r, false);
    for (Mask f : *order) {
        bool ch = false;
        M = truncate_at(M, f, prof.cutoff[f], &ch);
        if (effective) (*effective)[f] = ch;
    }
    return M;
}

GradedAbelian local_cohomology(const PosetModule& M, Mask Q) { return cohomology(local_complex(M, Q)); }

GradedAbelian supported_local_cohomology(const PosetModule& M, Mask Q) {
    return cohomology(total_complex(M, faces_between(M, 0, Q)));
}

GradedAbelian link_cohomology(const PosetModule& M, Mask Q) {
    auto f = faces_between(M, Q, M.top);
    f.erase(f.begin());
    return cohomology(total_complex(M, f));
}

std::map<int, int> attaching_map_rank(const PosetModule& M, Mask Q1, Mask Q2) {
    if (!subset(Q1, Q2)) throw std::invalid_argument("attaching_map_rank: need Q1 <= Q2");
    auto f1 = faces_between(M, 0, Q1), f2 = faces_between(M, 0, Q2);
    Complex A = total_complex(M, f1), B = total_complex(M, f2);
    // inclusion of a subcomplex: f1 is an initial segment of f2 up to order
    std::map<Mask, int> off2;
    int o = 0;
    for (Mask f : f2) {
        off2[f] = o;
        o += M.size(f);
    }
    IntMatrix F(int(B.deg.size()), int(A.deg.size()));
    o = 0;
    for (Mask f : f1)
        for (int a = 0; a < M.size(f); ++a) F(off2[f] + a, o++) = 1;
    return induced_rank(A, B, F);
}

std::map<int, int> deleted_neighbourhood_rank(const PosetModule& M, Mask Q) {
    auto f = faces_between(M, Q, M.top);
    Complex A = total_complex(M, f);
    auto g = f;
    g.erase(g.begin());
    Complex B = total_complex(M, g);
    int q = M.size(Q);
    IntMatrix F(int(B.deg.size()), int(A.deg.size()));
    for (int i = 0; i < F.rows; ++i) F(i, q + i) = 1;
    return induced_rank(A, B, F);
}

GradedAbelian punctured_link_cohomology(const PosetModule& M, Mask Q) {
    std::vector<Mask> f;
    for (Mask X : M.faces())
        if (!subset(X, Q)) f.push_back(X);
    return cohomology(total_complex(M, f));
}

int E1Term::total() const { return p + q; }

std::set<int> E1Page::nonzero_totals() const {
    std::set<int> s;
    for (auto& t : terms)
        if (t.group.free_rank || !t.group.torsion.empty()) s.insert(t.total());
    return s;
}

E1Page mv_E1_page(const PosetModule& M, Mask Q) {
    E1Page pg;
    Mask S = M.top & ~Q;
    for (Mask R = S; R; R = (R - 1) & S) {
        auto H = local_cohomology(M, R);
        for (auto& [g, grp] : H.deg) pg.terms.push_back({popcount(R) - 1, g, R, grp, false});
    }
    return pg;
}

E1Page fary_E1_page(const PosetModule& M, Mask Q) {
    E1Page pg;
    Mask S = M.top & ~Q;
    for (Mask R = S; R; R = (R - 1) & S) {
        auto H = cohomology(total_complex(M, faces_between(M, R, Q | R)));
        for (auto& [g, grp] : H.deg) pg.terms.push_back({-popcount(R), g + popcount(R), R, grp, true});
    }
    return pg;
}

}  // namespace lmod
