#include "lmod/rootweyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace lmod {

Rat dot(const RVec& x, const RVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) && sgn(y[i])) s += x[i] * y[i];
    return s;
}

RVec axpy(const RVec& x, Rat t, const RVec& y) {
    RVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += t * y[i];
    return r;
}

size_t IVecHash::operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ size_t(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
}

int popcount(Mask m) { return __builtin_popcount(m); }

std::string mask_str(Mask m, int rank) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < rank; ++i)
        if (m >> i & 1) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

namespace {

RVec unit(int dim, int i, Rat c = 1) {
    RVec v(dim, Rat(0));
    v[i] = c;
    return v;
}

RVec diff(int dim, int i, int j) {
    RVec v(dim, Rat(0));
    v[i] = 1;
    v[j] = -1;
    return v;
}

bool valid_type(char t, int n) {
    switch (t) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

std::vector<RVec> simple_roots_for(char t, int n, int& dim) {
    std::vector<RVec> s;
    Rat h(1, 2);
    switch (t) {
        case 'A':
            dim = n + 1;
            for (int i = 0; i < n; ++i) s.push_back(diff(dim, i, i + 1));
            break;
        case 'B':
        case 'C':
        case 'D':
            dim = n;
            for (int i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
            if (t == 'B') s.push_back(unit(dim, n - 1));
            if (t == 'C') s.push_back(unit(dim, n - 1, 2));
            if (t == 'D') {
                RVec v(dim, Rat(0));
                v[n - 2] = 1;
                v[n - 1] = 1;
                s.push_back(v);
            }
            break;
        case 'G': {
            dim = 3;
            s.push_back(diff(3, 0, 1));
            RVec v{Rat(-2), Rat(1), Rat(1)};
            s.push_back(v);
            break;
        }
        case 'F': {
            dim = 4;
            s.push_back(diff(4, 1, 2));
            s.push_back(diff(4, 2, 3));
            s.push_back(unit(4, 3));
            s.push_back(RVec{h, -h, -h, -h});
            break;
        }
        case 'E': {
            dim = 8;
            s.push_back(RVec{h, -h, -h, -h, -h, -h, -h, h});
            RVec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            s.push_back(a2);
            for (int i = 3; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
            break;
        }
    }
    return s;
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    int n = int(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !sgn(m[p][c])) ++p;
        if (p == n) throw std::runtime_error("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rat d = m[c][c];
        for (int j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !sgn(m[r][c])) continue;
            Rat f = m[r][c];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

BigInt weyl_order_formula(char t, int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    switch (t) {
        case 'A': return f * (n + 1);
        case 'B':
        case 'C': return f * (BigInt(1) << n);
        case 'D': return f * (BigInt(1) << (n - 1));
        case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw std::invalid_argument("unknown type");
}

int RootDatum::root_index(const IVec& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
}

RVec RootDatum::root_ambient(const IVec& c) const {
    RVec v(ambient_dim, Rat(0));
    for (int i = 0; i < rank; ++i)
        if (c[i]) v = axpy(v, Rat(c[i]), simple_roots[i]);
    return v;
}

RVec RootDatum::weight_ambient(const IVec& labels) const {
    RVec v(ambient_dim, Rat(0));
    for (int i = 0; i < rank; ++i)
        if (labels[i]) v = axpy(v, Rat(labels[i]), fundamental_weights[i]);
    return v;
}

IVec RootDatum::root_to_labels(const IVec& c) const {
    IVec l(rank, 0);
    for (int k = 0; k < rank; ++k)
        for (int j = 0; j < rank; ++j) l[k] += c[j] * cartan(j, k);
    return l;
}

int RootDatum::height(int r) const {
    int h = 0;
    for (auto x : positive_roots[r]) h += int(x);
    return h;
}

RootDatum build_root_system(char t, int n) {
    if (!valid_type(t, n))
        throw std::invalid_argument("invalid Cartan type/rank pair: " + std::string(1, t) + std::to_string(n));
    RootDatum D;
    D.cartan_type = t;
    D.rank = n;
    D.simple_roots = simple_roots_for(t, n, D.ambient_dim);
    D.gram.assign(n, std::vector<Rat>(n));
    D.cartan = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D.gram[i][j] = dot(D.simple_roots[i], D.simple_roots[j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat c = 2 * D.gram[i][j] / D.gram[j][j];
            if (c.denominator() != 1) throw std::logic_error("non-integral Cartan entry");
            D.cartan(i, j) = c.numerator();
        }

    // positive roots: closure of the simple roots under simple reflections
    std::vector<IVec> roots;
    std::unordered_map<IVec, int, IVecHash> seen;
    std::deque<IVec> queue;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen[e] = 0;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IVec b = queue.front();
        queue.pop_front();
        roots.push_back(b);
        for (int i = 0; i < n; ++i) {
            int64_t c = 0;
            for (int j = 0; j < n; ++j) c += b[j] * D.cartan(j, i);
            IVec s = b;
            s[i] -= c;
            if (!is_positive_root(s) || seen.count(s)) continue;
            seen[s] = 0;
            queue.push_back(s);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const IVec& x, const IVec& y) {
        int64_t hx = 0, hy = 0;
        for (auto v : x) hx += v;
        for (auto v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x < y;
    });
    D.positive_roots = roots;
    for (size_t k = 0; k < roots.size(); ++k) {
        D.index[roots[k]] = int(k);
        Mask m = 0;
        for (int i = 0; i < n; ++i)
            if (roots[k][i]) m |= Mask(1) << i;
        D.root_support.push_back(m);
    }

    D.rho.assign(D.ambient_dim, Rat(0));
    for (auto& r : roots) D.rho = axpy(D.rho, Rat(1, 2), D.root_ambient(r));

    std::vector<std::vector<Rat>> C(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C[i][j] = Rat(D.cartan(i, j));
    auto Ci = rat_inverse(C);
    for (int i = 0; i < n; ++i) {
        RVec w(D.ambient_dim, Rat(0));
        for (int j = 0; j < n; ++j)
            if (sgn(Ci[i][j])) w = axpy(w, Ci[i][j], D.simple_roots[j]);
        D.fundamental_weights.push_back(w);
    }

    // |W| from the exponents: the number of exponents >= k is the number of
    // positive roots of height k.
    std::vector<int> per_height;
    for (size_t k = 0; k < roots.size(); ++k) {
        int h = D.height(int(k));
        if (int(per_height.size()) < h) per_height.resize(h, 0);
        per_height[h - 1]++;
    }
    D.weyl_order = 1;
    for (int i = 1; i <= n; ++i) {
        int m = 0;
        for (int c : per_height)
            if (c >= i) ++m;
        D.weyl_order *= (m + 1);
    }
    return D;
}

RootDatum build_root_system(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad group label: " + label);
    char t = char(std::toupper(label[0]));
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad group label: " + label);
    }
    return build_root_system(t, n);
}

// ---- parabolics ----

int levi_positive_count(const RootDatum& D, Mask levi) {
    int c = 0;
    for (auto s : D.root_support)
        if ((s & ~levi) == 0) ++c;
    return c;
}

int dim_nilradical(const RootDatum& D, Mask P, Mask Q) {
    if ((P & ~Q) != 0) throw std::invalid_argument("dim_nilradical: P is not contained in Q");
    return levi_positive_count(D, Q) - levi_positive_count(D, P);
}

int dim_nilradical(const RootDatum& D, Mask P) { return dim_nilradical(D, P, D.full()); }

int perversity_value(Perversity p, int k) {
    auto fl = [](int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); };
    return p == Perversity::m ? fl(k - 2) : fl(k - 1);
}

CodimPerv codim_and_perversity(const RootDatum& D, Mask P, Perversity p) {
    if (P == D.full()) throw std::invalid_argument("the open stratum has no perversity value");
    int codim = dim_nilradical(D, P) + (D.rank - popcount(P));
    return {codim, perversity_value(p, codim)};
}

// ---- Weyl group ----

WeylElement weyl_identity(const RootDatum& D) {
    WeylElement w;
    w.action = IntMatrix::identity(D.rank);
    w.root_action = IntMatrix::identity(D.rank);
    w.has_word = true;
    return w;
}

WeylElement simple_reflection(const RootDatum& D, int i) {
    if (i < 0 || i >= D.rank) throw std::invalid_argument("simple reflection index out of range");
    WeylElement w = weyl_identity(D);
    for (int j = 0; j < D.rank; ++j) w.root_action(i, j) -= D.cartan(j, i);
    for (int k = 0; k < D.rank; ++k) w.action(k, i) -= D.cartan(i, k);
    w.word = {i};
    return w;
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) {
    WeylElement w;
    w.action = x.action * y.action;
    w.root_action = x.root_action * y.root_action;
    w.word = x.word;
    w.word.insert(w.word.end(), y.word.begin(), y.word.end());
    w.has_word = x.has_word && y.has_word;
    return w;
}

WeylElement weyl_from_word(const RootDatum& D, const std::vector<int>& word) {
    WeylElement w = weyl_identity(D);
    for (int i : word) w = weyl_mul(w, simple_reflection(D, i));
    return w;
}

WeylElement weyl_inverse(const RootDatum& D, const WeylElement& w) {
    auto word = reduced_word(D, w);
    std::reverse(word.begin(), word.end());
    return weyl_from_word(D, word);
}

IVec apply_weight(const WeylElement& w, const IVec& l) { return w.action * l; }
IVec apply_root(const WeylElement& w, const IVec& c) { return w.root_action * c; }

bool is_positive_root(const IVec& c) {
    bool any = false;
    for (auto x : c) {
        if (x < 0) return false;
        if (x > 0) any = true;
    }
    return any;
}

int weyl_length(const RootDatum& D, const WeylElement& w) {
    int l = 0;
    for (auto& b : D.positive_roots)
        if (!is_positive_root(apply_root(w, b))) ++l;
    return l;
}

std::vector<int> inversion_set(const RootDatum& D, const WeylElement& w) {
    std::vector<int> inv;
    for (auto& b : D.positive_roots) {
        IVec g = apply_root(w, b);
        if (is_positive_root(g)) continue;
        for (auto& x : g) x = -x;
        inv.push_back(D.root_index(g));
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<int> left_descents(const RootDatum& D, const WeylElement& w) {
    IVec wr = apply_weight(w, IVec(D.rank, 1));
    std::vector<int> d;
    for (int i = 0; i < D.rank; ++i)
        if (wr[i] < 0) d.push_back(i);
    return d;
}

std::vector<int> reduced_word(const RootDatum& D, const WeylElement& w0) {
    std::vector<int> word;
    WeylElement w = w0;
    for (;;) {
        auto d = left_descents(D, w);
        if (d.empty()) break;
        word.push_back(d.front());
        w = weyl_mul(simple_reflection(D, d.front()), w);
    }
    return word;
}

std::string word_str(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) s += (k ? " s" : "s") + std::to_string(word[k] + 1);
    return s;
}

bool is_min_coset_rep(const RootDatum& D, const WeylElement& w, Mask levi) {
    for (int i : left_descents(D, w))
        if (levi >> i & 1) return false;
    return true;
}

WeylElement longest_element(const RootDatum& D, Mask levi) {
    WeylElement v = weyl_identity(D);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < D.rank; ++i) {
            if (!(levi >> i & 1)) continue;
            IVec col(D.rank, 0);
            for (int k = 0; k < D.rank; ++k) col[k] = v.root_action(k, i);
            if (is_positive_root(col)) {
                v = weyl_mul(v, simple_reflection(D, i));
                grew = true;
            }
        }
    }
    v.word = reduced_word(D, v);
    v.has_word = true;
    return v;
}

namespace {

// orbit point of x = sum of fundamental weights outside the Levi; its
// stabilizer is exactly the Levi Weyl group
IVec coset_seed(const RootDatum& D, Mask levi) {
    IVec y(D.rank, 0);
    for (int i = 0; i < D.rank; ++i) y[i] = (levi >> i & 1) ? 0 : 1;
    return y;
}

// child of y under s_i, if y -> s_i y is the canonical tree edge
bool coset_child(const RootDatum& D, const IVec& y, int i, IVec& z) {
    if (y[i] <= 0) return false;
    z = y;
    for (int k = 0; k < D.rank; ++k) z[k] -= y[i] * D.cartan(i, k);
    for (int j = 0; j < D.rank; ++j)
        if (z[j] < 0) return j == i;
    return false;
}

}  // namespace

std::vector<WeylElement> enumerate_min_coset_reps(const RootDatum& D, Mask levi, std::optional<int> max_length) {
    std::vector<WeylElement> out;
    std::vector<std::pair<IVec, WeylElement>> level{{coset_seed(D, levi), weyl_identity(D)}};
    for (int len = 0; !level.empty(); ++len) {
        if (max_length && len > *max_length) break;
        std::vector<WeylElement> sorted;
        for (auto& [y, w] : level) {
            WeylElement e = w;
            e.word = reduced_word(D, e);
            e.has_word = true;
            sorted.push_back(std::move(e));
        }
        std::sort(sorted.begin(), sorted.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
        out.insert(out.end(), sorted.begin(), sorted.end());
        std::vector<std::pair<IVec, WeylElement>> next;
        for (auto& [y, w] : level)
            for (int i = 0; i < D.rank; ++i) {
                IVec z;
                if (coset_child(D, y, i, z)) next.emplace_back(z, weyl_mul(w, simple_reflection(D, i)));
            }
        level = std::move(next);
    }
    return out;
}

CosetNode coset_tree_root(const RootDatum& D, Mask levi) { return {coset_seed(D, levi), weyl_identity(D), 0, -1}; }

std::vector<CosetNode> coset_children(const RootDatum& D, const CosetNode& n) {
    std::vector<CosetNode> out;
    for (int i = 0; i < D.rank; ++i) {
        IVec z;
        if (!coset_child(D, n.y, i, z)) continue;
        IVec col(D.rank, 0);
        for (int k = 0; k < D.rank; ++k) col[k] = n.w.root_action(k, i);
        out.push_back({std::move(z), weyl_mul(n.w, simple_reflection(D, i)), n.length + 1, D.root_index(col)});
    }
    return out;
}

void for_each_min_coset_rep(const RootDatum& D, const CosetNode& start,
                            const std::function<bool(const CosetVisit&)>& visit) {
    std::vector<CosetNode> stack{start};
    while (!stack.empty()) {
        CosetNode f = std::move(stack.back());
        stack.pop_back();
        if (!visit(CosetVisit{f.y, f.w, f.length, f.new_root})) continue;
        auto ch = coset_children(D, f);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(std::move(*it));
    }
}

void for_each_min_coset_rep(const RootDatum& D, Mask levi, const std::function<bool(const CosetVisit&)>& visit) {
    for_each_min_coset_rep(D, coset_tree_root(D, levi), visit);
}

Factorization factorize(const RootDatum& D, const WeylElement& w, Mask P, Mask Q) {
    if ((P & ~Q) != 0) throw std::invalid_argument("factorize: P is not contained in Q");
    if (!is_min_coset_rep(D, w, P)) throw std::invalid_argument("factorize: w is not a minimal coset representative");
    WeylElement v = w;
    WeylElement upper = weyl_identity(D);
    for (;;) {
        int s = -1;
        for (int i : left_descents(D, v))
            if (Q >> i & 1) {
                s = i;
                break;
            }
        if (s < 0) break;
        v = weyl_mul(simple_reflection(D, s), v);
        upper = weyl_mul(upper, simple_reflection(D, s));
    }
    Factorization f{upper, v, weyl_length(D, upper), weyl_length(D, v)};
    f.upper.word = reduced_word(D, f.upper);
    f.lower.word = reduced_word(D, f.lower);
    return f;
}

int bidegree_lower(const RootDatum& D, const std::vector<int>& inversions, Mask Q) {
    int c = 0;
    for (int r : inversions)
        if (D.root_support[r] & ~Q) ++c;
    return c;
}

}  // namespace lmod
