#include "lmod/microsupport.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "lmod/parallel.hpp"

namespace lmod {

std::vector<MicroSupportEntry> MicroSupport::essential() const {
    std::vector<MicroSupportEntry> out;
    for (auto& e : entries)
        if (e.essential) out.push_back(e);
    return out;
}

namespace {

struct Task {
    Mask P;
    KostantClass cls;
};

}  // namespace

MicroSupport micro_support(const RootDatum& D, const IVec& lambda, const FamilySpec& f, int jobs) {
    std::vector<Task> tasks;
    for (Mask P = 0; P <= D.full(); ++P)
        for (auto& c : kostant_decomposition(D, lambda, P)) tasks.push_back({P, std::move(c)});
    std::vector<std::optional<MicroSupportEntry>> slot(tasks.size());
    std::atomic<long> skipped{0};
    parallel_for(tasks.size(), jobs, [&](size_t i) {
        const auto& t = tasks[i];
        if (!is_self_contragredient(D, t.cls)) {
            skipped++;
            return;
        }
        auto fc = face_coords(D, t.P);
        PosetModule M = build_thread(D, t.cls, f);
        auto br = bracketing_parabolics(D, t.cls);
        MicroSupportEntry e;
        e.P = t.P;
        e.cls = t.cls;
        e.QV = br.QV;
        e.QVp = br.QVp;
        Mask lo = fc.local(br.QV), hi = fc.local(br.QVp);
        Mask extra = hi & ~lo;
        std::vector<Mask> span;
        for (Mask s = 0;; s = ((s | ~extra) + 1) & extra) {
            span.push_back(lo | s);
            if (s == extra) break;
        }
        std::sort(span.begin(), span.end());
        bool first = true;
        for (Mask q : span) {
            auto H = supported_local_cohomology(M, q);
            if (H.is_zero()) continue;
            Mask g = fc.global(q);
            e.window.push_back(g);
            int lo_d = H.min_degree() + t.cls.degree, hi_d = H.max_degree() + t.cls.degree;
            e.c = first ? lo_d : std::min(e.c, lo_d);
            e.d = first ? hi_d : std::max(e.d, hi_d);
            first = false;
            e.groups[g] = std::move(H);
        }
        if (e.window.empty()) return;
        e.attaching_rank = attaching_map_rank(M, lo, hi);
        e.essential = !e.attaching_rank.empty();
        e.fundamental = has_fundamental_triple(D, e);
        slot[i] = std::move(e);
    });
    MicroSupport ms;
    ms.classes = long(tasks.size());
    ms.skipped_not_self_contragredient = skipped;
    for (auto& s : slot)
        if (s) ms.entries.push_back(std::move(*s));
    return ms;
}

bool has_fundamental_triple(const RootDatum& D, const MicroSupportEntry& e) {
    return e.P != D.full() && e.QV == e.P && e.QVp == D.full() && 2 * e.cls.degree == dim_nilradical(D, e.P);
}

FundamentalCheck classify_fundamental(const RootDatum& D, const MicroSupportEntry& e, const FamilySpec& f) {
    if (f.family != Family::ic) throw std::invalid_argument("classify_fundamental needs an ic family");
    FundamentalCheck r;
    r.fundamental = has_fundamental_triple(D, e);
    if (!r.fundamental) return r;
    auto group = [&](Mask Q) {
        auto it = e.groups.find(Q);
        return it == e.groups.end() ? GradedAbelian{} : it->second;
    };
    int l = e.cls.degree, k = D.rank - popcount(e.P);
    GradedAbelian at_p = group(e.QV).shifted(l), at_g = group(e.QVp).shifted(l);
    GradedAbelian Z;
    if (f.p == Perversity::m) {
        Z.deg[l + k] = Group{1, {}};
        r.values_ok = at_p == Z && at_g.is_zero();
    } else {
        Z.deg[l] = Group{1, {}};
        r.values_ok = at_p.is_zero() && at_g == Z;
    }
    std::ostringstream os;
    os << "at Q_V: " << at_p.str() << ", at Q'_V: " << at_g.str();
    r.detail = os.str();
    return r;
}

int dim_symmetric_space(const RootDatum& D) { return D.num_positive() + D.rank; }

RealFormOracle split_oracle(const RootDatum& D) {
    RealFormOracle o;
    o.preset = "split";
    o.dimD = [&D](Mask P) -> std::optional<int> { return levi_positive_count(D, P) + popcount(P); };
    o.dimDV = [&D](Mask P, const KostantClass& c) -> std::optional<int> {
        std::vector<IVec> perp;
        for (int i = 0; i < D.num_positive(); ++i) {
            if (D.root_support[i] & ~P) continue;
            if (sgn(dot(D.root_ambient(D.positive_roots[i]), c.mu_amb)) == 0) perp.push_back(D.positive_roots[i]);
        }
        IntMatrix m(D.rank, int(perp.size()));
        for (int j = 0; j < int(perp.size()); ++j)
            for (int i = 0; i < D.rank; ++i) m(i, j) = perp[j][i];
        return int(perp.size()) + (perp.empty() ? 0 : rank(m));
    };
    return o;
}

int64_t DegreeBounds::c_ceil() const {
    auto q = c.numerator() / c.denominator();
    return q * c.denominator() < c.numerator() ? q + 1 : q;
}

int64_t DegreeBounds::d_floor() const {
    auto q = d.numerator() / d.denominator();
    return q * d.denominator() > d.numerator() ? q - 1 : q;
}

namespace {

std::string rat_str(Rat r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

}  // namespace

std::string DegreeBounds::str() const {
    if (empty) return "(+inf, -inf)";
    return "(" + rat_str(c) + ", " + rat_str(d) + ")";
}

DegreeBounds global_degree_bounds(const RootDatum& D, const std::vector<MicroSupportEntry>& entries,
                                  const RealFormOracle& oracle) {
    DegreeBounds b;
    for (auto& e : entries) {
        auto dd = oracle.dimD(e.P);
        auto dv = oracle.dimDV(e.P, e.cls);
        if (!dd || !dv)
            throw std::invalid_argument("oracle '" + oracle.preset + "' has no value for P = " +
                                        mask_str(e.P, D.rank));
        Rat lo = Rat(*dd - *dv, 2) + e.c, hi = Rat(*dd + *dv, 2) + e.d;
        if (b.empty) {
            b.c = lo;
            b.d = hi;
            b.empty = false;
        } else {
            b.c = std::min(b.c, lo);
            b.d = std::max(b.d, hi);
        }
    }
    return b;
}

}  // namespace lmod
