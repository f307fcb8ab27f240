// lmod: command-line front end for the engine.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmod/kostant.hpp"
#include "lmod/microsupport.hpp"
#include "lmod/parallel.hpp"
#include "lmod/posetmod.hpp"
#include "lmod/rootweyl.hpp"
#include "lmod/satake.hpp"
#include "lmod/thread.hpp"
#include "lmod/verify.hpp"

using namespace lmod;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int jobs = 0;
    std::string type_str;
    int rank = 0;
    std::string lambda, levi, family = "ic", perversity, profile, mu, psi, cut;
    std::vector<std::string> cutoffs, suite_list;
    std::string checkpoint;
    bool no_timing = false, list = false, all = false, verbose = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "1", "a1", "α1"; returns the 0-based index
int parse_root(std::string t, int rank) {
    const std::string alpha = "\xce\xb1";
    if (t.rfind(alpha, 0) == 0) t = t.substr(alpha.size());
    else if (!t.empty() && (t[0] == 'a' || t[0] == 's')) t = t.substr(1);
    int i = 0;
    try {
        size_t used = 0;
        i = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
        throw UsageError("cannot read simple root '" + t + "'");
    }
    if (i < 1 || i > rank) throw UsageError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    return i - 1;
}

// "α1,α3", "1,3", "{1,3}", "" or "none"
Mask parse_roots(std::string s, int rank, char sep = ',') {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }), s.end());
    if (s.empty() || s == "none") return 0;
    Mask m = 0;
    for (auto& t : split(s, sep)) m |= Mask(1) << parse_root(t, rank);
    return m;
}

IVec parse_lambda(const std::string& s, int rank) {
    if (s.empty()) return IVec(size_t(rank), 0);
    IVec l;
    for (auto& t : split(s, ',')) {
        try {
            l.push_back(std::stoll(t));
        } catch (const std::exception&) {
            throw UsageError("cannot read weight coordinate '" + t + "'");
        }
    }
    if (int(l.size()) != rank)
        throw UsageError("--lambda needs " + std::to_string(rank) + " coordinates, got " + std::to_string(l.size()));
    return l;
}

RootDatum datum(const Options& o) {
    if (o.type_str.size() != 1) throw UsageError("--type takes a single letter A-G");
    try {
        return build_root_system(o.type_str[0], o.rank);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string ivec_str(const IVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

std::string sign_char(const Rat& r) {
    int s = sgn(r);
    return s > 0 ? "+" : (s < 0 ? "-" : "0");
}

json graded_json(const GradedAbelian& H) {
    json j = json::array();
    for (auto& [d, g] : H.deg) j.push_back({{"degree", d}, {"rank", g.free_rank}, {"torsion", g.torsion}});
    return j;
}

// ---- table output ----

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    void print(std::ostream& os, bool tsv) const {
        if (tsv) {
            for (size_t i = 0; i < header.size(); ++i) os << (i ? "\t" : "") << header[i];
            os << "\n";
            for (auto& r : rows) {
                for (size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
                os << "\n";
            }
            return;
        }
        std::vector<size_t> w(header.size());
        for (size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
        for (auto& r : rows)
            for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << s << "\n";
        };
        line(header);
        for (auto& r : rows) line(r);
    }
};

void emit(const Options& o, const json& j, const Table& t, const std::string& preface = {}) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (o.format == "text" && !preface.empty()) std::cout << preface;
    t.print(std::cout, o.format == "tsv");
}

// ---- roots ----

int cmd_roots(const Options& o) {
    auto D = datum(o);
    json j = {{"group", D.name()}, {"rank", D.rank}, {"weyl_order", D.weyl_order.str()},
              {"num_positive", D.num_positive()}};
    Table t{{"index", "root", "height"}, {}};
    json roots = json::array();
    for (int i = 0; i < D.num_positive(); ++i) {
        roots.push_back({{"coords", D.positive_roots[size_t(i)]}, {"height", D.height(i)}});
        t.rows.push_back({std::to_string(i + 1), ivec_str(D.positive_roots[size_t(i)]), std::to_string(D.height(i))});
    }
    j["positive_roots"] = roots;
    std::vector<std::vector<int64_t>> cartan;
    for (int r = 0; r < D.rank; ++r) {
        cartan.emplace_back();
        for (int c = 0; c < D.rank; ++c) cartan.back().push_back(D.cartan(r, c));
    }
    j["cartan"] = cartan;
    std::string pre = D.name() + ": " + std::to_string(D.num_positive()) + " positive roots, |W| = " +
                      D.weyl_order.str() + "\n";
    emit(o, j, t, pre);
    return 0;
}

// ---- kostant ----

int cmd_kostant(const Options& o) {
    auto D = datum(o);
    Mask P = parse_roots(o.levi, D.rank);
    IVec lambda = parse_lambda(o.lambda, D.rank);
    if (!is_dominant(D, lambda)) throw UsageError("--lambda " + ivec_str(lambda) + " is not dominant");
    auto classes = kostant_decomposition(D, lambda, P);
    std::vector<std::string> header = {"w", "length", "mu"};
    std::vector<int> outside;
    for (int a = 0; a < D.rank; ++a)
        if (!(P >> a & 1)) {
            outside.push_back(a);
            header.push_back("a" + std::to_string(a + 1));
        }
    header.insert(header.end(), {"self_contragredient", "Q_V", "Q'_V"});
    Table t{header, {}};
    json rows = json::array();
    for (auto& c : classes) {
        auto br = bracketing_parabolics(D, c);
        bool sc = is_self_contragredient(D, c);
        std::vector<std::string> r = {word_str(reduced_word(D, c.w)), std::to_string(c.degree), ivec_str(c.mu)};
        json pair = json::object();
        for (int a : outside) {
            r.push_back(sign_char(c.pairing.at(a)));
            pair["a" + std::to_string(a + 1)] = rat_str(c.pairing.at(a));
        }
        r.insert(r.end(), {sc ? "yes" : "no", mask_str(br.QV, D.rank), mask_str(br.QVp, D.rank)});
        t.rows.push_back(r);
        rows.push_back({{"w", reduced_word(D, c.w)},
                        {"word", word_str(reduced_word(D, c.w))},
                        {"length", c.degree},
                        {"mu", c.mu},
                        {"pairing", pair},
                        {"self_contragredient", sc},
                        {"QV", mask_str(br.QV, D.rank)},
                        {"QVp", mask_str(br.QVp, D.rank)}});
    }
    json j = {{"group", D.name()}, {"levi", mask_str(P, D.rank)}, {"lambda", lambda}, {"classes", rows}};
    std::string pre = D.name() + ", Levi " + mask_str(P, D.rank) + ", lambda " + ivec_str(lambda) + ": " +
                      std::to_string(classes.size()) + " classes\n";
    emit(o, j, t, pre);
    return 0;
}

// ---- microsupport ----

FamilySpec family_of(const Options& o) {
    std::string f = o.family;
    if (f == "ic" || f == "wc" || f == "pushforward") {
        if (f == "pushforward" && (!o.perversity.empty() || !o.profile.empty()))
            throw UsageError("pushforward takes neither --perversity nor --weight-profile");
        if (f == "ic" && !o.profile.empty()) throw UsageError("--weight-profile only applies to --family wc");
        if (f == "wc" && !o.perversity.empty()) throw UsageError("--perversity only applies to --family ic");
        if (f == "ic") f += "(" + (o.perversity.empty() ? std::string("m") : o.perversity) + ")";
        if (f == "wc") f += "(" + (o.profile.empty() ? std::string("nu") : o.profile) + ")";
    }
    try {
        return parse_family(f);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_microsupport(const Options& o) {
    auto D = datum(o);
    IVec lambda = parse_lambda(o.lambda, D.rank);
    if (!is_dominant(D, lambda)) throw UsageError("--lambda " + ivec_str(lambda) + " is not dominant");
    auto f = family_of(o);
    auto ms = micro_support(D, lambda, f, o.jobs);
    Table t{{"P", "w", "length", "Q_V", "Q'_V", "window", "c", "d", "essential", "fundamental"}, {}};
    json entries = json::array();
    for (auto& e : ms.entries) {
        std::string win;
        for (Mask q : e.window) win += mask_str(q, D.rank);
        t.rows.push_back({mask_str(e.P, D.rank), word_str(reduced_word(D, e.cls.w)), std::to_string(e.cls.degree),
                          mask_str(e.QV, D.rank), mask_str(e.QVp, D.rank), win, std::to_string(e.c),
                          std::to_string(e.d), e.essential ? "yes" : "no", e.fundamental ? "yes" : "no"});
        json groups = json::object();
        for (auto& [q, g] : e.groups) groups[mask_str(q, D.rank)] = graded_json(g);
        json ej = {{"P", mask_str(e.P, D.rank)}, {"w", reduced_word(D, e.cls.w)},
                   {"word", word_str(reduced_word(D, e.cls.w))}, {"length", e.cls.degree},
                   {"mu", e.cls.mu}, {"QV", mask_str(e.QV, D.rank)}, {"QVp", mask_str(e.QVp, D.rank)},
                   {"c", e.c}, {"d", e.d}, {"essential", e.essential}, {"fundamental", e.fundamental}};
        if (o.verbose) ej["groups_thread_degrees"] = groups;
        entries.push_back(ej);
    }
    auto oracle = split_oracle(D);
    auto all = global_degree_bounds(D, ms.entries, oracle);
    auto ess = global_degree_bounds(D, ms.essential(), oracle);
    json j = {{"group", D.name()},
              {"lambda", lambda},
              {"family", f.str()},
              {"classes", ms.classes},
              {"skipped_not_self_contragredient", ms.skipped_not_self_contragredient},
              {"entries", entries},
              {"essential", long(ms.essential().size())},
              {"bounds", {{"oracle", oracle.preset}, {"mS", all.str()}, {"emS", ess.str()}}}};
    std::ostringstream pre;
    pre << D.name() << " lambda " << ivec_str(lambda) << " " << f.str() << ": " << ms.entries.size()
        << " entries, " << ms.essential().size() << " essential, " << ms.skipped_not_self_contragredient
        << " classes skipped (not self-contragredient)\n";
    pre << "degree bounds (c, d), " << oracle.preset << " oracle: mS " << all.str() << ", emS " << ess.str() << "\n";
    emit(o, j, t, pre.str());
    return 0;
}

// ---- simplex ----

// dots are vertices {i}, lines are edges {i,j}; marked = truncated
std::string simplex_diagram(int r, const TruncationProfile& p) {
    auto cut = [&](Mask f) { return p.cutoff[f].kind != Cutoff::plus_inf; };
    auto v = [&](int i) { return std::string(cut(Mask(1) << i) ? "*" : "o"); };
    std::ostringstream os;
    if (r == 1) {
        os << "  " << v(0) << " 1\n";
    } else if (r == 2) {
        os << "  1 " << v(0) << (cut(3) ? "=======" : ".......") << v(1) << " 2\n";
    } else if (r == 3) {
        char l = cut(5) ? '/' : '.', rr = cut(6) ? '\\' : '.';
        std::string b = cut(3) ? "-------" : ".......";
        os << "        " << v(2) << " 3\n";
        os << "       " << l << " " << rr << "\n";
        os << "      " << l << "   " << rr << "\n";
        os << "     " << l << "     " << rr << "\n";
        os << "  1 " << v(0) << b << v(1) << " 2\n";
    }
    return os.str();
}

int cmd_simplex(const Options& o) {
    int r = o.rank;
    if (r < 1 || r > 8) throw UsageError("--rank must be between 1 and 8");
    TruncationProfile p(r);
    Mask top = (Mask(1) << r) - 1;
    auto face = [&](const std::string& s) {
        Mask f = parse_roots(s, r, '+');
        if (f == top) throw UsageError("the open face cannot be truncated");
        return f;
    };
    if (!o.cut.empty())
        for (auto& t : split(o.cut, ',')) p.cutoff[face(t)] = Cutoff::kill();
    for (auto& c : o.cutoffs) {
        auto eq = c.find('=');
        if (eq == std::string::npos) throw UsageError("--cutoff takes FACE=N, got '" + c + "'");
        std::string face_s = c.substr(0, eq), v = c.substr(eq + 1);
        Mask f = face_s == "base" ? 0 : face(face_s);
        if (v == "-inf") p.cutoff[f] = Cutoff::kill();
        else if (v == "+inf" || v == "inf") p.cutoff[f] = Cutoff::never();
        else {
            try {
                p.cutoff[f] = Cutoff::at(std::stoi(v));
            } catch (const std::exception&) {
                throw UsageError("cannot read cutoff '" + v + "'");
            }
        }
    }
    std::vector<bool> eff;
    auto M = build_from_profile(p, nullptr, &eff);
    auto H = supported_local_cohomology(M, M.top);
    json faces = json::array();
    for (Mask f = 0; f < top; ++f)
        faces.push_back({{"face", f ? mask_str(f, r) : "base"}, {"cutoff", p.cutoff[f].str()}, {"effective", bool(eff[f])}});
    json j = {{"rank", r}, {"faces", faces}, {"cohomology", graded_json(H)}, {"summary", H.str()}};
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    Table t{{"degree", "rank", "torsion"}, {}};
    for (auto& [d, g] : H.deg) {
        std::string tor;
        for (auto x : g.torsion) tor += (tor.empty() ? "" : ",") + std::to_string(x);
        t.rows.push_back({std::to_string(d), std::to_string(g.free_rank), tor});
    }
    if (o.format == "tsv") {
        t.print(std::cout, true);
        return 0;
    }
    if (r <= 3) std::cout << simplex_diagram(r, p);
    std::cout << "base cutoff: " << p.cutoff[0].str() << "\n";
    std::cout << "cohomology: " << H.str() << "\n";
    for (auto& [d, g] : H.deg) {
        std::cout << "degree " << d << ": rank " << g.free_rank;
        for (auto x : g.torsion) std::cout << ", torsion Z/" << x;
        std::cout << "\n";
    }
    return 0;
}

// ---- satake ----

int cmd_satake(const Options& o) {
    auto D = datum(o);
    SatakeDatum S;
    try {
        S = o.mu.empty() ? baily_borel(D) : make_satake(D, parse_roots(o.mu, D.rank));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + (o.mu.empty() ? "; pass --mu" : ""));
    }
    json sat = json::array();
    Table t{{"R", "kappa", "zeta", "dim D_R,h", "fiber"}, {}};
    for (Mask R : saturated_parabolics(S)) {
        auto kz = kappa_zeta(S, R);
        std::string fib;
        json fj = json::array();
        for (Mask P : fiber_strata(S, R)) {
            fib += mask_str(P, D.rank);
            fj.push_back(mask_str(P, D.rank));
        }
        t.rows.push_back({mask_str(R, D.rank), mask_str(kz.kappa, D.rank), mask_str(kz.zeta, D.rank),
                          std::to_string(dim_D_high(S, R)), fib});
        sat.push_back({{"R", mask_str(R, D.rank)}, {"kappa", mask_str(kz.kappa, D.rank)},
                       {"zeta", mask_str(kz.zeta, D.rank)}, {"dim_D_high", dim_D_high(S, R)}, {"fiber", fj}});
    }
    json j = {{"group", D.name()}, {"mu_support", mask_str(S.mu_support, D.rank)}, {"saturated", sat}};
    std::ostringstream pre;
    pre << D.name() << ", mu on " << mask_str(S.mu_support, D.rank) << "\n";
    if (!o.psi.empty()) {
        Mask psi = parse_roots(o.psi, D.rank);
        auto kz = kappa_zeta(S, psi);
        Mask om = omega(S, psi);
        j["psi"] = {{"psi", mask_str(psi, D.rank)}, {"kappa", mask_str(kz.kappa, D.rank)},
                    {"zeta", mask_str(kz.zeta, D.rank)}, {"orthogonal", kz.orthogonal},
                    {"omega", mask_str(om, D.rank)}, {"saturated", is_saturated(S, psi)}};
        pre << "psi " << mask_str(psi, D.rank) << ": kappa " << mask_str(kz.kappa, D.rank) << ", zeta "
            << mask_str(kz.zeta, D.rank) << ", omega " << mask_str(om, D.rank) << "\n";
    }
    emit(o, j, t, pre.str());
    return 0;
}

// ---- verify ----

int cmd_verify(const Options& o) {
    if (o.list) {
        for (auto& s : suites())
            std::cout << s.name << "\t" << s.criterion << "\t" << (s.opt_in ? "opt-in" : "default") << "\t"
                      << s.summary << "\n";
        return 0;
    }
    std::vector<const Suite*> run;
    if (o.suite_list.empty()) {
        for (auto& s : suites())
            if (o.all || !s.opt_in) run.push_back(&s);
    } else {
        for (auto& n : o.suite_list) {
            auto s = find_suite(n);
            if (!s) {
                std::string names;
                for (auto& x : suite_names()) names += "\n  " + x;
                throw UsageError("unknown suite '" + n + "'; registered suites:" + names);
            }
            run.push_back(s);
        }
    }
    SuiteContext ctx;
    ctx.jobs = o.jobs;
    ctx.progress = &std::cerr;
    ctx.checkpoint = o.checkpoint.empty() ? "lmod-exhaustive.ckpt.json" : o.checkpoint;
    std::vector<SuiteReport> reports;
    for (auto* s : run) {
        reports.push_back(run_suite(*s, ctx));
        if (o.format == "text") {
            auto& r = reports.back();
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << "\n";
            if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
            for (auto& c : r.checks) {
                std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << "[" << c.provenance << "] " << c.name
                          << ": expected " << c.expected << ", got " << c.got << "\n";
                if (o.verbose && !c.detail.empty()) std::cout << "       " << c.detail << "\n";
            }
            std::cout << std::flush;
        }
    }
    auto j = report_json(reports, !o.no_timing);
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    if (o.format == "tsv") {
        std::cout << "suite\tcheck\tprovenance\tpass\texpected\tgot\n";
        for (auto& r : reports)
            for (auto& c : r.checks)
                std::cout << r.suite << "\t" << c.name << "\t" << c.provenance << "\t" << (c.pass ? "pass" : "fail")
                          << "\t" << c.expected << "\t" << c.got << "\n";
    }
    return j["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lmod: exact combinatorics of L-modules on parabolic posets"};
    app.require_subcommand(1);
    Options o;
    o.jobs = default_jobs();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--jobs,-j", o.jobs, "worker threads (default: LMOD_JOBS or hardware concurrency)")
        ->check(CLI::PositiveNumber);

    auto group = [&](CLI::App* c) {
        c->add_option("--type", o.type_str, "Cartan type A-G")->required();
        c->add_option("--rank", o.rank, "rank")->required();
    };
    auto roots = app.add_subcommand("roots", "positive roots and Weyl group order");
    group(roots);
    auto kostant = app.add_subcommand("kostant", "Kostant classes of a parabolic");
    group(kostant);
    kostant->add_option("--levi", o.levi, "Levi simple roots, e.g. a1,a3 (empty: Borel)");
    kostant->add_option("--lambda", o.lambda, "highest weight in fundamental weight coordinates");
    auto micro = app.add_subcommand("microsupport", "micro-support of a thread family");
    group(micro);
    micro->add_option("--lambda", o.lambda, "highest weight in fundamental weight coordinates");
    micro->add_option("--family", o.family, "pushforward, ic or wc (also ic(m), wc(mu), ...)");
    micro->add_option("--perversity", o.perversity, "m or n (ic only)")->check(CLI::IsMember({"m", "n"}));
    micro->add_option("--weight-profile", o.profile, "mu or nu (wc only)")->check(CLI::IsMember({"mu", "nu"}));
    micro->add_flag("--verbose", o.verbose, "include supported groups in thread degrees");
    auto simplex = app.add_subcommand("simplex", "truncate the constant module on a simplex");
    simplex->add_option("--rank", o.rank, "parabolic rank")->required();
    simplex->add_option("--cut", o.cut, "faces cut at -inf, e.g. a1,a2 or a1+a2 for an edge");
    simplex->add_option("--cutoff", o.cutoffs, "FACE=N with N an integer, -inf or +inf (FACE may be 'base')");
    auto satake = app.add_subcommand("satake", "saturated parabolics and fibers of the Satake projection");
    group(satake);
    satake->add_option("--mu", o.mu, "simple roots touched by the defining weight (default: last node of C_n)");
    satake->add_option("--psi", o.psi, "a set of simple roots to evaluate kappa, zeta, omega on");
    auto verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", o.suite_list, "suite names (default: all except opt-in)");
    verify->add_flag("--list", o.list, "list registered suites");
    verify->add_flag("--all", o.all, "include opt-in suites");
    verify->add_option("--checkpoint", o.checkpoint, "checkpoint file for the exhaustive suite");
    verify->add_flag("--no-timing", o.no_timing, "report zero elapsed times");
    verify->add_flag("--verbose", o.verbose, "print check details");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (o.rank < 0) throw UsageError("--rank must be positive");
        if (*roots) return cmd_roots(o);
        if (*kostant) return cmd_kostant(o);
        if (*micro) return cmd_microsupport(o);
        if (*simplex) return cmd_simplex(o);
        if (*satake) return cmd_satake(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "lmod: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lmod: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lmod: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
