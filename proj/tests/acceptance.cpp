// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "plc/blowup.hpp"
#include "plc/corpus.hpp"
#include "plc/oracle.hpp"
#include "plc/parse.hpp"

using namespace plc;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }
BiPoly P(const char* s, Field f) { return parse_poly(s, f); }

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [" << what << "]";
        }
    }
};

long lv(ExtNat v) { return v.finite() ? v.value() : -1; }

// 1. gamma~ = 8 and 10 for two right-equivalent curves over F_3
void c1(Outcome& o) {
    const auto t0 = Clock::now();
    Field K = Fp(3);
    const BiPoly f = P("x^3+x^4+y^5", K), g = P("(x+y)^3+(x+y)^4+y^5", K);
    const ExtNat gf = gamma_tilde(f), gg = gamma_tilde(g);
    const double secs = since(t0);
    o.require(gf == ExtNat(8), "gamma~(f)=" + gf.str());
    o.require(gg == ExtNat(10), "gamma~(g)=" + gg.str());
    o.require(f.compose(BiPoly::x(K) + BiPoly::y(K), BiPoly::y(K)) == g, "g is not f(x+y,y)");
    o.require(secs < 1.0, "runtime");
    o.note << " gamma~(f)=" << gf.str() << " gamma~(g)=" << gg.str() << " in " << secs << "s";
}

// 2. gamma~ of the axes and of a node
void c2(Outcome& o) {
    for (Field K : {Q(), Fp(2), Fp(3), Fp(7)}) {
        const std::string k = K->descriptor();
        o.require(gamma_tilde(P("x", K)) == ExtNat(0), "x over " + k);
        o.require(gamma_tilde(P("y", K)) == ExtNat(0), "y over " + k);
        o.require(gamma_tilde(P("x*y", K)) == ExtNat(1), "xy over " + k);
    }
    o.note << " gamma~(x)=0 gamma~(y)=0 gamma~(xy)=1 over QQ, F_2, F_3, F_7";
}

// 3. the cusp in characteristic 2 and 3, with resultant confirmation
void c3(Outcome& o) {
    {
        Field K = Fp(2);
        const BiPoly f = P("y^2+x^3", K);
        const LocalData d = local_data(f);
        const ExtNat k = kappa(d);
        const long dl = delta(d);
        o.require(k == ExtNat(4), "p=2 kappa");
        o.require(dl == 1 && d.bs.r == 1 && d.mt == 2, "p=2 delta/r/mt");
        o.require(milnor(d).is_inf(), "p=2 mu");
        o.require(!is_m_good(d), "p=2 m_good");
        o.require(k > ExtNat(2 * dl + d.mt - d.bs.r), "p=2 strict");
        // polar alpha f_x + beta f_y = alpha x^2 for every alpha != 0
        const BiPoly polar = f.differentiate(Var::X) + f.differentiate(Var::Y);
        o.require(oracle::i_resultant(f, polar).value == k, "p=2 oracle kappa");
        o.require(oracle::i_resultant(f, P("x", K)).value == intersection_multiplicity(d, P("x", K)), "p=2 oracle i(f,x)");
        o.require(oracle::i_resultant(f, P("y", K)).value == intersection_multiplicity(d, P("y", K)), "p=2 oracle i(f,y)");
        o.note << " p=2: kappa=" << k.str() << " > 3, mu=inf, m_good=false;";
    }
    {
        Field K = Fp(3);
        const BiPoly f = P("y^2+x^3", K);
        const LocalData d = local_data(f);
        const ExtNat k = kappa(d);
        const long dl = delta(d);
        o.require(k == ExtNat(3), "p=3 kappa");
        o.require(is_m_good(d), "p=3 m_good");
        o.require(k == ExtNat(2 * dl + d.mt - d.bs.r), "p=3 equality");
        const BiPoly polar = f.differentiate(Var::X) + f.differentiate(Var::Y);
        o.require(oracle::i_resultant(f, polar).value == k, "p=3 oracle kappa");
        o.require(oracle::i_resultant(f, P("x", K)).value == intersection_multiplicity(d, P("x", K)), "p=3 oracle i(f,x)");
        o.require(oracle::i_resultant(f, P("y", K)).value == intersection_multiplicity(d, P("y", K)), "p=3 oracle i(f,y)");
        o.note << " p=3: kappa=" << k.str() << " = 3, m_good=true; oracle agrees";
    }
}

// 4. classical formulas in characteristic 0
void c4(Outcome& o) {
    Rng rng(2024);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const BiPoly f = random_singular(Q(), rng, 5);
        AnalysisOptions opt;
        opt.relations = false;
        opt.seed = static_cast<std::uint64_t>(i);
        const InvariantReport rep = analyze(f, opt);
        const long base = 2 * rep.delta - rep.r;
        const bool good = rep.mu == ExtNat(base + 1) && rep.kappa == ExtNat(base + rep.mt) && rep.gamma.exact &&
                          rep.gamma_tilde == rep.mu && ExtNat(rep.gamma.value) == rep.mu;
        if (!good) {
            ++failures;
            if (failures <= 3) o.note << " fail: " << f.str();
        }
    }
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.note << " 100 curves, " << failures << " failures";
}

CorpusSummary gate_summary;
double gate_seconds = 0;

// 5. corpus property gate
void c5(Outcome& o) {
    CorpusSpec spec;
    spec.chars = {2, 3, 5, 7};
    spec.max_degree = 5;
    spec.count = 200;
    spec.seed = 42;
    const auto t0 = Clock::now();
    gate_summary = run_corpus(spec, static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    gate_seconds = since(t0);
    const auto& s = gate_summary;
    int relation_failures = 0;
    for (const auto& it : s.items)
        relation_failures += failed_relations(it.report.relations);
    o.require(s.failed == 0 && s.passed == 200, "items failed: " + std::to_string(s.failed));
    o.require(relation_failures == 0, "relation failures");
    o.require(s.oracle_disagree == 0, "oracle disagreements");
    o.require(s.skip_rate < 0.10, "skip rate");
    o.require(gate_seconds < 300, "runtime");
    o.note << " " << s.passed << "/200 pass, oracles " << s.oracle_agree << " agree " << s.oracle_disagree
           << " disagree " << s.oracle_inconclusive << " inconclusive, skip rate " << s.skip_rate << ", "
           << gate_seconds << "s";
}

// 6. items with p > kappa have no wild vanishing cycle
void c6(Outcome& o) {
    int n = 0, exceptions = 0;
    for (const auto& it : gate_summary.items) {
        if (!it.ok) continue;
        const auto& r = it.report;
        if (!r.kappa.finite() || static_cast<long>(r.p) <= r.kappa.value()) continue;
        ++n;
        const bool good = r.swan && *r.swan == 0 && r.mu.finite() && lv(r.kappa) == r.mu.value() + r.mt - 1 &&
                          lv(r.kappa) == 2 * r.delta + r.mt - r.r;
        if (!good) ++exceptions;
    }
    o.require(n > 0, "no items with p > kappa");
    o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
    o.note << " " << n << " items with p > kappa, " << exceptions << " exceptions";
}

// 7. first Pluecker formula against elimination
void c7(Outcome& o) {
    const std::pair<const char*, long> curves[] = {
        {"z*y^2-x^3-x^2*z", 4}, {"z*y^2-x^3", 3}, {"x^2+y*z", 2}};
    double worst = 0;
    for (std::uint64_t p : {0ULL, 11ULL, 13ULL}) {
        Field K = p ? Fp(static_cast<int>(p)) : Q();
        for (const auto& [src, expected] : curves) {
            const auto t0 = Clock::now();
            const TriPoly F = parse_projective(src, K);
            const PluckerReport rep = plucker_analysis(F);
            const oracle::Answer a = oracle::dual_degree_elim(F, 7);
            const double secs = since(t0);
            worst = std::max(worst, secs);
            const std::string tag = std::string(src) + " p=" + std::to_string(p);
            o.require(rep.product && *rep.product == expected, tag + " product");
            o.require(a.conclusive && a.value == ExtNat(expected), tag + " oracle");
            o.require(secs < 10, tag + " runtime");
        }
    }
    o.note << " products 4, 3, 2 in char 0, 11, 13; oracle agrees; slowest " << worst << "s";
}

// 8. blow-up law on irreducible branches
void c8(Outcome& o) {
    Rng rng(8);
    const Field fields[] = {Q(), Fp(2), Fp(3), Fp(5), Fp(7)};
    int unequal = 0, equal = 0, failures = 0, tries = 0;
    while ((unequal < 30 || equal < 30) && tries < 2000) {
        Field K = fields[tries % 5];
        ++tries;
        BiPoly f = random_branch(K, rng, 6);
        const bool want_equal = unequal >= 30 || (equal < 30 && tries % 2 == 0);
        if (want_equal) {
            Elem c = K->random(rng);
            while (c.is_zero()) c = K->random(rng);
            f = f.compose(BiPoly::x(K), BiPoly::y(K) - BiPoly::x(K) * c);
        }
        const LocalData d = local_data(f);
        if (d.bs.r != 1 || d.mt < 2) continue;
        const BranchData& b = d.bs.branches.front();
        const bool eq = b.ix == b.iy;
        if (eq != want_equal) continue;
        const long m = d.mt;
        const ExtNat g = gamma_tilde(d);
        const ExtNat gs = gamma_tilde(strict_transform(f).front().local_eq);
        if (!gs.finite() || !g.finite()) {
            ++failures;
            continue;
        }
        const long rhs = m * m - m + gs.value();
        const bool ok = eq ? g.value() >= rhs : g.value() == rhs;
        if (!ok) {
            ++failures;
            if (failures <= 3) o.note << " fail: " << f.str() << " over " << K->descriptor();
        }
        (eq ? equal : unequal)++;
    }
    o.require(unequal == 30 && equal == 30, "could not draw 30+30 branches");
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.note << " " << unequal << " with i(f,x)!=i(f,y) (equality), " << equal << " with equal orders (>=), "
           << failures << " failures";
}

std::string run_cli(const std::string& args) {
#ifdef PLCURVE_PATH
    const std::string cmd = std::string(PLCURVE_PATH) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
    return out;
#else
    (void)args;
    return {};
#endif
}

// 9. determinism
void c9(Outcome& o) {
    for (const char* src : {"x^3+x^4+y^5", "(y^2-x^3)*(y^2+x^3)", "x*y^3+x^5+x^4*y"}) {
        for (int p : {0, 3, 5}) {
            Field K = p ? Fp(p) : Q();
            AnalysisOptions opt;
            opt.seed = 11;
            const std::string a = to_json(analyze(P(src, K), opt)).dump();
            const std::string b = to_json(analyze(P(src, K), opt)).dump();
            o.require(a == b, std::string("analyze ") + src);
        }
    }
    CorpusSpec spec;
    spec.count = 60;
    spec.seed = 9;
    const std::string serial = to_json(run_corpus(spec, 1), true).dump();
    const std::string parallel = to_json(run_corpus(spec, 4), true).dump();
    o.require(serial == parallel, "corpus serial vs parallel");
    o.note << " analyze and corpus JSON identical across runs and worker counts";
#ifdef PLCURVE_PATH
    for (const char* args : {"local analyze --char 3 --poly \"x^3+x^4+y^5\" --seed 5 --json --emit-branches",
                             "projective analyze --char 0 --poly \"z*y^2-x^3-x^2*z\" --seed 5 --json",
                             "corpus run --seed 42 --count 40 --json --items"}) {
        const std::string a = run_cli(args), b = run_cli(args);
        o.require(!a.empty() && a == b, std::string("cli ") + args);
    }
    o.note << "; CLI output byte-identical";
#endif
}

} // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"gamma~ 8 and 10 over F_3", c1},        {"gamma~ of axes and node", c2},
        {"cusp in char 2 and 3", c3},             {"char 0 classical formulas", c4},
        {"corpus gate seed 42", c5},              {"p > kappa gate", c6},
        {"Pluecker products", c7},                {"blow-up law", c8},
        {"determinism", c9}};
    int failed = 0, id = 0;
    for (const auto& [name, fn] : criteria) {
        ++id;
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << " exception: " << e.what();
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "):" << o.note.str()
                  << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass"))
              << std::endl;
    return failed ? 1 : 0;
}
