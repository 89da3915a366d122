#include "plc/invariants.hpp"

#include <chrono>
#include <map>
#include <set>

namespace plc {

namespace {

ExtNat sub(ExtNat a, long b) { return a.is_inf() ? a : ExtNat(a.value() - b); }

long as_long(ExtNat a) {
    if (a.is_inf()) throw MathError("unexpected infinite value");
    return a.value();
}

} // namespace

LocalData local_data(const BiPoly& f, ChartPolicy policy) {
    if (f.is_zero()) throw NotReduced();
    if (!f.vanishes_at_origin()) throw NotSingularAtOrigin();
    const BiPoly rad = local_radical(f);
    LocalData d;
    d.f = f;
    d.field = f.field();
    d.p = d.field->characteristic();
    d.deg = f.degree();
    d.mt = f.order();
    d.tree = build_tree(rad, policy);
    d.bs = branches_from_tree(d.tree, d.deg);
    return d;
}

ExtNat branch_order(const BranchData& b, const BiPoly& h, int bound) {
    if (h.is_zero()) return ExtNat::inf();
    return ExtNat::from_opt(series_order(substitute_series(h, b.x, b.y), bound));
}

ExtNat intersection_multiplicity(const LocalData& d, const BiPoly& g) {
    if (g.is_zero()) return ExtNat::inf();
    if (!g.coeff(0, 0).is_zero()) return 0;
    const int bound = d.deg * g.degree();
    ExtNat s = 0;
    for (const auto& b : d.bs.branches) {
        s = s + b.weight * branch_order(b, g, bound);
        if (s.is_inf()) break;
    }
    return s;
}

ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g) {
    if (!f.is_zero() && !f.coeff(0, 0).is_zero()) throw UndefinedAtOrigin();
    if (!g.is_zero() && !g.coeff(0, 0).is_zero()) return 0;
    if (f.is_zero() || g.is_zero()) return ExtNat::inf();
    ExtNat s = 0;
    for (const auto& r : radical_chain(f)) {
        if (!r.coeff(0, 0).is_zero()) continue;
        s = s + intersection_multiplicity(local_data(r), g);
        if (s.is_inf()) break;
    }
    return s;
}

int multiplicity(const BiPoly& f) {
    if (f.is_zero()) throw MathError("multiplicity of zero");
    return f.order();
}

ExtNat milnor(const LocalData& d) {
    if (d.mt <= 1) return 0;
    const BiPoly fx = d.f.differentiate(Var::X), fy = d.f.differentiate(Var::Y);
    if (fx.is_zero() && fy.is_zero()) throw NotReduced();
    if (fx.is_zero() || fy.is_zero()) return ExtNat::inf();
    return intersection_multiplicity(fx, fy);
}

ExtNat milnor(const BiPoly& f) { return milnor(local_data(f)); }

long delta(const LocalData& d) { return tree_delta(d.tree); }
long delta(const BiPoly& f) { return delta(local_data(f)); }

ExtNat kappa(const LocalData& d) {
    if (d.mt <= 1) return 0;
    const BiPoly fx = d.f.differentiate(Var::X), fy = d.f.differentiate(Var::Y);
    const int bound = d.deg * std::max(1, d.deg - 1);
    ExtNat s = 0;
    for (const auto& b : d.bs.branches) {
        s = s + b.weight * min(branch_order(b, fx, bound), branch_order(b, fy, bound));
        if (s.is_inf()) break;
    }
    return s;
}

ExtNat kappa(const BiPoly& f) { return kappa(local_data(f)); }

ExtNat gamma_coords(const LocalData& d, const BiPoly& X0, const BiPoly& Y0) {
    Field F = d.field;
    const BiPoly X = X0.embed(F), Y = Y0.embed(F);
    const BiPoly fx = d.f.differentiate(Var::X), fy = d.f.differentiate(Var::Y);
    // chain rule: with f = G(X, Y), G_X and G_Y agree with A and B up to the unit Jacobian
    const BiPoly A = Y.differentiate(Var::Y) * fx - Y.differentiate(Var::X) * fy;
    const BiPoly B = X.differentiate(Var::X) * fy - X.differentiate(Var::Y) * fx;
    const BiPoly XA = X * A, YB = Y * B;
    struct Row {
        const BranchData* b;
        ExtNat ox, oy;
    };
    std::vector<Row> rows;
    int k = 0, l = 0;
    for (const auto& b : d.bs.branches) {
        Row r{&b, branch_order(b, X, d.deg * X.degree()), branch_order(b, Y, d.deg * Y.degree())};
        if (r.ox.is_inf()) k += b.weight;
        if (r.oy.is_inf()) l += b.weight;
        rows.push_back(r);
    }
    if (k > 1 || l > 1) throw NotReduced();
    ExtNat S = 0;
    long iX = 0, iY = 0;
    for (const auto& r : rows) {
        if (r.ox.is_inf() || r.oy.is_inf()) continue;
        const int w = r.b->weight;
        iX += w * r.ox.value();
        iY += w * r.oy.value();
        const ExtNat a = branch_order(*r.b, XA, d.deg * std::max(1, XA.degree()));
        const ExtNat c = branch_order(*r.b, YB, d.deg * std::max(1, YB.degree()));
        const ExtNat m = min(a, c);
        S = S + w * sub(m, k * r.ox.value() + l * r.oy.value());
    }
    const ExtNat gamma_g = sub(S, iX + iY - 1);
    if (k + l == 0) return gamma_g;
    const long axis = k + l == 2 ? 1 : 0;
    return sub(gamma_g, -(axis + 2 * (k * iX + l * iY) - 1));
}

ExtNat gamma_tilde(const LocalData& d) {
    return gamma_coords(d, BiPoly::x(d.field), BiPoly::y(d.field));
}

ExtNat gamma_tilde(const BiPoly& f) { return gamma_tilde(local_data(f)); }

bool is_m_good(const LocalData& d) {
    if (d.p == 0) return true;
    for (const auto& b : d.bs.branches)
        if (b.mt % static_cast<long>(d.p) == 0) return false;
    return true;
}

namespace {

bool coprime_to_p(ExtNat v, std::uint64_t p) { return v.finite() && v.value() % static_cast<long>(p) != 0; }

} // namespace

bool is_im_good_in(const LocalData& d, const BiPoly& X, const BiPoly& Y) {
    if (d.p == 0) return true;
    for (const auto& b : d.bs.branches) {
        const ExtNat ox = branch_order(b, X, d.deg * X.degree());
        const ExtNat oy = branch_order(b, Y, d.deg * Y.degree());
        if (!coprime_to_p(ox, d.p) && !coprime_to_p(oy, d.p)) return false;
    }
    return true;
}

bool is_im_good(const LocalData& d) {
    if (d.p == 0) return true;
    for (const auto& b : d.bs.branches)
        if (!coprime_to_p(b.ix, d.p) && !coprime_to_p(b.iy, d.p)) return false;
    return true;
}

std::optional<long> swan(const LocalData& d) {
    const ExtNat mu = milnor(d);
    if (mu.is_inf()) return std::nullopt;
    return mu.value() - (2 * delta(d) - d.bs.r + 1);
}

// ------------------------------------------------------------------ gamma search

namespace {

struct Candidate {
    BiPoly X, Y;
    BiPoly curve; // contact curve, when the candidate comes from one
};

bool independent(const BiPoly& X, const BiPoly& Y) {
    const Elem det = X.coeff(1, 0) * Y.coeff(0, 1) - X.coeff(0, 1) * Y.coeff(1, 0);
    return !det.is_zero() && X.coeff(0, 0).is_zero() && Y.coeff(0, 0).is_zero();
}

/// y - P(x) (or x - P(y) when the branch is tangent to x = 0) with maximal greedy contact.
Candidate contact_candidate(const BranchData& b, int deg_f, int budget) {
    Field L = b.field;
    const bool swap = b.iy < b.ix;
    const LazySeries& s = swap ? b.y : b.x; // order m
    const int m = b.mt;
    const Elem a = s.coeff(m);
    BiPoly P(L);
    const BiPoly var = swap ? BiPoly::y(L) : BiPoly::x(L);
    const BiPoly other = swap ? BiPoly::x(L) : BiPoly::y(L);
    for (int it = 0; it <= budget; ++it) {
        const LazySeries h = substitute_series(other - P, b.x, b.y);
        const auto k = series_order(h, deg_f * std::max(budget, 1));
        if (!k || *k % m != 0) break;
        const int e = *k / m;
        if (e > budget) break;
        const Elem c = h.coeff(*k) / a.pow(static_cast<std::uint64_t>(e));
        P += BiPoly::monomial(c, swap ? 0 : e, swap ? e : 0);
    }
    const BiPoly curve = other - P;
    if (swap) return {curve, var, curve};
    return {var, curve, curve};
}

} // namespace

GammaResult gamma(const LocalData& d, const GammaBudget& budget) {
    GammaResult res;
    const long base = 2 * delta(d) - d.bs.r + 1;
    res.safe_lower = base;
    res.lower = base + 1;
    res.upper = ExtNat::inf();
    Field K = d.field;

    std::vector<Candidate> cands;
    cands.push_back({BiPoly::x(K), BiPoly::y(K), {}});
    Rng rng(budget.seed);
    for (int i = 0; i < budget.linear_trials; ++i) {
        const Elem a = K->random(rng), b = K->random(rng);
        Candidate c{BiPoly::x(K) + BiPoly::y(K) * a, BiPoly::x(K) * b + BiPoly::y(K), {}};
        if (independent(c.X, c.Y)) cands.push_back(c);
    }
    for (const auto& b : d.bs.branches) {
        if (b.field != K) continue;
        const BiPoly line = BiPoly::x(K) * b.tangent.alpha - BiPoly::y(K) * b.tangent.beta;
        if (!b.tangent.beta.is_zero())
            cands.push_back({BiPoly::x(K), line, {}});
        else
            cands.push_back({line, BiPoly::y(K), {}});
    }
    std::vector<Candidate> contacts;
    for (const auto& b : d.bs.branches) {
        if (b.mt < 1) continue;
        contacts.push_back(contact_candidate(b, d.deg, budget.degree));
        cands.push_back(contacts.back());
    }
    // pairs of contact curves of different branches
    for (std::size_t i = 0; i < contacts.size(); ++i)
        for (std::size_t j = i + 1; j < contacts.size(); ++j) {
            const BiPoly& Ci = contacts[i].curve;
            const BiPoly& Cj = contacts[j].curve;
            Field L;
            try {
                L = common_field(Ci.field(), Cj.field());
            } catch (const MathError&) {
                continue;
            }
            Candidate c{Ci.embed(L), Cj.embed(L), {}};
            if (independent(c.X, c.Y)) cands.push_back(c);
        }

    std::map<Field, LocalData> lifted;
    auto data_for = [&](Field L) -> const LocalData& {
        if (L == K) return d;
        auto it = lifted.find(L);
        if (it == lifted.end()) it = lifted.emplace(L, local_data(d.f.embed(L))).first;
        return it->second;
    };
    std::set<std::string> seen;
    for (const auto& c : cands) {
        Field L = common_field(c.X.field(), c.Y.field());
        const std::string key = L->descriptor() + "|" + L->modulus_str() + "|" + c.X.str() + "|" + c.Y.str();
        if (!seen.insert(key).second) continue;
        const LocalData& dl = data_for(L);
        const ExtNat g = gamma_coords(dl, c.X, c.Y);
        ++res.evaluated;
        if (g < res.upper) res.upper = g;
        if (is_im_good_in(dl, c.X, c.Y)) {
            res.exact = true;
            res.right_im_good = true;
            res.value = base;
            res.lower = base;
            res.upper = g;
            res.consistent = g == ExtNat(base);
            res.witness_x = c.X.str();
            res.witness_y = c.Y.str();
            res.witness_field = L->descriptor();
            return res;
        }
    }
    return res;
}

// ------------------------------------------------------------------ reports

InvariantReport analyze(const LocalData& d, const AnalysisOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantReport rep;
    rep.p = d.p;
    rep.field = d.field->descriptor();
    rep.poly = d.f.str();
    rep.mt = d.mt;
    rep.r = d.bs.r;
    rep.delta = delta(d);
    rep.mu = milnor(d);
    rep.kappa = kappa(d);
    rep.gamma_tilde = gamma_tilde(d);
    GammaBudget gb = opt.budget;
    gb.seed = opt.seed;
    rep.gamma = gamma(d, gb);
    if (rep.mu.finite()) rep.swan = rep.mu.value() - (2 * rep.delta - rep.r + 1);
    rep.m_good = is_m_good(d);
    rep.im_good = is_im_good(d);
    if (opt.relations) rep.relations = verify_relations(d, rep, opt);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

InvariantReport analyze(const BiPoly& f, const AnalysisOptions& opt) { return analyze(local_data(f), opt); }

int failed_relations(const std::vector<RelationResult>& rel) {
    int n = 0;
    for (const auto& r : rel)
        if (r.status == "fail") ++n;
    return n;
}

namespace {

RelationResult make(const std::string& id, bool ok, const std::string& detail) {
    return {id, ok ? "pass" : "fail", detail};
}

RelationResult na(const std::string& id, const std::string& why) { return {id, "n/a", why}; }

std::string s(long v) { return std::to_string(v); }
std::string s(ExtNat v) { return v.str(); }

/// A smooth curve y - c x - d x^2 - e x^3 without common component with f.
std::optional<BiPoly> auxiliary_curve(const BiPoly& f, Rng& rng) {
    Field K = f.field();
    const BiPoly x = BiPoly::x(K), y = BiPoly::y(K);
    for (int attempt = 0; attempt < 40; ++attempt) {
        const Elem c = attempt < 2 ? K->from_int(attempt + 1) : K->random(rng);
        const Elem dd = K->random(rng), e = attempt < 10 ? K->zero() : K->random(rng);
        const BiPoly l = y - x * c - x * x * dd - x * x * x * e;
        if (gcd(f, l).degree() == 0) return l;
    }
    return std::nullopt;
}

BiPoly random_unit(Field K, Rng& rng) {
    const BiPoly x = BiPoly::x(K), y = BiPoly::y(K);
    return BiPoly::constant(K->one()) + x * K->random(rng) + y * K->random(rng) + x * y * K->random(rng) +
           y * y * K->random(rng);
}

struct Invs {
    long delta;
    ExtNat kappa, gamma_tilde;
    int mt, r;
};

Invs core(const LocalData& d) { return {delta(d), kappa(d), gamma_tilde(d), d.mt, d.bs.r}; }

std::string diff(const Invs& a, const Invs& b, bool with_gamma) {
    std::string out;
    if (a.delta != b.delta) out += " delta " + s(a.delta) + "!=" + s(b.delta);
    if (a.kappa != b.kappa) out += " kappa " + s(a.kappa) + "!=" + s(b.kappa);
    if (a.mt != b.mt) out += " mt " + s(a.mt) + "!=" + s(b.mt);
    if (a.r != b.r) out += " r " + s(a.r) + "!=" + s(b.r);
    if (with_gamma && a.gamma_tilde != b.gamma_tilde)
        out += " gamma_tilde " + s(a.gamma_tilde) + "!=" + s(b.gamma_tilde);
    return out;
}

} // namespace

std::vector<RelationResult> verify_relations(const LocalData& d, const InvariantReport& rep,
                                             const AnalysisOptions& opt) {
    std::vector<RelationResult> out;
    const long base = 2 * rep.delta - rep.r + 1; // 2 delta - r + 1
    const std::uint64_t p = rep.p;

    // R1
    if (rep.mu.finite())
        out.push_back(make("R1", rep.mu.value() >= base, "mu=" + s(rep.mu) + " >= 2delta-r+1=" + s(base)));
    else
        out.push_back(na("R1", "mu infinite"));

    // R2
    {
        const bool ge = rep.gamma_tilde >= ExtNat(base);
        const bool eq = rep.gamma_tilde == ExtNat(base);
        const bool ok = ge && eq == rep.im_good && rep.gamma.consistent;
        out.push_back(make("R2", ok,
                           "gamma_tilde=" + s(rep.gamma_tilde) + " vs " + s(base) +
                               (rep.im_good ? ", im-good (equality expected)" : ", not im-good (strict expected)")));
    }

    // R3
    if (rep.kappa.finite()) {
        const ExtNat rhs = rep.kappa.value() - rep.mt + 1;
        const bool ok = rep.gamma_tilde <= rhs && (!rep.m_good || rep.gamma_tilde == rhs);
        out.push_back(make("R3", ok, "gamma_tilde=" + s(rep.gamma_tilde) + " <= kappa-mt+1=" + s(rhs)));
    } else {
        out.push_back(na("R3", "kappa infinite"));
    }

    // R4
    {
        const long rhs = 2 * rep.delta + rep.mt - rep.r;
        const bool ge = rep.kappa >= ExtNat(rhs);
        const bool eq = rep.kappa == ExtNat(rhs);
        out.push_back(make("R4", ge && eq == rep.m_good,
                           "kappa=" + s(rep.kappa) + " vs 2delta+mt-r=" + s(rhs) +
                               (rep.m_good ? ", m-good (equality expected)" : ", not m-good (strict expected)")));
    }

    // R5
    if (p != 0 && p <= static_cast<std::uint64_t>(rep.mt)) {
        out.push_back(na("R5", "p <= mt"));
    } else if (!rep.mu.finite()) {
        out.push_back(na("R5", "mu infinite"));
    } else {
        const long lhs = rep.mu.value() - as_long(rep.gamma_tilde);
        out.push_back(make("R5", lhs == *rep.swan, "mu-gamma_tilde=" + s(lhs) + " Sw=" + s(*rep.swan)));
    }

    // R6
    if (!rep.kappa.finite() || (p != 0 && p <= static_cast<std::uint64_t>(rep.kappa.value()))) {
        out.push_back(na("R6", "p <= kappa"));
    } else if (!rep.mu.finite()) {
        out.push_back(make("R6", false, "p > kappa but mu infinite"));
    } else {
        const long k = rep.kappa.value();
        const bool ok = *rep.swan == 0 && k == rep.mu.value() + rep.mt - 1 && k == 2 * rep.delta + rep.mt - rep.r;
        out.push_back(make("R6", ok,
                           "Sw=" + s(*rep.swan) + " kappa=" + s(k) + " mu+mt-1=" + s(rep.mu.value() + rep.mt - 1) +
                               " 2delta+mt-r=" + s(2 * rep.delta + rep.mt - rep.r)));
    }

    Rng rng(opt.seed * 0x9e3779b97f4a7c15ULL + 7);
    const auto aux = auxiliary_curve(d.f, rng);

    // R7, R8
    if (aux) {
        const LocalData dp = local_data(d.f * *aux);
        const LocalData dl = local_data(*aux);
        const ExtNat i = intersection_multiplicity(d, *aux);
        const ExtNat g_prod = gamma_tilde(dp);
        const ExtNat g_sum = sub(rep.gamma_tilde + gamma_tilde(dl) + 2 * i, 1);
        out.push_back(make("R7", g_prod == g_sum,
                           "gamma_tilde(f*l)=" + s(g_prod) + " additive=" + s(g_sum) + " with l=" + aux->str()));
        const ExtNat k_prod = kappa(dp);
        const ExtNat k_sum = rep.kappa + kappa(dl) + 2 * i;
        const long d_prod = delta(dp);
        const ExtNat d_sum = ExtNat(rep.delta + delta(dl)) + i;
        out.push_back(make("R8", k_prod == k_sum && ExtNat(d_prod) == d_sum,
                           "kappa(f*l)=" + s(k_prod) + " additive=" + s(k_sum) + ", delta(f*l)=" + s(d_prod) +
                               " additive=" + s(d_sum)));
    } else {
        out.push_back(na("R7", "no auxiliary curve found"));
        out.push_back(na("R8", "no auxiliary curve found"));
    }

    // R9
    if (rep.r == 1 && rep.mt >= 2) {
        const auto st = strict_transform(d.f);
        const LocalData dt = local_data(st.front().local_eq);
        const ExtNat gt = gamma_tilde(dt);
        const long m = rep.mt;
        const ExtNat rhs = sub(gt, -(m * m - m));
        const BranchData& b = d.bs.branches.front();
        if (b.ix != b.iy)
            out.push_back(make("R9", rep.gamma_tilde == rhs,
                               "gamma_tilde=" + s(rep.gamma_tilde) + " == m^2-m+gamma_tilde(strict)=" + s(rhs)));
        else
            out.push_back(make("R9", rep.gamma_tilde >= rhs,
                               "gamma_tilde=" + s(rep.gamma_tilde) + " >= m^2-m+gamma_tilde(strict)=" + s(rhs)));
    } else {
        out.push_back(na("R9", "needs an irreducible singular f"));
    }

    // R10
    {
        Field K = d.field;
        const Invs base_inv = core(d);
        const BiPoly u = random_unit(K, rng);
        const LocalData du = local_data(d.f * u);
        std::string bad = diff(base_inv, core(du), true);
        if (aux) {
            const ExtNat i0 = intersection_multiplicity(d, *aux);
            const ExtNat iu = intersection_multiplicity(du, *aux * random_unit(K, rng));
            if (i0 != iu) bad += " i under unit " + s(i0) + "!=" + s(iu);
        }
        // automorphism (a x + b y, c x + e y + g x^2)
        Elem a, b, c, e;
        do {
            a = K->random(rng);
            b = K->random(rng);
            c = K->random(rng);
            e = K->random(rng);
        } while ((a * e - b * c).is_zero());
        const Elem g = K->random(rng);
        const BiPoly x = BiPoly::x(K), y = BiPoly::y(K);
        const BiPoly PX = x * a + y * b, PY = x * c + y * e + x * x * g;
        const LocalData dphi = local_data(d.f.compose(PX, PY));
        bad += diff(base_inv, core(dphi), rep.m_good);
        if (aux) {
            const ExtNat i0 = intersection_multiplicity(d, *aux);
            const ExtNat ip = intersection_multiplicity(dphi, aux->compose(PX, PY));
            if (i0 != ip) bad += " i under automorphism " + s(i0) + "!=" + s(ip);
        }
        out.push_back(make("R10", bad.empty(),
                           bad.empty() ? std::string("invariant under unit and automorphism") +
                                             (rep.m_good ? " (gamma_tilde included)" : "")
                                       : bad));
    }
    return out;
}

} // namespace plc
