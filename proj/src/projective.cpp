#include "plc/projective.hpp"

#include <chrono>

#include "plc/factor.hpp"

namespace plc {

namespace {

int relative_degree(Field big, Field small) { return big->degree() / small->degree(); }

std::vector<UPoly> nonzero(const std::vector<UPoly>& v) {
    std::vector<UPoly> out;
    for (const auto& p : v)
        if (!p.is_zero()) out.push_back(p);
    return out;
}

/// Common roots of univariate polynomials, one representative per Galois orbit.
struct Root {
    Field field;
    Elem value;
};

std::vector<Root> common_roots(const std::vector<UPoly>& polys) {
    const auto nz = nonzero(polys);
    if (nz.empty()) throw PositiveDimensionalSingularLocus();
    UPoly g = nz.front();
    for (std::size_t i = 1; i < nz.size(); ++i) g = gcd(g, nz[i]);
    std::vector<Root> out;
    if (g.degree() < 1) return out;
    for (const auto& q : irreducible_factors(g)) {
        const auto ext = adjoin_root(q);
        out.push_back({ext.field, ext.root});
    }
    return out;
}

} // namespace

std::string SingularPoint::str() const {
    return "(" + coords[0].str() + ":" + coords[1].str() + ":" + coords[2].str() + ")";
}

std::vector<SingularPoint> singular_points(const TriPoly& F) {
    if (!F.is_homogeneous()) throw NotHomogeneous();
    Field K = F.field();
    std::array<TriPoly, 4> sys = {F, F.differentiate(0), F.differentiate(1), F.differentiate(2)};
    // F is a p-th power: every point is singular
    if (sys[1].is_zero() && sys[2].is_zero() && sys[3].is_zero()) throw PositiveDimensionalSingularLocus();
    std::vector<SingularPoint> out;
    auto push = [&](Field M, std::array<Elem, 3> c, int chart) {
        SingularPoint P;
        P.field = M;
        P.coords = c;
        P.chart = chart;
        P.weight = relative_degree(M, K);
        out.push_back(P);
    };

    // affine chart z = 1
    std::vector<BiPoly> aff;
    for (const auto& g : sys)
        if (!g.is_zero()) aff.push_back(g.dehomogenize(2));
    {
        BiPoly G = aff.front();
        for (std::size_t i = 1; i < aff.size(); ++i) G = gcd(G, aff[i]);
        if (G.degree() > 0) throw PositiveDimensionalSingularLocus();
    }
    UPoly R(K);
    auto fold = [&](const UPoly& r) {
        if (!r.is_zero()) R = R.is_zero() ? r : gcd(R, r);
    };
    for (std::size_t i = 0; i < aff.size(); ++i) {
        if (aff[i].degree() == 0) continue;
        // generators free of y constrain x directly
        if (aff[i].degree_in(Var::Y) == 0) fold(aff[i].restrict_y(K->zero()));
        for (std::size_t j = i + 1; j < aff.size(); ++j) {
            if (aff[j].degree() == 0) continue;
            if (aff[i].degree_in(Var::Y) == 0 && aff[j].degree_in(Var::Y) == 0) continue;
            fold(resultant(aff[i], aff[j], Var::Y));
        }
    }
    bool constant_present = false;
    for (const auto& a : aff)
        if (a.degree() == 0) constant_present = true;
    if (!constant_present) {
        if (R.is_zero()) throw PositiveDimensionalSingularLocus();
        if (R.degree() >= 1) {
            for (const auto& q : irreducible_factors(R)) {
                const auto ax = adjoin_root(q);
                std::vector<UPoly> fibre;
                for (const auto& a : aff) fibre.push_back(a.embed(ax.field).restrict_x(ax.root));
                for (const auto& b : common_roots(fibre)) {
                    const Elem alpha = b.field->embed(ax.root);
                    push(b.field, {alpha, b.value, b.field->one()}, 2);
                }
            }
        }
    }

    // line at infinity, y = 1
    {
        std::vector<UPoly> line;
        for (const auto& g : sys) line.push_back(g.dehomogenize(1).restrict_y(K->zero()));
        for (const auto& b : common_roots(line)) push(b.field, {b.value, b.field->one(), b.field->zero()}, 1);
    }
    // (1:0:0)
    {
        bool all = true;
        for (const auto& g : sys)
            if (!g.eval(K->one(), K->zero(), K->zero()).is_zero()) all = false;
        if (all) push(K, {K->one(), K->zero(), K->zero()}, 0);
    }
    for (auto& P : out) P.local_eq = local_equation(F, P.coords, P.chart);
    return out;
}

BiPoly local_equation(const TriPoly& F, const std::array<Elem, 3>& point, int chart) {
    Field M = point[0].field();
    const Elem c = point[chart];
    if (c.is_zero()) throw MathError("chart coordinate of the point is zero");
    std::array<Elem, 2> rest;
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != chart) rest[k++] = point[i] / c;
    return F.embed(M).dehomogenize(chart).translate(rest[0], rest[1]);
}

IrreducibilityScreen screen_irreducible(const TriPoly& F, const std::vector<SingularPoint>& points,
                                        std::uint64_t seed) {
    IrreducibilityScreen res;
    const int d = F.degree();
    long delta_sum = 0;
    for (const auto& P : points) delta_sum += P.weight * P.report.delta;
    if (delta_sum > static_cast<long>(d - 1) * (d - 2) / 2) {
        res.verdict = Irreducibility::Reducible;
        res.reason = "delta(C) = " + std::to_string(delta_sum) + " exceeds the arithmetic genus";
        return res;
    }
    if (d <= 1) {
        res.verdict = Irreducibility::Irreducible;
        res.reason = "line";
        return res;
    }
    Field K = F.field();
    Rng rng(seed);
    std::vector<Field> fields = {K};
    if (K->is_finite()) {
        for (int k : {2, 3}) {
            Field L = FieldCtx::finite(K->characteristic(), K->degree() * k);
            if (L->contains(K)) fields.push_back(L);
        }
    }
    const BiPoly f = F.dehomogenize(2);
    for (Field L : fields) {
        const BiPoly fl = f.embed(L);
        for (int trial = 0; trial < 24; ++trial) {
            const Elem a = L->random(rng), b = L->random(rng);
            // restriction to the line y = a x + b
            const UPoly t = UPoly::monomial(L->one(), 1);
            UPoly acc(L);
            for (const auto& [m, c] : fl.terms())
                acc = acc + (t.pow(m.i) * (t * a + UPoly::constant(b)).pow(m.j)) * c;
            if (acc.degree() != d) continue;
            if (is_irreducible(acc)) {
                res.verdict = Irreducibility::Irreducible;
                res.reason = "irreducible restriction to y = " + a.str() + "*x + " + b.str();
                return res;
            }
        }
    }
    res.reason = "no irreducible line restriction found";
    return res;
}

PluckerReport plucker_analysis(const TriPoly& F, const ProjectiveOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    PluckerReport rep;
    Field K = F.field();
    rep.p = K->characteristic();
    rep.field = K->descriptor();
    rep.poly = F.str();
    rep.d = F.degree();
    rep.points = singular_points(F);
    rep.mu = 0;
    rep.sum_kappa = 0;
    rep.swan = 0;
    long max_kappa = 0;
    bool kappa_finite = true;
    int local_failures = 0;
    for (auto& P : rep.points) {
        P.report = analyze(local_data(P.local_eq), opt.local);
        const auto& L = P.report;
        const int w = P.weight;
        rep.s += w;
        rep.delta += w * L.delta;
        rep.mt += w * L.mt;
        rep.r += w * L.r;
        rep.mu = rep.mu + w * L.mu;
        rep.sum_kappa = rep.sum_kappa + w * L.kappa;
        if (rep.swan && L.swan)
            *rep.swan += w * *L.swan;
        else
            rep.swan.reset();
        if (L.kappa.finite())
            max_kappa = std::max(max_kappa, L.kappa.value());
        else
            kappa_finite = false;
        rep.m_good_global = rep.m_good_global && L.m_good;
        local_failures += failed_relations(L.relations);
    }
    rep.big_p = rep.p == 0 || (kappa_finite && rep.p > static_cast<std::uint64_t>(max_kappa));
    const long dd = static_cast<long>(rep.d) * (rep.d - 1);
    rep.bound = dd - 2 * rep.delta + rep.r - rep.mt;
    if (rep.sum_kappa.finite()) rep.product = dd - rep.sum_kappa.value();

    if (opt.assume_irreducible) {
        rep.irreducibility = {Irreducibility::Unknown, "assumed irreducible"};
    } else {
        rep.irreducibility = screen_irreducible(F, rep.points, opt.local.seed);
        if (rep.irreducibility.verdict == Irreducibility::Reducible) throw NotIrreducible(rep.irreducibility.reason);
    }

    auto check = [&](const std::string& id, bool applies, bool ok, const std::string& detail) {
        rep.checks.push_back({id, applies ? (ok ? "pass" : "fail") : "n/a", detail});
    };
    check("local", true, local_failures == 0, std::to_string(local_failures) + " failed local relations");
    check("P1", rep.product.has_value(), rep.product && *rep.product >= 0,
          "deg(rho)*dual degree = " + (rep.product ? std::to_string(*rep.product) : std::string("undefined")));
    check("P2", rep.product.has_value(),
          rep.product && *rep.product <= rep.bound && ((*rep.product == rep.bound) == rep.m_good_global),
          "product vs d(d-1)-2delta+r-mt = " + std::to_string(rep.bound) +
              (rep.m_good_global ? ", m-good (equality expected)" : ", not m-good (strict expected)"));
    {
        const bool applies = rep.mu.finite() && rep.swan.has_value();
        const long rhs = applies ? dd - rep.mu.value() - rep.mt + rep.s + *rep.swan : 0;
        check("P3", applies, rhs == rep.bound,
              "d(d-1)-mu-mt+s+Sw = " + (applies ? std::to_string(rhs) : std::string("undefined")));
    }
    {
        bool ok = rep.swan && *rep.swan == 0 && rep.product && *rep.product == rep.bound && rep.mu.finite() &&
                  *rep.product == dd - rep.mu.value() - rep.mt + rep.s;
        check("P4", rep.big_p, ok, rep.big_p ? "p exceeds every local kappa" : "p <= some local kappa");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace plc
