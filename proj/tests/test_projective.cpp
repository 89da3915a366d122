#include "doctest.h"

#include "plc/parse.hpp"
#include "plc/projective.hpp"

using namespace plc;

namespace {
Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }
TriPoly T(const char* s, Field f) { return parse_projective(s, f); }

bool all_pass(const PluckerReport& rep) {
    for (const auto& c : rep.checks)
        if (c.status == "fail") return false;
    return true;
}
} // namespace

TEST_CASE("singular points of cubics and conics") {
    auto pts = singular_points(T("z*y^2-x^3-x^2*z", Q()));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].str() == "(0:0:1)");
    CHECK(pts[0].local_eq == parse_poly("y^2-x^3-x^2", Q()));
    pts = singular_points(T("z*y^2-x^3", Q()));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].local_eq == parse_poly("y^2-x^3", Q()));
    CHECK(singular_points(T("x^2+y*z", Q())).empty());
    CHECK(singular_points(T("x^2+y*z", Fp(3))).empty());
    CHECK_THROWS_AS(singular_points(T("x^2*z+y^3", Q()) * T("x", Q()) * T("x", Q())),
                    PositiveDimensionalSingularLocus);
    CHECK_THROWS_AS(singular_points(T("x^2+y", Q())), NotHomogeneous);
}

TEST_CASE("singular points at infinity and in extensions") {
    // cusp at (0:1:0)
    auto pts = singular_points(T("y*z^2-x^3", Q()));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].chart == 1);
    CHECK(local_data(pts[0].local_eq).mt == 2);
    // two conjugate nodes x^2 + y^2 = 0 ... quartic with nodes at (i:1:0)-type points
    const TriPoly F = T("(x^2+y^2)^2+z^3*x+z^4", Q());
    pts = singular_points(F);
    int s = 0;
    for (const auto& P : pts) s += P.weight;
    CHECK(s >= 1);
    for (const auto& P : pts) {
        CHECK(F.embed(P.field).eval(P.coords[0], P.coords[1], P.coords[2]).is_zero());
        CHECK(P.local_eq.order() >= 2);
    }
}

TEST_CASE("local invariants do not depend on the chart") {
    // node at (1:1:1)
    const TriPoly F = T("(x-z)^2*z-(y-z)^2*z-(x-z)^3", Q());
    auto pts = singular_points(F);
    bool found = false;
    for (const auto& P : pts) {
        if (P.weight != 1 || P.coords[0].is_zero() || P.coords[1].is_zero()) continue;
        found = true;
        std::vector<InvariantReport> reps;
        for (int chart = 0; chart < 3; ++chart)
            reps.push_back(analyze(local_equation(F, P.coords, chart), {{}, false, 1}));
        for (const auto& r : reps) {
            CHECK(r.delta == reps[0].delta);
            CHECK(r.kappa == reps[0].kappa);
            CHECK(r.mu == reps[0].mu);
            CHECK(r.r == reps[0].r);
            CHECK(r.mt == reps[0].mt);
        }
    }
    CHECK(found);
}

TEST_CASE("Pluecker products") {
    auto rep = plucker_analysis(T("z*y^2-x^3-x^2*z", Q()));
    CHECK(rep.product == 4);
    CHECK(rep.s == 1);
    CHECK(all_pass(rep));
    rep = plucker_analysis(T("z*y^2-x^3", Q()));
    CHECK(rep.product == 3);
    CHECK(all_pass(rep));
    rep = plucker_analysis(T("x^2+y*z", Q()));
    CHECK(rep.product == 2);
    CHECK(rep.s == 0);
    for (int p : {11, 13}) {
        CHECK(plucker_analysis(T("z*y^2-x^3-x^2*z", Fp(p))).product == 4);
        CHECK(plucker_analysis(T("z*y^2-x^3", Fp(p))).product == 3);
        CHECK(plucker_analysis(T("x^2+y*z", Fp(p))).product == 2);
    }
}

TEST_CASE("Pluecker in small characteristic") {
    // cuspidal cubic in char 2: the cusp is not m-good, so the bound is strict
    auto rep = plucker_analysis(T("z*y^2+x^3", Fp(2)));
    CHECK_FALSE(rep.m_good_global);
    REQUIRE(rep.product.has_value());
    CHECK(*rep.product < rep.bound);
    CHECK(all_pass(rep));
    // the Fermat quintic over F_5 is (x+y+z)^5
    CHECK_THROWS_AS(singular_points(T("x^5+y^5+z^5", Fp(5))), PositiveDimensionalSingularLocus);
    rep = plucker_analysis(T("x^5+y^5+z^5", Fp(7)));
    CHECK(rep.s == 0);
    CHECK(rep.product == 20);
}

TEST_CASE("reducible curves are rejected") {
    CHECK_THROWS_AS(plucker_analysis(T("x*y", Q())), NotIrreducible);
    CHECK_THROWS_AS(plucker_analysis(T("x^2+y^2", Q())), NotIrreducible);
}

namespace {

TriPoly random_form(Field K, Rng& rng, int d) {
    TriPoly F(K);
    const TriPoly x = TriPoly::var(K, 0), y = TriPoly::var(K, 1), z = TriPoly::var(K, 2);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            if (rng() % 2) F = F + x.pow(i) * y.pow(j) * z.pow(d - i - j) * K->random(rng);
    return F;
}

std::vector<Elem> elements(Field L) {
    const std::uint64_t p = L->characteristic();
    const int k = L->degree();
    std::vector<Elem> out;
    std::vector<std::uint64_t> c(k, 0);
    for (;;) {
        out.push_back(L->from_fp_coeffs(c));
        int i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) break;
    }
    return out;
}

// number of points of P^2(L) where F and its partials vanish
int brute_singular_count(const TriPoly& F, Field L) {
    const TriPoly G = F.embed(L);
    const std::array<TriPoly, 4> sys = {G, G.differentiate(0), G.differentiate(1), G.differentiate(2)};
    auto sing = [&](const Elem& a, const Elem& b, const Elem& c) {
        for (const auto& g : sys)
            if (!g.eval(a, b, c).is_zero()) return false;
        return true;
    };
    const auto els = elements(L);
    int n = 0;
    for (const auto& a : els)
        for (const auto& b : els) n += sing(a, b, L->one());
    for (const auto& a : els) n += sing(a, L->one(), L->zero());
    n += sing(L->one(), L->zero(), L->zero());
    return n;
}

} // namespace

TEST_CASE("y-free partial derivatives do not hide singular points") {
    auto pts = singular_points(T("x^2*z+y^3", Q()));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].str() == "(0:0:1)");
    const auto rep = plucker_analysis(T("x^2*z+y^3", Q()));
    CHECK(rep.product == 3);
}

TEST_CASE("singular points agree with exhaustive search over F_p and F_p^2") {
    Rng rng(77);
    int compared = 0;
    for (int p : {3, 5, 7}) {
        Field K = Fp(p);
        Field L2 = FieldCtx::finite(p, 2);
        for (int t = 0; t < 12; ++t) {
            // products of random forms meet in singular points of several degrees
            const int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 3);
            const TriPoly F = random_form(K, rng, a) * random_form(K, rng, b);
            if (F.is_zero() || F.degree() != a + b) continue;
            std::vector<SingularPoint> pts;
            try {
                pts = singular_points(F);
            } catch (const PositiveDimensionalSingularLocus&) {
                continue;
            } catch (const NotReduced&) {
                continue;
            }
            int rational = 0, over_l2 = 0;
            for (const auto& P : pts) {
                if (P.weight == 1) ++rational;
                if (P.weight <= 2) over_l2 += P.weight;
            }
            CHECK_MESSAGE(rational == brute_singular_count(F, K), F.str());
            CHECK_MESSAGE(over_l2 == brute_singular_count(F, L2), F.str());
            ++compared;
        }
    }
    CHECK(compared >= 20);
}
