#include "doctest.h"

#include "plc/invariants.hpp"
#include "plc/parse.hpp"

using namespace plc;

namespace {
Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }
BiPoly P(const char* s, Field f) { return parse_poly(s, f); }

const RelationResult* find(const std::vector<RelationResult>& rel, const std::string& id) {
    for (const auto& r : rel)
        if (r.id == id) return &r;
    return nullptr;
}

/// Random reduced polynomial through the origin with terms of degree 2..deg.
BiPoly random_singular(Field K, Rng& rng, int deg) {
    for (;;) {
        BiPoly f(K);
        std::uniform_int_distribution<int> coin(0, 2);
        for (int d = 2; d <= deg; ++d)
            for (int i = 0; i <= d; ++i)
                if (coin(rng) == 0) f.set(i, d - i, K->random(rng));
        if (f.is_zero() || f.order() < 2) continue;
        if (squarefree_part(f).is_reduced) return f;
    }
}
} // namespace

TEST_CASE("intersection multiplicities") {
    CHECK(intersection_multiplicity(P("y^2-x^3", Q()), P("y^2+x^3", Q())) == ExtNat(6));
    CHECK(intersection_multiplicity(P("x*y", Q()), P("x+y", Q())) == ExtNat(2));
    CHECK(intersection_multiplicity(P("x", Q()), P("x*(1+y)", Q())).is_inf());
    CHECK(intersection_multiplicity(P("y", Q()), P("y-x^5", Q())) == ExtNat(5));
    CHECK(intersection_multiplicity(P("y^2", Q()), P("y-x^3", Q())) == ExtNat(6));
    CHECK(intersection_multiplicity(P("y^2-x^3", Q()), P("1+x", Q())) == ExtNat(0));
    CHECK_THROWS_AS(intersection_multiplicity(P("1+x", Q()), P("y", Q())), UndefinedAtOrigin);
    CHECK(intersection_multiplicity(P("y^2+x^3", Fp(2)), P("y^3+x^2", Fp(2))) == ExtNat(4));
}

TEST_CASE("intersection multiplicity is symmetric and additive") {
    Rng rng(5);
    for (int p : {0, 2, 3, 5}) {
        Field K = p ? Fp(p) : Q();
        for (int t = 0; t < 4; ++t) {
            const BiPoly f = random_singular(K, rng, 4), g = random_singular(K, rng, 3), h = random_singular(K, rng, 3);
            const ExtNat fg = intersection_multiplicity(f, g);
            CHECK(fg == intersection_multiplicity(g, f));
            CHECK(intersection_multiplicity(f, g * h) == fg + intersection_multiplicity(f, h));
        }
    }
}

TEST_CASE("milnor numbers") {
    CHECK(milnor(P("x*y", Q())) == ExtNat(1));
    CHECK(milnor(P("y^2+x^3", Fp(2))).is_inf());
    CHECK(milnor(P("y^2+x^3", Fp(3))).is_inf());
    CHECK(milnor(P("y^2-x^3", Q())) == ExtNat(2));
    CHECK(milnor(P("y-x^2", Q())) == ExtNat(0));
    CHECK(milnor(P("y^3-x^4", Q())) == ExtNat(6));
    CHECK(milnor(P("x*y*(x+y)", Q())) == ExtNat(4));
}

TEST_CASE("delta and branch counts") {
    CHECK(delta(P("y^2-x^3", Q())) == 1);
    CHECK(delta(P("x*y", Q())) == 1);
    CHECK(delta(P("(y^2-x^3)*(y^2+x^3)", Q())) == 8);
    CHECK(delta(P("y^2+x^3", Fp(2))) == 1);
    CHECK(delta(P("x^3+x^4+y^5", Fp(3))) == 4);
    CHECK(local_data(P("y^2+x^2", Q())).bs.r == 2);
}

TEST_CASE("kappa") {
    CHECK(kappa(P("x*y", Q())) == ExtNat(2));
    CHECK(kappa(P("y^2+x^3", Fp(2))) == ExtNat(4));
    CHECK(kappa(P("y^2+x^3", Fp(3))) == ExtNat(3));
    CHECK(kappa(P("y^2-x^3", Q())) == ExtNat(3));
    CHECK(kappa(P("y-x^2", Q())) == ExtNat(0));
}

TEST_CASE("gamma tilde") {
    CHECK(gamma_tilde(P("x", Q())) == ExtNat(0));
    CHECK(gamma_tilde(P("y", Q())) == ExtNat(0));
    CHECK(gamma_tilde(P("x*y", Q())) == ExtNat(1));
    CHECK(gamma_tilde(P("x*y", Fp(2))) == ExtNat(1));
    CHECK(gamma_tilde(P("x*(1+x+y)", Q())) == ExtNat(0));
    CHECK(gamma_tilde(P("x^3+x^4+y^5", Fp(3))) == ExtNat(8));
    CHECK(gamma_tilde(P("(x+y)^3+(x+y)^4+y^5", Fp(3))) == ExtNat(10));
    CHECK(gamma_tilde(P("y^2-x^3", Q())) == ExtNat(2));
    CHECK(gamma_tilde(P("x*(y^2-x^3)", Q())) == ExtNat(5));
    CHECK(gamma_tilde(P("x^3+x^4+y^5", Fp(3)) * P("x", Fp(3))) == ExtNat(8 + 0 + 2 * 5 - 1));
}

TEST_CASE("gamma in other coordinates") {
    // the second example is the first one after x -> x + y
    const BiPoly g = P("(x+y)^3+(x+y)^4+y^5", Fp(3));
    const LocalData d = local_data(g);
    CHECK(gamma_coords(d, P("x+y", Fp(3)), P("y", Fp(3))) == ExtNat(8));
    CHECK_FALSE(is_im_good(d));
    CHECK(is_im_good_in(d, P("x+y", Fp(3)), P("y", Fp(3))));
}

TEST_CASE("gamma search") {
    auto r = gamma(local_data(P("y^2-x^3", Q())));
    CHECK(r.exact);
    CHECK(r.value == 2);
    r = gamma(local_data(P("x^3+x^4+y^5", Fp(3))));
    CHECK(r.exact);
    CHECK(r.value == 8);
    CHECK(r.consistent);
    r = gamma(local_data(P("(x+y)^3+(x+y)^4+y^5", Fp(3))));
    CHECK(r.exact);
    CHECK(r.value == 8);
    CHECK(r.consistent);
    r = gamma(local_data(P("y^2+x^3", Fp(2))));
    CHECK(r.exact);
    CHECK(r.value == 2);
    CHECK(r.safe_lower == 2);
}

TEST_CASE("swan and goodness") {
    CHECK(swan(local_data(P("x*y", Fp(2)))) == 0);
    CHECK_FALSE(swan(local_data(P("y^2+x^3", Fp(2)))).has_value());
    CHECK(swan(local_data(P("y^3-x^4", Q()))) == 0);
    CHECK_FALSE(is_m_good(local_data(P("y^2+x^3", Fp(2)))));
    CHECK(is_m_good(local_data(P("y^2+x^3", Fp(3)))));
    CHECK(is_im_good(local_data(P("y^2+x^3", Fp(2)))));
    CHECK(is_im_good(local_data(P("x^3+x^4+y^5", Fp(3)))));
    // tangent x + y = 0 in char 2: i(f, x) = i(f, y) = 2
    CHECK_FALSE(is_im_good(local_data(P("(x+y)^2+x^3", Fp(2)))));
}

TEST_CASE("report for the characteristic 2 cusp") {
    const auto rep = analyze(P("y^2+x^3", Fp(2)));
    CHECK(rep.kappa == ExtNat(4));
    CHECK(rep.delta == 1);
    CHECK(rep.r == 1);
    CHECK(rep.mt == 2);
    CHECK(rep.mu.is_inf());
    CHECK_FALSE(rep.m_good);
    CHECK(failed_relations(rep.relations) == 0);
    CHECK(find(rep.relations, "R4")->status == "pass");
    CHECK(find(rep.relations, "R9")->status == "pass");
}

TEST_CASE("relations hold on random singularities") {
    Rng rng(11);
    for (int p : {0, 2, 3, 5, 7}) {
        Field K = p ? Fp(p) : Q();
        for (int t = 0; t < 6; ++t) {
            const BiPoly f = random_singular(K, rng, 5);
            const auto rep = analyze(f);
            INFO(f.str(), " over ", K->descriptor());
            for (const auto& r : rep.relations) {
                INFO(r.id, ": ", r.detail);
                CHECK(r.status != "fail");
            }
            if (p == 0) {
                CHECK(rep.gamma.exact);
                CHECK(rep.mu == rep.gamma_tilde);
                CHECK(*rep.swan == 0);
            }
        }
    }
}
