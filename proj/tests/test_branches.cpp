#include "doctest.h"

#include <set>

#include "plc/hne.hpp"
#include "plc/parse.hpp"

using namespace plc;

namespace {
Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }

void check_certified(const BiPoly& f, const BranchSet& bs) {
    const int bound = f.degree() * f.degree();
    for (const auto& b : bs.branches) CHECK_FALSE(series_order(substitute_series(f, b.x, b.y), bound).has_value());
}
} // namespace

TEST_CASE("strict transforms") {
    auto st = strict_transform(parse_poly("y^2-x^3", Q()));
    REQUIRE(st.size() == 1);
    CHECK(st[0].local_eq == parse_poly("y^2-x", Q()));
    CHECK(strict_transform(parse_poly("x*y", Q())).size() == 2);
    auto st2 = strict_transform(parse_poly("(y-x^2)*(y+x^2)", Q()));
    REQUIRE(st2.size() == 1);
    CHECK(st2[0].local_eq.order() == 2);
}

TEST_CASE("multiplicity trees") {
    CHECK(tree_delta(build_tree(parse_poly("y^2-x^3", Q()))) == 1);
    auto t = build_tree(parse_poly("x*y", Q()));
    CHECK(t.m == 2);
    CHECK(t.children.size() == 2);
    CHECK(tree_delta(t) == 1);
    CHECK(tree_delta(build_tree(parse_poly("(y^2-x^3)*(y^2+x^3)", Q()))) == 8);
}

TEST_CASE("tree delta does not depend on the chart policy") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Field F = Fp(trial % 2 ? 5 : 3);
        BiPoly f(F);
        for (int k = 0; k < 5; ++k) f += BiPoly::monomial(F->random(rng), rng() % 5, rng() % 5);
        f += parse_poly("x^2*y+y^3", F);
        f = f - BiPoly::constant(f.coeff(0, 0)) - BiPoly::monomial(f.coeff(1, 0), 1, 0) - BiPoly::monomial(f.coeff(0, 1), 0, 1);
        if (f.order() < 2 || !squarefree_part(f).is_reduced) continue;
        CHECK(tree_delta(build_tree(f, ChartPolicy::PreferX)) == tree_delta(build_tree(f, ChartPolicy::PreferY)));
    }
}

TEST_CASE("branch decomposition examples") {
    auto bs = branch_decompose(parse_poly("x*y", Q()));
    CHECK(bs.r == 2);
    auto cusp = parse_poly("y^2-x^3", Q());
    auto b1 = branch_decompose(cusp);
    REQUIRE(b1.r == 1);
    CHECK(b1.branches[0].mt == 2);
    check_certified(cusp, b1);
    auto c2 = parse_poly("y^2+x^3", Fp(2));
    auto b2 = branch_decompose(c2);
    CHECK(b2.r == 1);
    check_certified(c2, b2);
    auto f3 = parse_poly("(y^2-x^3)*(y-x)", Q());
    auto b3 = branch_decompose(f3);
    REQUIRE(b3.r == 2);
    std::multiset<int> mts;
    for (auto& b : b3.branches) mts.insert(b.mt);
    CHECK(mts == std::multiset<int>{1, 2});
    check_certified(f3, b3);
}

TEST_CASE("branches in extensions carry orbit weights") {
    // y^2 + x^2 is irreducible over Q and over F_3 but has two branches
    for (Field F : {Q(), Fp(3)}) {
        auto f = parse_poly("y^2+x^2", F);
        auto bs = branch_decompose(f);
        CHECK(bs.r == 2);
        CHECK(bs.branches.size() == 1);
        check_certified(f, bs);
    }
}

TEST_CASE("tangent directions") {
    auto b = branch_decompose(parse_poly("y^2-x^3", Q())).branches[0];
    auto d = tangent_direction(b);
    CHECK(d.beta.is_one());
    CHECK(d.alpha.is_zero());
    auto b2 = branch_decompose(parse_poly("y-x-x^2", Q())).branches[0];
    auto d2 = tangent_direction(b2);
    CHECK(d2.beta.is_one());
    CHECK(d2.alpha.is_one());
    auto bs = branch_decompose(parse_poly("x*y", Q()));
    int vertical = 0;
    for (auto& br : bs.branches)
        if (br.tangent.beta.is_zero()) ++vertical;
    CHECK(vertical == 1);
}

TEST_CASE("shear") {
    auto f = parse_poly("(y-x)^2-x^3", Q());
    auto b = branch_decompose(f).branches[0];
    auto g = shear(f, b.tangent);
    auto bg = branch_decompose(g).branches[0];
    CHECK(bg.ix == 2);
    CHECK(bg.iy == 3);
    CHECK(shear(parse_poly("y^2-x^3", Q()), {Q()->one(), Q()->zero()}) == parse_poly("y^2-x^3", Q()));
    // the right-equivalent pair over F_3: g(x, x - y) with g = x^3+x^4+y^5 is (x+y)^3-type after y -> -y
    auto h = parse_poly("x^3+x^4+y^5", Fp(3));
    auto lhs = parse_poly("(x+y)^3+(x+y)^4+y^5", Fp(3));
    // substitute x -> x + y in h
    CHECK(h.compose(parse_poly("x+y", Fp(3)), parse_poly("y", Fp(3))) == lhs);
    CHECK_THROWS_AS(shear(f, {Q()->zero(), Q()->one()}), DegenerateDirection);
}

TEST_CASE("sum of branch multiplicities equals the multiplicity") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Field F = Fp(std::vector<int>{2, 3, 5, 7}[trial % 4]);
        BiPoly f = BiPoly::constant(F->one());
        const int nb = 1 + rng() % 3;
        for (int k = 0; k < nb; ++k) {
            // random branch y^a - c x^b + ...
            const int a = 1 + rng() % 3, e = 1 + rng() % 4;
            BiPoly g = BiPoly::monomial(F->one(), 0, a) + BiPoly::monomial(F->from_int(1 + rng() % 3), e, 0) +
                       BiPoly::monomial(F->random(rng), 1 + rng() % 3, 1);
            f *= g;
        }
        if (!squarefree_part(f).is_reduced) continue;
        auto bs = branch_decompose(f);
        int s = 0;
        for (auto& b : bs.branches) s += b.weight * b.mt;
        CHECK(s == f.order());
        check_certified(f, bs);
    }
}
