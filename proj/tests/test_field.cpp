#include "doctest.h"

#include "plc/factor.hpp"

using namespace plc;

TEST_CASE("prime field arithmetic") {
    Field F = FieldCtx::prime(7);
    CHECK(F->from_int(3) * F->from_int(5) == F->one());
    CHECK(F->from_int(3).inv() == F->from_int(5));
    CHECK(F->from_int(-1) == F->from_int(6));
}

TEST_CASE("rational arithmetic") {
    Field Q = FieldCtx::rationals();
    CHECK(Q->from_mpq(mpq_class(2, 3)) + Q->from_mpq(mpq_class(1, 6)) == Q->from_mpq(mpq_class(5, 6)));
}

TEST_CASE("F_4 generator relation") {
    Field F = FieldCtx::finite(2, 2);
    const Elem a = F->gen();
    CHECK(a * a == a + F->one());
    CHECK(F->order() == 4);
}

TEST_CASE("Frobenius fixes every element of F_q") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        Field F = FieldCtx::finite(p, k);
        Rng rng(1);
        for (int i = 0; i < 10; ++i) {
            const Elem x = F->random(rng);
            CHECK(x.pow(F->order()) == x);
            CHECK(x.pth_root().pow(static_cast<std::uint64_t>(p)) == x);
        }
    }
}

TEST_CASE("extend F_5 by a square root of 2") {
    Field F = FieldCtx::prime(5);
    UPoly h(F, {F->from_int(-2), F->zero(), F->one()});
    auto ext = extend_with_root(h);
    CHECK(ext.field->order() == 25);
    CHECK(ext.root * ext.root == ext.field->from_int(2));
}

TEST_CASE("embedding is a ring homomorphism") {
    Field F = FieldCtx::finite(3, 2);
    // t^2 - c for a non-square c
    UPoly h(F);
    Rng pick(7);
    do {
        h = UPoly(F, {-F->random(pick), F->zero(), F->one()});
    } while (!is_irreducible(h));
    auto ext = extend_with_root(h);
    Field L = ext.field;
    CHECK(L->order() == 81);
    CHECK(h.embed(L).eval(ext.root).is_zero());
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const Elem x = F->random(rng), y = F->random(rng);
        CHECK(embed(x * y, L) == embed(x, L) * embed(y, L));
        CHECK(embed(x + y, L) == embed(x, L) + embed(y, L));
    }
}

TEST_CASE("finite field factorization") {
    Field F = FieldCtx::prime(3);
    // (t^2+1)^2 (t+1)^3 t
    UPoly a(F, {F->one(), F->zero(), F->one()});
    UPoly b = UPoly::linear_root(F->from_int(-1));
    UPoly t = UPoly::linear_root(F->zero());
    auto fs = factor(a * a * b * b * b * t);
    REQUIRE(fs.size() == 3);
    int total = 0;
    for (auto& u : fs) total += u.poly.degree() * u.mult;
    CHECK(total == 8);
}

TEST_CASE("integer Zassenhaus") {
    // (x^2 - 2)(x^2 + x + 7)(3x - 1)
    Field Q = FieldCtx::rationals();
    UPoly p1(Q, {Q->from_int(-2), Q->zero(), Q->one()});
    UPoly p2(Q, {Q->from_int(7), Q->one(), Q->one()});
    UPoly p3(Q, {Q->from_int(-1), Q->from_int(3)});
    auto fs = factor(p1 * p2 * p3);
    CHECK(fs.size() == 3);
    auto swinnerton = UPoly(Q, {Q->from_int(1), Q->zero(), Q->from_int(-10), Q->zero(), Q->one()}); // x^4-10x^2+1
    CHECK(is_irreducible(swinnerton));
}

TEST_CASE("number field factorization and tower") {
    Field Q = FieldCtx::rationals();
    UPoly h(Q, {Q->from_int(-2), Q->zero(), Q->one()});
    auto e1 = adjoin_root(h);
    Field L = e1.field;
    CHECK(e1.root * e1.root == L->from_int(2));
    // t^2 - 2 splits over Q(sqrt 2)
    CHECK(factor(h.embed(L)).size() == 2);
    // t^2 - 3 stays irreducible, adjoin it
    UPoly g(L, {L->from_int(-3), L->zero(), L->one()});
    CHECK(is_irreducible(g));
    auto e2 = adjoin_root(g);
    CHECK(e2.field->degree() == 4);
    CHECK(e2.root * e2.root == e2.field->from_int(3));
    CHECK(embed(e1.root, e2.field) * embed(e1.root, e2.field) == e2.field->from_int(2));
}
