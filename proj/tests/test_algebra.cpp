#include "doctest.h"

#include "plc/parse.hpp"
#include "plc/series.hpp"

using namespace plc;

namespace {
Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }
} // namespace

TEST_CASE("parse basic polynomials") {
    BiPoly f = parse_poly("y^2 - x^3", Q());
    CHECK(f.size() == 2);
    CHECK(f.coeff(0, 2) == Q()->one());
    CHECK(f.coeff(3, 0) == Q()->from_int(-1));
    CHECK(parse_poly("y^2 + x^3", Fp(2)) == parse_poly("y^2 - x^3", Fp(2)));
    CHECK(parse_poly("x/2 + 1/2*x", Q()) == parse_poly("x", Q()));
}

TEST_CASE("parse expansion against an independent expansion") {
    BiPoly f = parse_poly("(x+y)^3 + (x+y)^4 + y^5", Fp(3));
    // binomial coefficients mod 3 by Pascal's triangle
    BiPoly g(Fp(3));
    auto binom = [](int n, int k) {
        std::vector<std::vector<long>> c(n + 1, std::vector<long>(n + 1, 0));
        for (int i = 0; i <= n; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
        return c[n][k];
    };
    for (int n : {3, 4})
        for (int k = 0; k <= n; ++k) g += BiPoly::monomial(Fp(3)->from_int(binom(n, k)), k, n - k);
    g += BiPoly::monomial(Fp(3)->one(), 0, 5);
    CHECK(f == g);
    // 10 terms over the integers; binomial(4,2) = 6 vanishes mod 3 and (x+y)^3 = x^3 + y^3
    CHECK(parse_poly("(x+y)^3 + (x+y)^4 + y^5", Q()).size() == 10);
    CHECK(f.size() == 7);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("x + * y", Q()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x + z", Q()), WrongVariables);
    CHECK_THROWS_AS(parse_poly("(x + y", Q()), SyntaxError);
    CHECK_NOTHROW(parse_projective("z*y^2 - x^3", Q()));
    CHECK(parse_element("a^2+1", FieldCtx::finite(2, 2)) == FieldCtx::finite(2, 2)->gen());
}

TEST_CASE("differentiate") {
    CHECK(parse_poly("x^3", Fp(3)).differentiate(Var::X).is_zero());
    CHECK(parse_poly("y^2+x^3", Fp(2)).differentiate(Var::Y).is_zero());
    CHECK(parse_poly("x^3+x^4+y^5", Fp(3)).differentiate(Var::X) == parse_poly("x^3", Fp(3)));
}

TEST_CASE("substitute_series and series_order") {
    auto t2 = LazySeries::monomial(Q()->one(), 2);
    auto t3 = LazySeries::monomial(Q()->one(), 3);
    CHECK_FALSE(series_order(substitute_series(parse_poly("y^2-x^3", Q()), t2, t3), 50).has_value());
    auto s = substitute_series(parse_poly("y^2+x^3", Q()), t2, t3);
    CHECK(series_order(s, 100) == 6);
    CHECK(s.coeff(6) == Q()->from_int(2));
    CHECK(series_order(substitute_series(parse_poly("x", Q()), t3, LazySeries::monomial(Q()->one(), 5)), 100) == 3);
    CHECK_FALSE(series_order(t3, 2).has_value());
}

TEST_CASE("substitution is multiplicative") {
    Rng rng(11);
    Field F = Fp(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto rnd_poly = [&] {
            BiPoly p(F);
            for (int k = 0; k < 4; ++k) p += BiPoly::monomial(F->random(rng), rng() % 4, rng() % 4);
            return p;
        };
        auto rnd_series = [&] {
            Coeffs c{F->zero()};
            for (int k = 1; k < 8; ++k) c.push_back(F->random(rng));
            return LazySeries::polynomial(F, c);
        };
        BiPoly f = rnd_poly(), g = rnd_poly();
        auto x = rnd_series(), y = rnd_series();
        const Coeffs lhs = substitute_series(f * g, x, y).prefix(30);
        const Coeffs rhs = (substitute_series(f, x, y) * substitute_series(g, x, y)).prefix(30);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("implicit series solves the equation") {
    BiPoly g = parse_poly("y - x^2 + x*y^2 + y^3", Q());
    auto phi = implicit_series(g);
    auto t = LazySeries::monomial(Q()->one(), 1);
    CHECK_FALSE(series_order(substitute_series(g, t, phi), 40).has_value());
}

TEST_CASE("bivariate resultant") {
    CHECK(resultant(parse_poly("y^2-x^3", Q()), parse_poly("y", Q()), Var::Y) ==
          UPoly(Q(), {Q()->zero(), Q()->zero(), Q()->zero(), Q()->from_int(-1)}));
    CHECK(resultant(parse_poly("y-x", Q()), parse_poly("y+x", Q()), Var::Y) ==
          UPoly(Q(), {Q()->zero(), Q()->from_int(-2)}));
    CHECK(resultant(parse_poly("y-x", Fp(2)), parse_poly("y+x", Fp(2)), Var::Y).is_zero());
    CHECK(resultant(parse_poly("x", Q()), parse_poly("x", Q()), Var::X).is_zero());
}

TEST_CASE("resultant vanishes exactly on common factors") {
    Field F = Fp(7);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto rnd = [&] {
            BiPoly p = BiPoly::monomial(F->one(), 0, 1 + rng() % 2);
            for (int k = 0; k < 3; ++k) p += BiPoly::monomial(F->random(rng), rng() % 3, rng() % 2);
            return p;
        };
        BiPoly a = rnd(), b = rnd(), c = rnd();
        CHECK(resultant(a * c, b * c, Var::Y).is_zero());
        const bool coprime = gcd(a, b).degree() == 0;
        CHECK(resultant(a, b, Var::Y).is_zero() == !coprime);
        UPoly rab = resultant(a, b, Var::Y), rba = resultant(b, a, Var::Y);
        CHECK((rab == rba || rab == -rba));
    }
}

TEST_CASE("gcd and squarefree part") {
    auto r = squarefree_part(parse_poly("x^2*y", Q()));
    CHECK(r.part == parse_poly("x*y", Q()));
    CHECK_FALSE(r.is_reduced);
    auto s = squarefree_part(parse_poly("(y^2+x^3)^2", Fp(5)));
    CHECK(s.part == parse_poly("y^2+x^3", Fp(5)).normalized());
    CHECK_FALSE(s.is_reduced);
    auto u = squarefree_part(parse_poly("y^2+x^3", Fp(2)));
    CHECK(u.is_reduced);
    // p-th powers
    auto v = squarefree_part(parse_poly("(y+x^2)^3*(x+y)", Fp(3)));
    CHECK(v.part == (parse_poly("(y+x^2)*(x+y)", Fp(3))).normalized());
    auto w = squarefree_part(parse_poly("(y^2+x^3)^3*x^3", Fp(3)));
    CHECK(w.part == parse_poly("(y^2+x^3)*x", Fp(3)).normalized());
    auto chain = radical_chain(parse_poly("x^3*y*(x+y)^2", Q()));
    CHECK(chain.size() == 3);
}

TEST_CASE("squarefree part never leaves a square factor") {
    Rng rng(17);
    for (int p : {2, 3, 5}) {
        Field F = Fp(p);
        for (int trial = 0; trial < 10; ++trial) {
            auto rnd = [&] {
                BiPoly q = BiPoly::monomial(F->one(), rng() % 2, 1 + rng() % 2);
                for (int k = 0; k < 3; ++k) q += BiPoly::monomial(F->random(rng), rng() % 3, rng() % 3);
                return q;
            };
            BiPoly a = rnd(), b = rnd();
            BiPoly f = a * a * b;
            if (f.degree() <= 0) continue;
            BiPoly s = squarefree_part(f).part;
            CHECK(exact_div(f, s).has_value());
            if (f.is_zero()) continue;
            CHECK(exact_div(s.pow(6), f).has_value());
            CHECK(squarefree_part(s).is_reduced);
        }
    }
}
