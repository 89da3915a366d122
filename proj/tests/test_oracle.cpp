#include "doctest.h"

#include "plc/oracle.hpp"
#include "plc/parse.hpp"

using namespace plc;

namespace {
Field Q() { return FieldCtx::rationals(); }
Field Fp(int p) { return FieldCtx::prime(p); }
BiPoly P(const char* s, Field f) { return parse_poly(s, f); }
} // namespace

TEST_CASE("resultant intersection numbers") {
    auto a = oracle::i_resultant(P("x", Q()), P("y", Q()));
    CHECK(a.conclusive);
    CHECK(a.value == ExtNat(1));
    a = oracle::i_resultant(P("y^2-x^3", Q()), P("y^2+x^3", Q()));
    CHECK(a.value == ExtNat(6));
    CHECK(oracle::i_resultant(P("x", Q()), P("x*(1+y)", Q())).value.is_inf());
    a = oracle::i_resultant(P("y^2+x^3", Fp(2)), P("x^2", Fp(2)));
    CHECK(a.conclusive);
    CHECK(a.value == ExtNat(4));
    // common unit factor is ignored
    a = oracle::i_resultant(P("(1+x)*(y-x^2)", Q()), P("(1+x)*y", Q()));
    CHECK(a.value == ExtNat(2));
}

TEST_CASE("resultant oracle agrees with branch intersection numbers") {
    Rng rng(3);
    for (int p : {0, 2, 3, 7}) {
        Field K = p ? Fp(p) : Q();
        for (int t = 0; t < 5; ++t) {
            BiPoly f(K), g(K);
            for (int d = 1; d <= 4; ++d)
                for (int i = 0; i <= d; ++i) {
                    if (rng() % 3 == 0) f.set(i, d - i, K->random(rng));
                    if (rng() % 3 == 0) g.set(i, d - i, K->random(rng));
                }
            if (f.is_zero() || g.is_zero()) continue;
            const auto a = oracle::i_resultant(f, g, 9);
            if (!a.conclusive) continue;
            CHECK(a.value == intersection_multiplicity(f, g));
        }
    }
}

TEST_CASE("semigroup delta") {
    auto a = oracle::delta_semigroup(P("y^2-x^3", Q()));
    CHECK(a.conclusive);
    CHECK(a.value == ExtNat(1));
    CHECK(oracle::delta_semigroup(P("x*y", Q())).value == ExtNat(1));
    CHECK(oracle::delta_semigroup(P("(y^2-x^3)*(y-x)", Q())).value == ExtNat(3));
    CHECK(oracle::delta_semigroup(P("x^3+x^4+y^5", Fp(3))).value == ExtNat(4));
    CHECK(oracle::delta_semigroup(P("y^2+x^2", Q())).value == ExtNat(1));
    const auto d = local_data(P("y^3-x^7", Q()));
    const auto sd = oracle::branch_semigroup(d.bs.branches.front(), 2 * 6 + 2);
    CHECK(sd.generators == std::vector<int>{3, 7});
    CHECK(sd.gaps == 6);
    CHECK(sd.conductor == 12);
}

TEST_CASE("dual degree by elimination") {
    auto T = [](const char* s, Field f) { return parse_projective(s, f); };
    CHECK(oracle::dual_degree_elim(T("z*y^2-x^3-x^2*z", Q())).value == ExtNat(4));
    CHECK(oracle::dual_degree_elim(T("z*y^2-x^3", Q())).value == ExtNat(3));
    CHECK(oracle::dual_degree_elim(T("x^2+y*z", Q())).value == ExtNat(2));
    CHECK(oracle::dual_degree_elim(T("z*y^2-x^3-x^2*z", Fp(11))).value == ExtNat(4));
    CHECK(oracle::dual_degree_elim(T("x^3+y^3+z^3", Q())).value == ExtNat(6));
    CHECK_FALSE(oracle::dual_degree_elim(T("z*y^2-x^3", Fp(5))).conclusive);
}
