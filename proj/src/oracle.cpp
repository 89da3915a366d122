#include "plc/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plc::oracle {

namespace {

/// A field with at least `min_size` elements containing K (K itself when it is already large).
Field roomy(Field K, unsigned long min_size) {
    if (!K->is_finite() || K->order() >= min_size) return K;
    for (int k = 2; k <= 12; ++k) {
        const int deg = K->degree() * k;
        Field L = FieldCtx::finite(K->characteristic(), deg);
        if (L->contains(K) && L->order() >= min_size) return L;
    }
    return K;
}

int low_order(const UPoly& r) {
    for (int i = 0; i <= r.degree(); ++i)
        if (!r.coeff(i).is_zero()) return i;
    return -1;
}

/// Incremental row echelon form; columns are processed from left to right.
class Echelon {
public:
    explicit Echelon(Field f) : f_(f) {}
    /// Returns the pivot column of the reduced row, or -1 when it reduces to zero.
    int insert(std::vector<Elem> row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c].is_zero()) continue;
            auto it = piv_.find(c);
            if (it == piv_.end()) {
                const Elem inv = row[c].inv();
                for (std::size_t k = c; k < row.size(); ++k) row[k] *= inv;
                piv_.emplace(c, std::move(row));
                return static_cast<int>(c);
            }
            const Elem m = row[c];
            const auto& pr = it->second;
            for (std::size_t k = c; k < row.size(); ++k)
                if (!pr[k].is_zero()) row[k] -= m * pr[k];
        }
        return -1;
    }
    std::size_t rank() const { return piv_.size(); }

private:
    Field f_;
    std::map<std::size_t, std::vector<Elem>> piv_;
};

Coeffs prefix(const LazySeries& s, int n) {
    Coeffs c = s.prefix(n);
    c.resize(n, s.field()->zero());
    return c;
}

/// Coordinates of an element over the prime field.
std::vector<Elem> coordinates(const Elem& e, Field prime) {
    Field F = e.field();
    std::vector<Elem> out(F->degree(), prime->zero());
    if (F->is_finite()) {
        const auto c = e.fp_coeffs();
        for (std::size_t i = 0; i < c.size() && i < out.size(); ++i) out[i] = prime->from_int(static_cast<long long>(c[i]));
    } else {
        const auto& c = e.q_coeffs();
        for (std::size_t i = 0; i < c.size() && i < out.size(); ++i) out[i] = prime->from_mpq(c[i]);
    }
    return out;
}

} // namespace

Answer i_resultant(const BiPoly& f0, const BiPoly& g0, std::uint64_t seed) {
    Answer a;
    if (f0.is_zero() || g0.is_zero()) return {true, ExtNat::inf(), "zero argument"};
    if (!g0.coeff(0, 0).is_zero() || !f0.coeff(0, 0).is_zero()) return {true, 0, "not both through the origin"};
    BiPoly f = f0, g = g0;
    const BiPoly h = gcd(f, g);
    if (h.degree() > 0) {
        if (h.coeff(0, 0).is_zero()) return {true, ExtNat::inf(), "common component through the origin"};
        f = *exact_div(f, h);
        g = *exact_div(g, h);
    }
    Field L = roomy(f.field(), 64);
    f = f.embed(L);
    g = g.embed(L);
    Rng rng(seed);
    const BiPoly x = BiPoly::x(L), y = BiPoly::y(L);
    for (int attempt = 0; attempt < 10; ++attempt) {
        const Elem s = attempt == 0 ? L->zero() : L->random(rng);
        const BiPoly F = f.compose(x + y * s, y), G = g.compose(x + y * s, y);
        if (F.coeff(0, F.degree()).is_zero() || G.coeff(0, G.degree()).is_zero()) continue;
        // no other common zero on x = 0
        const UPoly c = gcd(F.restrict_x(L->zero()), G.restrict_x(L->zero()));
        if (c.degree() != low_order(c)) continue;
        const UPoly r = resultant(F, G, Var::Y);
        if (r.is_zero()) continue;
        return {true, low_order(r), "shear x -> x + (" + s.str() + ")*y"};
    }
    a.note = "shear exhausted";
    return a;
}

SemigroupData branch_semigroup(const BranchData& b, int ceiling) {
    SemigroupData sd;
    Field L = b.field;
    const Coeffs xs = prefix(b.x, ceiling), ys = prefix(b.y, ceiling);
    std::vector<Coeffs> xp = {Coeffs{L->one()}}, yp = {Coeffs{L->one()}};
    for (int i = 1; i < ceiling; ++i) {
        xp.push_back(ser::mul(xp.back(), xs, ceiling));
        yp.push_back(ser::mul(yp.back(), ys, ceiling));
    }
    Echelon ech(L);
    std::set<int> vals;
    for (int deg = 0; deg < ceiling; ++deg)
        for (int j = 0; j <= deg; ++j) {
            Coeffs row = ser::mul(xp[deg - j], yp[j], ceiling);
            row.resize(ceiling, L->zero());
            const int v = ech.insert(row);
            if (v >= 0) vals.insert(v);
        }
    sd.values.assign(vals.begin(), vals.end());
    sd.conductor = ceiling;
    while (sd.conductor > 0 && vals.count(sd.conductor - 1)) --sd.conductor;
    for (int v = 0; v < sd.conductor; ++v)
        if (!vals.count(v)) ++sd.gaps;
    for (int v : sd.values) {
        if (v == 0) continue;
        bool sum = false;
        for (int u : sd.values)
            if (u > 0 && u < v && vals.count(v - u)) sum = true;
        if (!sum) sd.generators.push_back(v);
    }
    return sd;
}

Answer delta_semigroup(const BiPoly& f) {
    const LocalData d = local_data(f);
    const long main = delta(d);
    const int N = static_cast<int>(2 * main + 2);
    Field K = d.field;
    Field P = K->is_finite() ? FieldCtx::prime(K->characteristic()) : FieldCtx::rationals();
    const int k0 = K->degree();
    long total_cols = 0;
    for (const auto& b : d.bs.branches) {
        if (b.field->degree() != b.weight * k0) return {false, 0, "branch field larger than its orbit"};
        total_cols += static_cast<long>(b.field->degree()) * N;
    }
    std::vector<Elem> basis = {K->one()};
    for (int s = 1; s < k0; ++s) basis.push_back(basis.back() * K->gen());

    struct Powers {
        std::vector<Coeffs> xp, yp;
    };
    std::vector<Powers> pw;
    for (const auto& b : d.bs.branches) {
        Powers p;
        const Coeffs xs = prefix(b.x, N), ys = prefix(b.y, N);
        p.xp = {Coeffs{b.field->one()}};
        p.yp = {Coeffs{b.field->one()}};
        for (int i = 1; i < N; ++i) {
            p.xp.push_back(ser::mul(p.xp.back(), xs, N));
            p.yp.push_back(ser::mul(p.yp.back(), ys, N));
        }
        pw.push_back(std::move(p));
    }
    Echelon ech(P);
    for (int deg = 0; deg < N; ++deg)
        for (int j = 0; j <= deg; ++j)
            for (const auto& e : basis) {
                std::vector<Elem> row;
                row.reserve(total_cols);
                for (std::size_t bi = 0; bi < d.bs.branches.size(); ++bi) {
                    const auto& b = d.bs.branches[bi];
                    Coeffs s = ser::mul(pw[bi].xp[deg - j], pw[bi].yp[j], N);
                    s.resize(N, b.field->zero());
                    const Elem eb = embed(e, b.field);
                    for (int k = 0; k < N; ++k) {
                        const auto c = coordinates(eb * s[k], P);
                        row.insert(row.end(), c.begin(), c.end());
                    }
                }
                ech.insert(std::move(row));
            }
    const long codim = total_cols - static_cast<long>(ech.rank());
    if (codim % k0 != 0) return {false, 0, "codimension not divisible by the field degree"};
    Answer a{true, codim / k0, "probe ceiling " + std::to_string(N)};
    if (d.bs.branches.size() == 1 && d.bs.r == 1) {
        const auto sd = branch_semigroup(d.bs.branches.front(), N);
        if (sd.gaps != a.value.value()) return {false, 0, "semigroup gap count disagrees with the codimension"};
        std::string gens;
        for (int g : sd.generators) gens += (gens.empty() ? "" : ",") + std::to_string(g);
        a.note += ", semigroup <" + gens + ">, conductor " + std::to_string(sd.conductor);
    }
    return a;
}

namespace {

UPoly chart_singular_x(const std::vector<BiPoly>& sys) {
    UPoly R;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j) {
            if (sys[i].is_zero() || sys[j].is_zero() || sys[i].degree() == 0 || sys[j].degree() == 0) continue;
            const UPoly r = resultant(sys[i], sys[j], Var::Y);
            if (r.is_zero()) continue;
            R = R.field() == nullptr || R.is_zero() ? r : gcd(R, r);
        }
    return R;
}

} // namespace

Answer dual_degree_elim(const TriPoly& F0, std::uint64_t seed) {
    const int d = F0.degree();
    Field K = F0.field();
    const std::uint64_t p = K->characteristic();
    if (d > 4) return {false, 0, "degree above 4"};
    if (p != 0 && p <= static_cast<std::uint64_t>(d * (d - 1))) return {false, 0, "not in the tame range"};
    if (d <= 1) return {true, 0, "line"};
    Field L = roomy(K, 1000);
    const TriPoly F = F0.embed(L);
    Rng rng(seed);
    std::vector<long> counts;
    for (int attempt = 0; attempt < 12 && counts.size() < 2; ++attempt) {
        std::array<std::array<Elem, 3>, 3> M;
        for (auto& row : M)
            for (auto& e : row) e = L->random(rng);
        const Elem det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (det.is_zero()) continue;
        const TriPoly G = F.linear_change(M);
        const Elem qa = L->random(rng), qb = L->random(rng), qc = L->random(rng);
        const TriPoly Gx = G.differentiate(0), Gy = G.differentiate(1), Gz = G.differentiate(2);
        const TriPoly polar = Gx * qa + Gy * qb + Gz * qc;
        const BiPoly g = G.dehomogenize(2), h = polar.dehomogenize(2);
        if (h.is_zero()) continue;
        const UPoly R0 = resultant(g, h, Var::Y);
        if (R0.degree() != d * (d - 1)) continue;
        const UPoly S = chart_singular_x({g, Gx.dehomogenize(2), Gy.dehomogenize(2), Gz.dehomogenize(2)});
        if (S.field() == nullptr || S.is_zero()) continue;
        UPoly R = R0;
        for (;;) {
            const UPoly c = gcd(R, S);
            if (c.degree() < 1) break;
            R = R / c;
        }
        if (R.degree() > 0 && gcd(R, R.derivative()).degree() > 0) continue;
        counts.push_back(std::max(0, R.degree()));
    }
    if (counts.size() < 2 || counts[0] != counts[1]) return {false, 0, "elimination degenerate"};
    return {true, counts[0], "distinct smooth points on a generic polar"};
}

} // namespace plc::oracle
