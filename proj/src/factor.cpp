#include "plc/factor.hpp"

#include <algorithm>
#include <functional>

#include "poly_kernels.hpp"

namespace plc {

namespace {

using ZVec = std::vector<mpz_class>;

// -------------------------------------------------------------- generic helpers

bool poly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Elem ca = a.coeff(i), cb = b.coeff(i);
        if (ca < cb) return true;
        if (cb < ca) return false;
    }
    return false;
}

/// g with g(x)^p = f(x); f must have all exponents divisible by p (finite fields).
UPoly poly_pth_root(const UPoly& f) {
    Field F = f.field();
    const auto p = static_cast<int>(F->characteristic());
    std::vector<Elem> c;
    for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i).pth_root());
    return UPoly(F, std::move(c));
}

// -------------------------------------------------------------- finite fields

std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f) {
    std::vector<std::pair<UPoly, int>> out;
    Field F = f.field();
    const mpz_class q = F->order();
    const UPoly x = UPoly::monomial(F->one(), 1);
    UPoly h = x % f;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.powmod(q, f);
        UPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

void equal_degree(const UPoly& g, int d, Rng& rng, std::vector<UPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    Field F = g.field();
    const mpz_class q = F->order();
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    for (;;) {
        std::vector<Elem> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(F->random(rng));
        UPoly a(F, std::move(c));
        if (a.degree() < 1) continue;
        UPoly b;
        if (F->characteristic() == 2) {
            // trace map a + a^2 + ... + a^(2^(kd-1))
            const int kd = F->degree() * d;
            UPoly t = a % g, acc = t;
            for (int i = 1; i < kd; ++i) {
                t = (t * t) % g;
                acc = acc + t;
            }
            b = acc;
        } else {
            b = a.powmod((qd - 1) / 2, g) - UPoly::constant(F->one());
        }
        UPoly u = gcd(g, b);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

std::vector<UPoly> factor_finite_squarefree(const UPoly& f) {
    std::vector<UPoly> out;
    Rng rng(0x5eedULL + static_cast<unsigned>(f.degree()));
    for (auto& [g, d] : distinct_degree(f.monic())) equal_degree(g, d, rng, out);
    return out;
}

// -------------------------------------------------------------- integers

mpz_class mod_sym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

void ztrim(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZVec zmod(ZVec a, const mpz_class& m) {
    for (auto& c : a) c = mod_sym(c, m);
    ztrim(a);
    return a;
}

/// Exact division of monic integer polynomials; false if not exact.
bool zdiv_monic(const ZVec& a, const ZVec& b, ZVec& q) {
    ZVec r = a;
    if (r.size() < b.size()) return false;
    q.assign(r.size() - b.size() + 1, mpz_class(0));
    for (std::size_t i = r.size(); i-- >= b.size();) {
        const mpz_class c = r[i];
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        if (i == 0) break;
    }
    for (const auto& c : r)
        if (c != 0) return false;
    ztrim(q);
    return true;
}

mpz_class zcontent(const ZVec& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

UPoly z_to_fp(const ZVec& a, Field F) {
    std::vector<Elem> c;
    for (const auto& x : a) c.push_back(F->from_mpz(x));
    return UPoly(F, std::move(c));
}

ZVec fp_to_z(const UPoly& a) {
    ZVec r;
    for (const auto& c : a.coeffs()) {
        auto v = c.fp_coeffs();
        r.emplace_back(static_cast<unsigned long>(v.empty() ? 0 : v[0]));
    }
    return r;
}

/// Lifts monic g, h with t ≡ g h (mod p) to t ≡ g h (mod p^a); t monic.
void hensel_lift(const ZVec& t, ZVec& g, ZVec& h, std::uint64_t p, const mpz_class& pa) {
    Field F = FieldCtx::prime(p);
    const UPoly gb = z_to_fp(g, F), hb = z_to_fp(h, F);
    // s g + t' h = 1 over F_p
    UPoly r0 = gb, r1 = hb, s0 = UPoly::constant(F->one()), s1(F), t0(F), t1 = UPoly::constant(F->one());
    while (!r1.is_zero()) {
        UPoly q, r;
        r0.divmod(r1, q, r);
        UPoly s = s0 - q * s1, tt = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = tt;
    }
    const Elem inv = r0.lead().inv();
    const UPoly sg = s0 * inv, th = t0 * inv;
    mpz_class pk = p;
    while (pk < pa) {
        ZVec e = zmul(g, h);
        ZVec diff(std::max(t.size(), e.size()), mpz_class(0));
        for (std::size_t i = 0; i < t.size(); ++i) diff[i] += t[i];
        for (std::size_t i = 0; i < e.size(); ++i) diff[i] -= e[i];
        for (auto& c : diff) {
            c = mod_sym(c, pa);
            c /= pk; // exact
        }
        ztrim(diff);
        const UPoly eb = z_to_fp(diff, F);
        UPoly q, dg;
        (th * eb).divmod(gb, q, dg);
        const UPoly dh = sg * eb + q * hb;
        const ZVec dgz = fp_to_z(dg), dhz = fp_to_z(dh);
        for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += pk * dgz[i];
        for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += pk * dhz[i];
        pk *= p;
        if (pk > pa) pk = pa;
        g = zmod(g, pa);
        h = zmod(h, pa);
        g.back() = 1;
        h.back() = 1;
    }
}

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Factors a monic squarefree integer polynomial of degree >= 2.
std::vector<ZVec> zassenhaus_monic(const ZVec& f) {
    const int n = static_cast<int>(f.size()) - 1;
    // choose prime with fewest modular factors among a few candidates
    std::uint64_t best_p = 0;
    std::vector<UPoly> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 4 && p < 5000; p += 2) {
        if (!is_prime_small(p)) continue;
        Field F = FieldCtx::prime(p);
        UPoly fb = z_to_fp(f, F);
        if (gcd(fb, fb.derivative()).degree() != 0) continue;
        ++tried;
        auto facs = factor_finite_squarefree(fb);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw MathError("no suitable prime for integer factorization");
    if (best.size() == 1) return {f};
    std::sort(best.begin(), best.end(), poly_less);

    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class bound = maxc * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
    mpz_class pa = best_p;
    while (pa <= 2 * bound) pa *= best_p;

    std::vector<ZVec> lifted;
    ZVec target = f;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        ZVec g = fp_to_z(best[i]);
        UPoly rest = UPoly::constant(FieldCtx::prime(best_p)->one());
        for (std::size_t j = i + 1; j < best.size(); ++j) rest = rest * best[j];
        ZVec h = fp_to_z(rest);
        hensel_lift(target, g, h, best_p, pa);
        lifted.push_back(g);
        target = h;
    }
    lifted.push_back(target);

    std::vector<ZVec> out;
    ZVec cur = f;
    std::vector<int> idx(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) idx[i] = static_cast<int>(i);
    std::size_t s = 1;
    while (2 * s <= idx.size()) {
        bool found = false;
        std::vector<int> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = static_cast<int>(i);
        for (;;) {
            ZVec cand{mpz_class(1)};
            for (int c : comb) cand = zmod(zmul(cand, lifted[idx[c]]), pa);
            ZVec q;
            if (zdiv_monic(cur, cand, q)) {
                out.push_back(cand);
                cur = q;
                std::vector<int> rest;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (std::find(comb.begin(), comb.end(), static_cast<int>(i)) == comb.end()) rest.push_back(idx[i]);
                idx = rest;
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[i] == static_cast<int>(idx.size() - s) + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (cur.size() > 1) out.push_back(cur);
    return out;
}

} // namespace

std::vector<std::vector<mpz_class>> factor_integer_squarefree(const std::vector<mpz_class>& f0) {
    ZVec f = f0;
    ztrim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    if (f.back() < 0)
        for (auto& c : f) c = -c;
    const mpz_class lc = f.back();
    // g(x) = lc^{n-1} f(x / lc) is monic with integer coefficients
    ZVec g(f.size());
    mpz_class pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        g[i] = f[i] * pw;
        pw *= lc;
    }
    g[n] = 1;
    std::vector<ZVec> out;
    for (auto& h : zassenhaus_monic(g)) {
        // h(lc x), primitive part
        ZVec t(h.size());
        mpz_class q = 1;
        for (std::size_t i = 0; i < h.size(); ++i) {
            t[i] = h[i] * q;
            q *= lc;
        }
        const mpz_class c = zcontent(t);
        for (auto& x : t) x /= c;
        if (t.back() < 0)
            for (auto& x : t) x = -x;
        out.push_back(t);
    }
    return out;
}

namespace {

std::vector<UPoly> factor_rational_squarefree(const UPoly& f) {
    Field Q = f.field();
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) {
        const auto& v = c.q_coeffs();
        if (!v.empty()) den = lcm(den, mpz_class(v[0].get_den()));
    }
    ZVec z;
    for (const auto& c : f.coeffs()) {
        const auto& v = c.q_coeffs();
        mpq_class x = v.empty() ? mpq_class(0) : v[0];
        x *= den;
        z.push_back(x.get_num());
    }
    const mpz_class cont = zcontent(z);
    for (auto& c : z) c /= cont;
    std::vector<UPoly> out;
    for (auto& h : factor_integer_squarefree(z)) {
        std::vector<Elem> c;
        for (auto& x : h) c.push_back(Q->from_mpz(x));
        out.push_back(UPoly(Q, std::move(c)).monic());
    }
    return out;
}

/// Values are interpolated at 0..deg.
UPoly interpolate_rational(const std::vector<mpq_class>& vals) {
    Field Q = FieldCtx::rationals();
    const int n = static_cast<int>(vals.size());
    UPoly result(Q);
    for (int i = 0; i < n; ++i) {
        UPoly basis = UPoly::constant(Q->one());
        mpq_class denom = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * UPoly::linear_root(Q->from_int(j));
            denom *= (i - j);
        }
        result = result + basis * Q->from_mpq(vals[i] / denom);
    }
    return result;
}

/// Norm over Q of h(z - k*theta) for h over the number field L = Q[theta]/(M).
UPoly shifted_norm(const UPoly& h, int k) {
    Field L = h.field();
    Field Q = FieldCtx::rationals();
    std::vector<Elem> mc;
    for (const auto& c : L->q_modulus()) mc.push_back(Q->from_mpq(c));
    const UPoly M(Q, mc);
    const UPoly shift(L, {L->gen() * L->from_int(-k), L->one()});
    const UPoly hk = h.compose(shift);
    const int deg = L->degree() * h.degree();
    std::vector<mpq_class> vals;
    for (int z0 = 0; z0 <= deg; ++z0) {
        const Elem v = hk.eval(L->from_int(z0));
        std::vector<Elem> pc;
        for (const auto& c : v.q_coeffs()) pc.push_back(Q->from_mpq(c));
        const UPoly P(Q, pc);
        const Elem r = resultant(M, P);
        vals.push_back(r.q_coeffs().empty() ? mpq_class(0) : r.q_coeffs()[0]);
    }
    return interpolate_rational(vals);
}

int trager_shift(const UPoly& h, UPoly& norm) {
    for (int step = 0; step < 40; ++step) {
        const int k = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        norm = shifted_norm(h, k);
        if (gcd(norm, norm.derivative()).degree() == 0) return k;
    }
    throw MathError("no squarefree norm found");
}

std::vector<UPoly> factor_number_field_squarefree(const UPoly& h0) {
    const UPoly h = h0.monic();
    Field L = h.field();
    if (h.degree() <= 1) return {h};
    UPoly norm;
    const int k = trager_shift(h, norm);
    const auto nf = factor_rational_squarefree(norm);
    if (nf.size() == 1) return {h};
    const UPoly shift(L, {L->gen() * L->from_int(-k), L->one()});
    const UPoly unshift(L, {L->gen() * L->from_int(k), L->one()});
    const UPoly hk = h.compose(shift);
    std::vector<UPoly> out;
    for (const auto& ni : nf) {
        UPoly g = gcd(hk, ni.embed(L));
        if (g.degree() > 0) out.push_back(g.compose(unshift).monic());
    }
    return out;
}

std::vector<UPoly> factor_squarefree_dispatch(const UPoly& f) {
    if (f.degree() <= 1) return {f.monic()};
    Field F = f.field();
    if (F->is_finite()) return factor_finite_squarefree(f);
    if (F->degree() == 1) return factor_rational_squarefree(f);
    return factor_number_field_squarefree(f);
}

} // namespace

std::vector<UFactor> squarefree_factorization(const UPoly& f) {
    std::vector<UFactor> out;
    if (f.degree() <= 0) return out;
    Field F = f.field();
    UPoly c = gcd(f, f.derivative());
    UPoly w = f.monic() / c;
    int i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, c);
        UPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // remaining factor is a p-th power
        const int p = static_cast<int>(F->characteristic());
        for (auto& sub : squarefree_factorization(poly_pth_root(c.monic()))) out.push_back({sub.poly, sub.mult * p});
    }
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        if (a.mult != b.mult) return a.mult < b.mult;
        return poly_less(a.poly, b.poly);
    });
    return out;
}

std::vector<UFactor> factor(const UPoly& f) {
    std::vector<UFactor> out;
    for (const auto& sq : squarefree_factorization(f))
        for (auto& g : factor_squarefree_dispatch(sq.poly)) out.push_back({g, sq.mult});
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        if (poly_less(a.poly, b.poly)) return true;
        if (poly_less(b.poly, a.poly)) return false;
        return a.mult < b.mult;
    });
    return out;
}

std::vector<UPoly> irreducible_factors(const UPoly& f) {
    std::vector<UPoly> out;
    for (auto& u : factor(f)) out.push_back(u.poly);
    return out;
}

std::vector<Elem> roots_in_field(const UPoly& f) {
    std::vector<Elem> out;
    for (const auto& g : irreducible_factors(f))
        if (g.degree() == 1) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(const UPoly& f) {
    if (f.degree() < 1) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].mult == 1;
}

RootExtension adjoin_root(const UPoly& h0) {
    const UPoly h = h0.monic();
    Field L = h.field();
    if (h.degree() == 1) return {L, -h.coeff(0)};
    if (L->is_finite()) {
        const std::uint64_t p = L->characteristic();
        const int total = L->degree() * h.degree();
        Field T = FieldCtx::finite(p, total);
        std::vector<std::uint64_t> image;
        if (L->degree() > 1) {
            std::vector<Elem> mc;
            for (auto c : L->fp_modulus()) mc.push_back(T->from_int(static_cast<long long>(c)));
            const auto rts = roots_in_field(UPoly(T, mc));
            if (rts.empty()) throw MathError("failed to embed finite field");
            image = rts.front().fp_coeffs();
        }
        Field Lp = FieldCtx::finite_extension(L, T->fp_modulus(), image);
        const auto rts = roots_in_field(h.embed(Lp));
        if (rts.empty()) throw MathError("failed to find root in extension");
        return {Lp, rts.front()};
    }
    Field Q = FieldCtx::rationals();
    if (L->degree() == 1) {
        std::vector<mpq_class> mod;
        for (const auto& c : h.coeffs()) mod.push_back(c.q_coeffs().empty() ? mpq_class(0) : c.q_coeffs()[0]);
        Field Lp = FieldCtx::number_extension(L, mod, {});
        return {Lp, Lp->gen()};
    }
    UPoly norm;
    const int k = trager_shift(h, norm);
    norm = norm.monic();
    std::vector<mpq_class> mod;
    for (const auto& c : norm.coeffs()) mod.push_back(c.q_coeffs().empty() ? mpq_class(0) : c.q_coeffs()[0]);
    if (L->depth() + 1 > kMaxRationalTowerDepth)
        throw TowerLimitExceeded("rational tower depth limit (" + std::to_string(kMaxRationalTowerDepth) +
                                 ") exceeded");
    // work in a scratch copy of Q(psi) to locate theta
    Field S = FieldCtx::number_extension(Q, mod, {});
    const Elem psi = S->gen();
    std::vector<Elem> mc;
    for (const auto& c : L->q_modulus()) mc.push_back(S->from_mpq(c));
    const UPoly M(S, mc);
    const UPoly lin(S, {psi, S->from_int(-k)}); // psi - k T
    UPoly P(S);
    UPoly pw = UPoly::constant(S->one());
    for (int j = 0; j <= h.degree(); ++j) {
        std::vector<Elem> cj;
        const Elem hj = h.coeff(j);
        for (const auto& c : hj.q_coeffs()) cj.push_back(S->from_mpq(c));
        P = P + UPoly(S, cj) * pw;
        pw = pw * lin;
    }
    const UPoly g = gcd(M, P);
    if (g.degree() != 1) throw MathError("primitive element construction failed");
    const Elem theta = -g.coeff(0);
    Field Lp = FieldCtx::number_extension(L, mod, theta.q_coeffs());
    const Elem root = Lp->gen() - Lp->embed(L->gen()) * Lp->from_int(k);
    if (!h.embed(Lp).eval(root).is_zero()) throw MathError("adjoined root check failed");
    return {Lp, root};
}

RootExtension extend_with_root(const UPoly& poly) {
    if (poly.degree() < 1) throw MathError("extend_with_root needs a nonconstant polynomial");
    const auto facs = irreducible_factors(poly);
    for (const auto& g : facs)
        if (g.degree() == 1) return {poly.field(), roots_in_field(poly).front()};
    return adjoin_root(facs.front());
}

} // namespace plc
