#include "plc/series.hpp"

#include <algorithm>

namespace plc {

namespace ser {

namespace {
Elem at(const Coeffs& a, int i, Field f) { return i < static_cast<int>(a.size()) ? a[i] : f->zero(); }
} // namespace

Coeffs add(const Coeffs& a, const Coeffs& b, int n) {
    Field f = !a.empty() ? a[0].field() : !b.empty() ? b[0].field() : nullptr;
    if (!f) return {};
    Coeffs r(n, f->zero());
    for (int i = 0; i < n; ++i) r[i] = at(a, i, f) + at(b, i, f);
    return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b, int n) {
    Field f = !a.empty() ? a[0].field() : !b.empty() ? b[0].field() : nullptr;
    if (!f) return {};
    Coeffs r(n, f->zero());
    for (int i = 0; i < n; ++i) r[i] = at(a, i, f) - at(b, i, f);
    return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, int n) {
    if (a.empty() || b.empty()) return {};
    Field f = common_field(a[0].field(), b[0].field());
    Coeffs r(n, f->zero());
    const int na = std::min<int>(a.size(), n);
    for (int i = 0; i < na; ++i) {
        if (a[i].is_zero()) continue;
        const int nb = std::min<int>(b.size(), n - i);
        for (int j = 0; j < nb; ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

Coeffs inv(const Coeffs& a, int n) {
    if (a.empty() || a[0].is_zero()) throw DivisionByZero();
    Field f = a[0].field();
    Coeffs r(n, f->zero());
    const Elem i0 = a[0].inv();
    r[0] = i0;
    for (int k = 1; k < n; ++k) {
        Elem s = f->zero();
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * r[k - j];
        r[k] = -s * i0;
    }
    return r;
}

Coeffs eval(const BiPoly& f0, const Coeffs& x, const Coeffs& y, int n) {
    Field F = f0.field();
    if (!x.empty()) F = common_field(F, x[0].field());
    if (!y.empty()) F = common_field(F, y[0].field());
    const BiPoly f = f0.embed(F);
    Coeffs r(n, F->zero());
    if (f.is_zero() || n == 0) return r;
    const int dx = f.degree_in(Var::X), dy = f.degree_in(Var::Y);
    std::vector<Coeffs> px{Coeffs{F->one()}}, py{Coeffs{F->one()}};
    for (int i = 1; i <= dx; ++i) px.push_back(mul(px.back(), x, n));
    for (int j = 1; j <= dy; ++j) py.push_back(mul(py.back(), y, n));
    for (const auto& [m, c] : f.terms()) {
        const Coeffs prod = mul(px[m.i], py[m.j], n);
        for (int k = 0; k < static_cast<int>(prod.size()); ++k)
            if (!prod[k].is_zero()) r[k] += c * prod[k];
    }
    return r;
}

} // namespace ser

LazySeries::LazySeries(Field f, Producer p) : s_(std::make_shared<State>()) {
    s_->field = f;
    s_->producer = std::move(p);
}

LazySeries LazySeries::polynomial(Field f, Coeffs c) {
    LazySeries s;
    s.s_ = std::make_shared<State>();
    s.s_->field = f;
    for (auto& e : c)
        if (e.field() != f) e = embed(e, f);
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    s.s_->memo = std::move(c);
    s.s_->finite = true;
    return s;
}

LazySeries LazySeries::monomial(const Elem& c, int k) {
    Coeffs v(k + 1, c.field()->zero());
    v[k] = c;
    return polynomial(c.field(), std::move(v));
}

Field LazySeries::field() const { return s_->field; }

int LazySeries::known_prec() const { return s_->finite ? 1 << 30 : static_cast<int>(s_->memo.size()); }

bool LazySeries::is_polynomial() const { return s_->finite; }

Coeffs LazySeries::prefix(int n) const {
    State& s = *s_;
    if (!s.finite && static_cast<int>(s.memo.size()) < n) {
        const int want = std::max<int>(n, 2 * static_cast<int>(s.memo.size()));
        Coeffs got = s.producer(want);
        if (static_cast<int>(got.size()) < n) throw MathError("series producer returned too few coefficients");
        s.memo = std::move(got);
    }
    Coeffs out(n, s.field->zero());
    const int k = std::min<int>(n, s.memo.size());
    std::copy(s.memo.begin(), s.memo.begin() + k, out.begin());
    return out;
}

Elem LazySeries::coeff(int n) const {
    if (s_->finite) return n < static_cast<int>(s_->memo.size()) ? s_->memo[n] : s_->field->zero();
    return prefix(n + 1)[n];
}

LazySeries operator+(const LazySeries& a, const LazySeries& b) {
    Field f = common_field(a.field(), b.field());
    if (a.is_polynomial() && b.is_polynomial()) {
        const int n = std::max(a.s_->memo.size(), b.s_->memo.size());
        return LazySeries::polynomial(f, ser::add(a.prefix(n), b.prefix(n), n));
    }
    return LazySeries(f, [a, b](int n) { return ser::add(a.prefix(n), b.prefix(n), n); });
}

LazySeries operator-(const LazySeries& a, const LazySeries& b) {
    Field f = common_field(a.field(), b.field());
    if (a.is_polynomial() && b.is_polynomial()) {
        const int n = std::max(a.s_->memo.size(), b.s_->memo.size());
        return LazySeries::polynomial(f, ser::sub(a.prefix(n), b.prefix(n), n));
    }
    return LazySeries(f, [a, b](int n) { return ser::sub(a.prefix(n), b.prefix(n), n); });
}

LazySeries operator*(const LazySeries& a, const LazySeries& b) {
    Field f = common_field(a.field(), b.field());
    if (a.is_polynomial() && b.is_polynomial()) {
        const int n = static_cast<int>(a.s_->memo.size() + b.s_->memo.size());
        return LazySeries::polynomial(f, ser::mul(a.prefix(n), b.prefix(n), n));
    }
    return LazySeries(f, [a, b, f](int n) {
        Coeffs r = ser::mul(a.prefix(n), b.prefix(n), n);
        if (r.empty()) r.assign(n, f->zero());
        return r;
    });
}

LazySeries operator*(const LazySeries& a, const Elem& c) {
    return a * LazySeries::polynomial(common_field(a.field(), c.field()), {c});
}

LazySeries substitute_series(const BiPoly& f, const LazySeries& x, const LazySeries& y) {
    Field F = common_field(common_field(f.field(), x.field()), y.field());
    const BiPoly fe = f.embed(F);
    return LazySeries(F, [fe, x, y](int n) { return ser::eval(fe, x.prefix(n), y.prefix(n), n); });
}

std::optional<int> series_order(const LazySeries& s, int bound) {
    if (bound < 0) return std::nullopt;
    int n = std::min(bound + 1, 16);
    for (;;) {
        const Coeffs c = s.prefix(n);
        for (int i = 0; i < n; ++i)
            if (!c[i].is_zero()) return i;
        if (n >= bound + 1) return std::nullopt;
        n = std::min(bound + 1, 2 * n);
    }
}

LazySeries implicit_series(const BiPoly& g) {
    Field F = g.field();
    if (!g.coeff(0, 0).is_zero()) throw MathError("implicit_series: g(0,0) != 0");
    if (g.coeff(0, 1).is_zero()) throw MathError("implicit_series: g_y(0,0) = 0");
    const BiPoly gy = g.differentiate(Var::Y);
    auto cur = std::make_shared<Coeffs>(Coeffs{F->zero()});
    const Coeffs t{F->zero(), F->one()};
    return LazySeries(F, [g, gy, cur, t](int n) {
        int prec = static_cast<int>(cur->size());
        while (prec < n) {
            prec = std::min(2 * prec, std::max(n, 2 * prec));
            const Coeffs G = ser::eval(g, t, *cur, prec);
            const Coeffs Gy = ser::eval(gy, t, *cur, prec);
            Coeffs next = ser::sub(*cur, ser::mul(G, ser::inv(Gy, prec), prec), prec);
            *cur = std::move(next);
        }
        return *cur;
    });
}

} // namespace plc
