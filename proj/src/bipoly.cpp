#include "plc/bipoly.hpp"

#include <algorithm>

namespace plc {

BiPoly BiPoly::constant(const Elem& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Elem& c, int i, int j) {
    BiPoly r(c.field());
    if (!c.is_zero()) r.t_.emplace(Mono{i, j}, c);
    return r;
}

Elem BiPoly::coeff(int i, int j) const {
    auto it = t_.find(Mono{i, j});
    return it == t_.end() ? f_->zero() : it->second;
}

void BiPoly::set(int i, int j, const Elem& c) {
    if (c.is_zero())
        t_.erase(Mono{i, j});
    else
        t_[Mono{i, j}] = c.field() == f_ ? c : plc::embed(c, f_);
}

int BiPoly::degree() const { return t_.empty() ? -1 : t_.rbegin()->first.deg(); }

int BiPoly::order() const { return t_.empty() ? -1 : t_.begin()->first.deg(); }

int BiPoly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, v == Var::X ? m.i : m.j);
    return d;
}

BiPoly BiPoly::homogeneous_part(int d) const {
    BiPoly r(f_);
    for (const auto& [m, c] : t_)
        if (m.deg() == d) r.t_.emplace(m, c);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

namespace {

void add_into(BiPoly::Terms& t, const Mono& m, const Elem& c) {
    auto [it, inserted] = t.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

} // namespace

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    if (a.f_ != b.f_) {
        Field f = common_field(a.f_, b.f_);
        return a.embed(f) + b.embed(f);
    }
    BiPoly r = a;
    for (const auto& [m, c] : b.t_) add_into(r.t_, m, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.f_ != b.f_) {
        Field f = common_field(a.f_, b.f_);
        return a.embed(f) * b.embed(f);
    }
    BiPoly r(a.f_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) add_into(r.t_, Mono{ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

BiPoly operator*(const BiPoly& a, const Elem& s) {
    Field f = common_field(a.f_, s.field());
    BiPoly r(f);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.t_) {
        Elem v = c * s;
        if (!v.is_zero()) r.t_.emplace(m, v);
    }
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    return true;
}

BiPoly BiPoly::pow(int e) const {
    BiPoly r = constant(f_->one());
    BiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BiPoly BiPoly::differentiate(Var v) const {
    BiPoly r(f_);
    for (const auto& [m, c] : t_) {
        const int e = v == Var::X ? m.i : m.j;
        if (e == 0) continue;
        Elem d = c * f_->from_int(e);
        if (d.is_zero()) continue;
        r.t_.emplace(v == Var::X ? Mono{m.i - 1, m.j} : Mono{m.i, m.j - 1}, d);
    }
    return r;
}

Elem BiPoly::eval(const Elem& x, const Elem& y) const {
    Field f = common_field(common_field(f_, x.field()), y.field());
    Elem r = f->zero();
    for (const auto& [m, c] : t_) r += c * x.pow(static_cast<std::uint64_t>(m.i)) * y.pow(static_cast<std::uint64_t>(m.j));
    return r;
}

BiPoly BiPoly::compose(const BiPoly& X, const BiPoly& Y) const {
    Field f = common_field(common_field(f_, X.f_), Y.f_);
    const int dx = degree_in(Var::X), dy = degree_in(Var::Y);
    std::vector<BiPoly> px{BiPoly::constant(f->one())}, py{BiPoly::constant(f->one())};
    for (int i = 1; i <= dx; ++i) px.push_back(px.back() * X);
    for (int j = 1; j <= dy; ++j) py.push_back(py.back() * Y);
    BiPoly r(f);
    for (const auto& [m, c] : t_) r += (px[m.i] * py[m.j]) * c;
    return r;
}

BiPoly BiPoly::translate(const Elem& a, const Elem& b) const {
    Field f = common_field(common_field(f_, a.field()), b.field());
    return compose(x(f) + constant(a), y(f) + constant(b));
}

BiPoly BiPoly::swap() const {
    BiPoly r(f_);
    for (const auto& [m, c] : t_) r.t_.emplace(Mono{m.j, m.i}, c);
    return r;
}

BiPoly BiPoly::embed(Field into) const {
    if (into == f_) return *this;
    BiPoly r(into);
    for (const auto& [m, c] : t_) r.t_.emplace(m, plc::embed(c, into));
    return r;
}

BiPoly BiPoly::normalized() const {
    if (t_.empty()) return *this;
    return *this * t_.rbegin()->second.inv();
}

BiPoly BiPoly::shift_down(int kx, int ky) const {
    BiPoly r(f_);
    for (const auto& [m, c] : t_) {
        if (m.i < kx || m.j < ky) throw MathError("shift_down: monomial not divisible");
        r.t_.emplace(Mono{m.i - kx, m.j - ky}, c);
    }
    return r;
}

UPoly BiPoly::restrict_y(const Elem& cy) const {
    Field f = common_field(f_, cy.field());
    std::vector<Elem> c(std::max(0, degree_in(Var::X) + 1), f->zero());
    for (const auto& [m, v] : t_) c[m.i] += v * cy.pow(static_cast<std::uint64_t>(m.j));
    return UPoly(f, std::move(c));
}

UPoly BiPoly::restrict_x(const Elem& cx) const { return swap().restrict_y(cx); }

std::vector<UPoly> BiPoly::coeffs_in(Var v) const {
    const int d = degree_in(v);
    const int od = degree_in(v == Var::X ? Var::Y : Var::X);
    std::vector<std::vector<Elem>> c(std::max(0, d + 1), std::vector<Elem>(std::max(0, od + 1), f_->zero()));
    for (const auto& [m, val] : t_) {
        if (v == Var::Y)
            c[m.j][m.i] = val;
        else
            c[m.i][m.j] = val;
    }
    std::vector<UPoly> out;
    out.reserve(c.size());
    for (auto& row : c) out.emplace_back(f_, std::move(row));
    return out;
}

BiPoly BiPoly::from_coeffs_in(Var v, const std::vector<UPoly>& c, Field f) {
    BiPoly r(f);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& cf = c[k].coeffs();
        for (std::size_t l = 0; l < cf.size(); ++l) {
            if (cf[l].is_zero()) continue;
            const int kk = static_cast<int>(k), ll = static_cast<int>(l);
            r.set(v == Var::Y ? ll : kk, v == Var::Y ? kk : ll, cf[l]);
        }
    }
    return r;
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        std::string mono;
        auto var = [&](char v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var('x', m.i);
        var('y', m.j);
        std::string cs = c.str();
        const bool compound = cs.find_first_of("+-*", 1) != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        std::string term;
        if (mono.empty())
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = cs + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------- division, gcd

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    Field f = common_field(a.field(), b.field());
    auto lex_lead = [](const BiPoly& p) {
        Mono best{-1, -1};
        for (const auto& [m, c] : p.terms())
            if (m.j > best.j || (m.j == best.j && m.i > best.i)) best = m;
        return best;
    };
    const Mono lb = lex_lead(b);
    const Elem lcinv = b.coeff(lb.i, lb.j).inv();
    BiPoly r = a.embed(f), q(f);
    const BiPoly be = b.embed(f);
    while (!r.is_zero()) {
        const Mono lr = lex_lead(r);
        if (lr.i < lb.i || lr.j < lb.j) return std::nullopt;
        const BiPoly term = BiPoly::monomial(r.coeff(lr.i, lr.j) * lcinv, lr.i - lb.i, lr.j - lb.j);
        q += term;
        r -= term * be;
    }
    return q;
}

namespace {

using YPoly = std::vector<UPoly>; // coefficients in y, each a polynomial in x

void ytrim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly content(const YPoly& a) {
    UPoly g;
    bool first = true;
    for (const auto& c : a) {
        if (c.is_zero()) continue;
        g = first ? c.monic() : gcd(g, c);
        first = false;
        if (g.degree() == 0) break;
    }
    return g;
}

YPoly divide_content(YPoly a, const UPoly& c) {
    if (c.degree() <= 0) {
        const Elem inv = c.lead().inv();
        for (auto& x : a) x = x * inv;
        return a;
    }
    for (auto& x : a) x = x / c;
    return a;
}

YPoly prem(YPoly a, const YPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        const UPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (int k = 0; k <= db; ++k) a[da - db + k] = a[da - db + k] - la * b[k];
        ytrim(a);
        if (!a.empty() && static_cast<int>(a.size()) - 1 == da) throw MathError("prem failed to reduce degree");
    }
    return a;
}

} // namespace

BiPoly gcd(const BiPoly& a0, const BiPoly& b0) {
    Field f = common_field(a0.field(), b0.field());
    if (a0.is_zero()) return b0.embed(f).normalized();
    if (b0.is_zero()) return a0.embed(f).normalized();
    YPoly A = a0.embed(f).coeffs_in(Var::Y), B = b0.embed(f).coeffs_in(Var::Y);
    const UPoly ca = content(A), cb = content(B);
    const UPoly c = gcd(ca, cb);
    A = divide_content(A, ca);
    B = divide_content(B, cb);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        if (B.size() <= 1) {
            // B primitive of y-degree 0: a unit
            return BiPoly::from_coeffs_in(Var::Y, {c}, f).normalized();
        }
        YPoly R = prem(A, B);
        if (R.empty()) break;
        A = std::move(B);
        B = divide_content(R, content(R));
    }
    for (auto& x : B) x = x * c;
    return BiPoly::from_coeffs_in(Var::Y, B, f).normalized();
}

UPoly resultant(const BiPoly& f0, const BiPoly& g0, Var eliminate) {
    Field F = common_field(f0.field(), g0.field());
    const YPoly a = f0.embed(F).coeffs_in(eliminate), b = g0.embed(F).coeffs_in(eliminate);
    if (a.empty() || b.empty()) return UPoly(F);
    const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m == 0) return a[0].pow(n);
    if (n == 0) return b[0].pow(m);
    const int N = m + n;
    std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N, UPoly(F)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = a[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = b[n - k];
    // fraction-free Bareiss elimination over K[t]
    UPoly prev = UPoly::constant(F->one());
    bool neg = false;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int s = k + 1;
            while (s < N && M[s][k].is_zero()) ++s;
            if (s == N) return UPoly(F);
            std::swap(M[k], M[s]);
            neg = !neg;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = UPoly(F);
        }
        prev = M[k][k];
    }
    UPoly det = M[N - 1][N - 1];
    // sign convention: lc(g)^deg f * prod over roots b of g of f(b)
    if ((m * n) % 2 == 1) neg = !neg;
    return neg ? -det : det;
}

BiPoly pth_root(const BiPoly& f) {
    const auto p = static_cast<int>(f.field()->characteristic());
    if (p == 0) throw CharZeroPthRoot();
    BiPoly r(f.field());
    for (const auto& [m, c] : f.terms()) {
        if (m.i % p || m.j % p) throw MathError("pth_root: exponent not divisible by p");
        r.set(m.i / p, m.j / p, c.pth_root());
    }
    return r;
}

namespace {

BiPoly radical(const BiPoly& f) {
    if (f.degree() <= 0) return BiPoly::constant(f.field()->one());
    const BiPoly fx = f.differentiate(Var::X), fy = f.differentiate(Var::Y);
    if (fx.is_zero() && fy.is_zero()) return radical(pth_root(f));
    const BiPoly g = gcd(gcd(f, fx), fy);
    if (g.degree() <= 0) return f.normalized();
    const BiPoly a = *exact_div(f, g);
    if (f.field()->characteristic() == 0) return a.normalized();
    const BiPoly rg = radical(g);
    const BiPoly common = gcd(a, rg);
    return (*exact_div(a * rg, common)).normalized();
}

} // namespace

SquarefreeResult squarefree_part(const BiPoly& f) {
    if (f.is_zero()) throw MathError("squarefree_part of zero");
    BiPoly r = radical(f);
    return {r, r.degree() == f.degree()};
}

BiPoly local_radical(const BiPoly& f) {
    if (f.is_zero()) throw NotReduced();
    const std::vector<BiPoly> chain = radical_chain(f);
    if (chain.empty()) return BiPoly::constant(f.field()->one());
    if (chain.size() > 1 && chain[1].coeff(0, 0).is_zero()) throw NotReduced();
    return chain[0];
}

std::vector<BiPoly> radical_chain(const BiPoly& f) {
    std::vector<BiPoly> out;
    BiPoly cur = f;
    while (cur.degree() > 0) {
        BiPoly r = radical(cur);
        out.push_back(r);
        cur = *exact_div(cur, r);
    }
    return out;
}

} // namespace plc
