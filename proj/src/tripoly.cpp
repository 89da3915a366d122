#include "plc/tripoly.hpp"

namespace plc {

TriPoly TriPoly::constant(const Elem& c) {
    TriPoly r(c.field());
    if (!c.is_zero()) r.t_.emplace(Exp{0, 0, 0}, c);
    return r;
}

TriPoly TriPoly::var(Field f, int k) {
    TriPoly r(f);
    Exp e{0, 0, 0};
    e[k] = 1;
    r.t_.emplace(e, f->one());
    return r;
}

TriPoly TriPoly::homogenize(const BiPoly& f) {
    TriPoly r(f.field());
    const int d = f.degree();
    for (const auto& [m, c] : f.terms()) r.t_.emplace(Exp{m.i, m.j, d - m.i - m.j}, c);
    return r;
}

int TriPoly::degree() const {
    return t_.empty() ? -1 : t_.rbegin()->first[0] + t_.rbegin()->first[1] + t_.rbegin()->first[2];
}

bool TriPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : t_)
        if (e[0] + e[1] + e[2] != d) return false;
    return true;
}

bool TriPoly::uses_var(int k) const {
    for (const auto& [e, c] : t_)
        if (e[k] > 0) return true;
    return false;
}

TriPoly TriPoly::operator-() const {
    TriPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

namespace {
void add_into(TriPoly::Terms& t, const TriPoly::Exp& e, const Elem& c) {
    auto [it, ins] = t.emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}
} // namespace

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    if (a.f_ != b.f_) {
        Field f = common_field(a.f_, b.f_);
        return a.embed(f) + b.embed(f);
    }
    TriPoly r = a;
    for (const auto& [e, c] : b.t_) add_into(r.t_, e, c);
    return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    if (a.f_ != b.f_) {
        Field f = common_field(a.f_, b.f_);
        return a.embed(f) * b.embed(f);
    }
    TriPoly r(a.f_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) add_into(r.t_, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

TriPoly operator*(const TriPoly& a, const Elem& s) {
    TriPoly r(common_field(a.f_, s.field()));
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, c * s);
    return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (auto ia = a.t_.begin(), ib = b.t_.begin(); ia != a.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

TriPoly TriPoly::pow(int e) const {
    TriPoly r = constant(f_->one());
    TriPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

TriPoly TriPoly::differentiate(int k) const {
    TriPoly r(f_);
    for (const auto& [e, c] : t_) {
        if (e[k] == 0) continue;
        Elem d = c * f_->from_int(e[k]);
        if (d.is_zero()) continue;
        Exp n = e;
        --n[k];
        r.t_.emplace(n, d);
    }
    return r;
}

Elem TriPoly::eval(const Elem& x, const Elem& y, const Elem& z) const {
    Field f = common_field(common_field(common_field(f_, x.field()), y.field()), z.field());
    Elem r = f->zero();
    for (const auto& [e, c] : t_)
        r += c * x.pow(static_cast<std::uint64_t>(e[0])) * y.pow(static_cast<std::uint64_t>(e[1])) *
             z.pow(static_cast<std::uint64_t>(e[2]));
    return r;
}

TriPoly TriPoly::embed(Field into) const {
    if (into == f_) return *this;
    TriPoly r(into);
    for (const auto& [e, c] : t_) r.t_.emplace(e, plc::embed(c, into));
    return r;
}

BiPoly TriPoly::dehomogenize(int k) const {
    BiPoly r(f_);
    int a = k == 0 ? 1 : 0;
    int b = k == 2 ? 1 : 2;
    for (const auto& [e, c] : t_) r += BiPoly::monomial(c, e[a], e[b]);
    return r;
}

BiPoly TriPoly::to_bipoly() const {
    if (uses_var(2)) throw MathError("unexpected variable z");
    return dehomogenize(2);
}

TriPoly TriPoly::linear_change(const std::array<std::array<Elem, 3>, 3>& m) const {
    std::array<TriPoly, 3> img;
    for (int k = 0; k < 3; ++k) {
        img[k] = TriPoly(f_);
        for (int l = 0; l < 3; ++l) img[k] = img[k] + var(f_, l) * m[k][l];
    }
    TriPoly r(f_);
    for (const auto& [e, c] : t_) r = r + img[0].pow(e[0]) * img[1].pow(e[1]) * img[2].pow(e[2]) * c;
    return r;
}

std::string TriPoly::str(bool upper) const {
    if (t_.empty()) return "0";
    const char* names = upper ? "XYZ" : "xyz";
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string mono;
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string cs = c.str();
        if (cs.find_first_of("+-*", 1) != std::string::npos) cs = "(" + cs + ")";
        std::string term = mono.empty() ? cs : cs == "1" ? mono : cs == "-1" ? "-" + mono : cs + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

} // namespace plc
