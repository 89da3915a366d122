#include "plc/upoly.hpp"

namespace plc {

UPoly::UPoly(Field f, std::vector<Elem> c) : f_(f), c_(std::move(c)) {
    for (auto& e : c_)
        if (e.field() != f_) e = plc::embed(e, f_);
    trim();
}

UPoly UPoly::constant(const Elem& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Elem& c, int deg) {
    std::vector<Elem> v(deg + 1, c.field()->zero());
    v[deg] = c;
    return UPoly(c.field(), std::move(v));
}

UPoly UPoly::linear_root(const Elem& c) { return UPoly(c.field(), {-c, c.field()->one()}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elem UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return f_->zero();
    return c_[i];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    Field f = common_field(a.f_, b.f_);
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), f->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(f, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    Field f = common_field(a.f_, b.f_);
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), f->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(f, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    Field f = common_field(a.f_, b.f_);
    if (a.c_.empty() || b.c_.empty()) return UPoly(f);
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, f->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(f, std::move(c));
}

UPoly operator*(const UPoly& a, const Elem& s) {
    Field f = common_field(a.f_, s.field());
    std::vector<Elem> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(x * s);
    return UPoly(f, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

void UPoly::divmod(const UPoly& b, UPoly& q, UPoly& r) const {
    if (b.is_zero()) throw DivisionByZero();
    Field f = common_field(f_, b.f_);
    std::vector<Elem> rem = c_;
    for (auto& e : rem)
        if (e.field() != f) e = plc::embed(e, f);
    if (rem.size() < b.c_.size()) {
        q = UPoly(f);
        r = UPoly(f, std::move(rem));
        return;
    }
    std::vector<Elem> quo(rem.size() - b.c_.size() + 1, f->zero());
    const Elem lead_inv = b.c_.back().inv();
    for (std::size_t i = rem.size(); i-- >= b.c_.size();) {
        if (!rem[i].is_zero()) {
            Elem c = rem[i] * lead_inv;
            const std::size_t shift = i - (b.c_.size() - 1);
            quo[shift] = c;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= c * b.c_[j];
        }
        if (i == 0) break;
    }
    q = UPoly(f, std::move(quo));
    r = UPoly(f, std::move(rem));
}

UPoly UPoly::operator/(const UPoly& b) const {
    UPoly q, r;
    divmod(b, q, r);
    return q;
}

UPoly UPoly::operator%(const UPoly& b) const {
    UPoly q, r;
    divmod(b, q, r);
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

UPoly UPoly::derivative() const {
    std::vector<Elem> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * f_->from_int(static_cast<long long>(i)));
    return UPoly(f_, std::move(c));
}

Elem UPoly::eval(const Elem& x) const {
    Field f = common_field(f_, x.field());
    Elem r = f->zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
    Field f = common_field(f_, inner.f_);
    UPoly r(f);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + UPoly::constant(plc::embed(c_[i], f));
    return r;
}

UPoly UPoly::pow(int e) const {
    UPoly r = UPoly::constant(f_->one());
    UPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UPoly UPoly::powmod(const mpz_class& e, const UPoly& m) const {
    UPoly r = UPoly::constant(f_->one()) % m;
    UPoly b = *this % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

UPoly UPoly::embed(Field into) const {
    std::vector<Elem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(plc::embed(x, into));
    return UPoly(into, std::move(c));
}

std::string UPoly::str(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        const bool compound = cs.find_first_of("+-*", 1) != std::string::npos;
        std::string term;
        std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
        if (i == 0)
            term = compound ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = mono;
        else
            term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!out.empty()) out += (term[0] == '-') ? "" : "+";
        out += term;
    }
    return out;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Elem resultant(const UPoly& a0, const UPoly& b0) {
    Field f = common_field(a0.field(), b0.field());
    if (a0.is_zero() || b0.is_zero()) return f->zero();
    UPoly a = a0, b = b0;
    Elem res = f->one();
    // Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r) where r = a mod b
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) {
            res *= b.lead().pow(static_cast<std::uint64_t>(da));
            return res;
        }
        UPoly r = a % b;
        if (r.is_zero()) return f->zero();
        const int dr = r.degree();
        if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
        res *= b.lead().pow(static_cast<std::uint64_t>(da - dr));
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace plc
