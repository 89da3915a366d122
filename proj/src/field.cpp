#include "plc/field.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "poly_kernels.hpp"

namespace plc {

using namespace detail;

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::deque<std::unique_ptr<FieldCtx>>& registry() {
    static std::deque<std::unique_ptr<FieldCtx>> r;
    return r;
}

std::string coeff_poly_str(const std::vector<std::string>& coeffs, char var) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::string& c = coeffs[i];
        if (c == "0") continue;
        std::string term;
        if (i == 0) {
            term = c;
        } else {
            std::string mono(1, var);
            if (i > 1) mono += "^" + std::to_string(i);
            if (c == "1")
                term = mono;
            else if (c == "-1")
                term = "-" + mono;
            else
                term = c + "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += term;
        else
            out += "+" + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

// ---------------------------------------------------------------- Elem

bool Elem::is_one() const {
    if (!q_.empty()) return q_.size() == 1 && q_[0] == 1;
    return fp_.size() == 1 && fp_[0] == 1;
}

Elem Elem::operator-() const {
    Elem r = f_->zero();
    r -= *this;
    return r;
}

namespace {
void unify(Elem& a, const Elem& b, Elem& bb, const Elem*& bp) {
    if (a.field() == b.field()) {
        bp = &b;
        return;
    }
    Field c = common_field(a.field(), b.field());
    if (c != a.field()) a = c->embed(a);
    if (c != b.field()) {
        bb = c->embed(b);
        bp = &bb;
    } else {
        bp = &b;
    }
}
} // namespace

Elem& Elem::operator+=(const Elem& o) {
    Elem tmp;
    const Elem* ob;
    unify(*this, o, tmp, ob);
    f_->add(*this, *ob);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    Elem tmp;
    const Elem* ob;
    unify(*this, o, tmp, ob);
    f_->sub(*this, *ob);
    return *this;
}

Elem& Elem::operator*=(const Elem& o) {
    Elem tmp;
    const Elem* ob;
    unify(*this, o, tmp, ob);
    f_->mul(*this, *ob);
    return *this;
}

Elem& Elem::operator/=(const Elem& o) {
    Elem tmp;
    const Elem* ob;
    unify(*this, o, tmp, ob);
    Elem inv = f_->inverse(*ob);
    f_->mul(*this, inv);
    return *this;
}

bool operator==(const Elem& a, const Elem& b) {
    if (a.f_ == b.f_) return a.fp_ == b.fp_ && a.q_ == b.q_;
    if (!a.f_ || !b.f_) return false;
    Field c = common_field(a.f_, b.f_);
    Elem x = c->embed(a), y = c->embed(b);
    return x.fp_ == y.fp_ && x.q_ == y.q_;
}

bool operator<(const Elem& a, const Elem& b) {
    if (a.fp_.size() != b.fp_.size()) return a.fp_.size() < b.fp_.size();
    for (std::size_t i = a.fp_.size(); i-- > 0;)
        if (a.fp_[i] != b.fp_[i]) return a.fp_[i] < b.fp_[i];
    if (a.q_.size() != b.q_.size()) return a.q_.size() < b.q_.size();
    for (std::size_t i = a.q_.size(); i-- > 0;)
        if (a.q_[i] != b.q_[i]) return a.q_[i] < b.q_[i];
    return false;
}

Elem Elem::inv() const { return f_->inverse(*this); }

Elem Elem::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(mpz_class(-e));
    Elem r = f_->one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        f_->mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) f_->mul(r, *this);
    }
    return r;
}

Elem Elem::pth_root() const {
    if (!f_->is_finite()) throw MathError("p-th root requested in characteristic zero");
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), f_->characteristic(), static_cast<unsigned long>(f_->degree() - 1));
    return pow(e);
}

bool Elem::in_prime_field() const {
    if (f_->is_finite()) return fp_.size() <= 1;
    return q_.size() <= 1;
}

std::string Elem::str() const {
    std::vector<std::string> cs;
    if (f_->is_finite()) {
        for (auto c : fp_) cs.push_back(std::to_string(c));
    } else {
        for (const auto& c : q_) cs.push_back(c.get_str());
    }
    return coeff_poly_str(cs, 'a');
}

// ---------------------------------------------------------------- FieldCtx

Field FieldCtx::intern(FieldCtx* ctx) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    registry().emplace_back(ctx);
    return ctx;
}

Field FieldCtx::prime(std::uint64_t p) {
    static std::mutex m;
    static std::map<std::uint64_t, Field> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    if (p < 2) throw MathError("characteristic must be 0 or a prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw MathError("characteristic " + std::to_string(p) + " is not prime");
    auto* ctx = new FieldCtx();
    ctx->p_ = p;
    ctx->k_ = 1;
    ctx->mod_fp_ = {0, 1};
    Field f = intern(ctx);
    cache[p] = f;
    return f;
}

Field FieldCtx::rationals() {
    static Field q = [] {
        auto* ctx = new FieldCtx();
        ctx->p_ = 0;
        ctx->k_ = 1;
        ctx->mod_q_ = {mpq_class(0), mpq_class(1)};
        return intern(ctx);
    }();
    return q;
}

Field FieldCtx::finite(std::uint64_t p, int k) {
    if (k == 1) return prime(p);
    static std::mutex m;
    static std::map<std::pair<std::uint64_t, int>, Field> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    prime(p); // validates p
    // lexicographic search: coefficients c_0..c_{k-1} as base-p digits
    FpVec f(k + 1, 0);
    f[k] = 1;
    for (;;) {
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(k)) {
            if (++f[i] < p) break;
            f[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(k)) throw MathError("no irreducible polynomial found");
        if (f[0] != 0 && fp_is_irreducible(f, p)) break;
    }
    Field res = finite_with_modulus(p, f);
    std::lock_guard<std::mutex> lock(m);
    cache[{p, k}] = res;
    return res;
}

Field FieldCtx::finite_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    Field base = prime(p);
    if (modulus.size() == 2) return base;
    if (modulus.empty() || modulus.back() != 1 || !fp_is_irreducible(modulus, p))
        throw MathError("defining polynomial is not monic irreducible");
    return finite_extension(base, std::move(modulus), {});
}

Field FieldCtx::finite_extension(Field parent, std::vector<std::uint64_t> modulus,
                                 std::vector<std::uint64_t> image_of_parent_gen) {
    auto* ctx = new FieldCtx();
    ctx->p_ = parent->characteristic();
    ctx->k_ = static_cast<int>(modulus.size()) - 1;
    ctx->mod_fp_ = std::move(modulus);
    ctx->parent_ = parent;
    ctx->depth_ = parent->depth_ + 1;
    ctx->parent_gen_image_.f_ = ctx;
    if (parent->degree() == 1) image_of_parent_gen.clear(); // prime field: constants map to themselves
    trim(image_of_parent_gen);
    ctx->parent_gen_image_.fp_.assign(image_of_parent_gen.begin(), image_of_parent_gen.end());
    return intern(ctx);
}

Field FieldCtx::number_extension(Field parent, std::vector<mpq_class> modulus,
                                 std::vector<mpq_class> image_of_parent_gen) {
    if (parent->depth_ + 1 > kMaxRationalTowerDepth)
        throw TowerLimitExceeded("rational tower depth limit (" + std::to_string(kMaxRationalTowerDepth) +
                                 ") exceeded");
    auto* ctx = new FieldCtx();
    ctx->p_ = 0;
    ctx->k_ = static_cast<int>(modulus.size()) - 1;
    ctx->mod_q_ = std::move(modulus);
    ctx->parent_ = parent;
    ctx->depth_ = parent->depth_ + 1;
    ctx->parent_gen_image_.f_ = ctx;
    if (parent->degree() == 1) image_of_parent_gen.clear();
    trim(image_of_parent_gen);
    ctx->parent_gen_image_.q_ = std::move(image_of_parent_gen);
    return intern(ctx);
}

Field FieldCtx::from_descriptor(const std::string& desc) {
    if (desc == "QQ" || desc == "Q" || desc == "0") return rationals();
    auto num = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw MathError("bad field descriptor '" + desc + "'");
        return std::stoull(s);
    };
    if (desc.rfind("Fp:", 0) == 0) return prime(num(desc.substr(3)));
    if (desc.rfind("Fq:", 0) == 0) {
        const std::string rest = desc.substr(3);
        const auto caret = rest.find('^');
        if (caret == std::string::npos) return prime(num(rest));
        return finite(num(rest.substr(0, caret)), static_cast<int>(num(rest.substr(caret + 1))));
    }
    throw MathError("bad field descriptor '" + desc + "'");
}

mpz_class FieldCtx::order() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(k_));
    return r;
}

std::string FieldCtx::descriptor() const {
    if (p_ == 0) return k_ == 1 ? "QQ" : "QQ(a):" + std::to_string(k_);
    if (k_ == 1) return "Fp:" + std::to_string(p_);
    return "Fq:" + std::to_string(p_) + "^" + std::to_string(k_);
}

std::string FieldCtx::modulus_str() const {
    std::vector<std::string> cs;
    if (p_) {
        for (auto c : mod_fp_) cs.push_back(std::to_string(c));
    } else {
        for (const auto& c : mod_q_) cs.push_back(c.get_str());
    }
    return coeff_poly_str(cs, 'a');
}

Elem FieldCtx::zero() const {
    Elem e;
    e.f_ = this;
    return e;
}

Elem FieldCtx::one() const { return from_int(1); }

Elem FieldCtx::from_int(long long v) const {
    if (p_ && k_ == 1 && v >= 0 && static_cast<std::uint64_t>(v) < p_) {
        Elem e;
        e.f_ = this;
        if (v) e.fp_.push_back(static_cast<std::uint64_t>(v));
        return e;
    }
    return from_mpz(mpz_class(static_cast<long>(v)));
}

Elem FieldCtx::from_mpz(const mpz_class& v) const {
    Elem e;
    e.f_ = this;
    if (p_) {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        if (r != 0) e.fp_.push_back(r.get_ui());
    } else if (v != 0) {
        e.q_.emplace_back(v);
    }
    return e;
}

Elem FieldCtx::from_mpq(const mpq_class& v) const {
    if (p_ == 0) {
        Elem e;
        e.f_ = this;
        if (v != 0) e.q_.push_back(v);
        return e;
    }
    return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Elem FieldCtx::gen() const {
    Elem e;
    e.f_ = this;
    if (p_) {
        if (k_ == 1) return zero();
        e.fp_ = {0, 1};
    } else {
        if (k_ == 1) return zero();
        e.q_ = {mpq_class(0), mpq_class(1)};
    }
    return e;
}

Elem FieldCtx::from_fp_coeffs(const std::vector<std::uint64_t>& c) const {
    Elem e;
    e.f_ = this;
    FpVec v(c.begin(), c.end());
    for (auto& x : v) x %= p_;
    if (static_cast<int>(v.size()) > k_) v = fp_mod(v, mod_fp_, p_);
    trim(v);
    e.fp_.assign(v.begin(), v.end());
    return e;
}

Elem FieldCtx::from_q_coeffs(const std::vector<mpq_class>& c) const {
    Elem e;
    e.f_ = this;
    QVec v = c;
    if (static_cast<int>(v.size()) > k_) v = q_mod(v, mod_q_);
    trim(v);
    e.q_ = std::move(v);
    return e;
}

Elem FieldCtx::random(Rng& rng) const {
    if (!p_) {
        std::uniform_int_distribution<long> d(-9, 9);
        return from_int(d(rng));
    }
    std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
    FpVec v(k_);
    for (auto& x : v) x = d(rng);
    return from_fp_coeffs(v);
}

bool FieldCtx::contains(Field other) const {
    for (Field f = this; f; f = f->parent_)
        if (f == other) return true;
    // prime subfields are shared by every finite field of that characteristic
    if (other->k_ == 1 && other->parent_ == nullptr && other->p_ == p_) return true;
    return false;
}

Elem FieldCtx::embed(const Elem& x) const {
    if (x.f_ == this) return x;
    if (x.f_->k_ == 1 && x.f_->parent_ == nullptr) {
        if (x.f_->p_ != p_) throw NoEmbedding("characteristics differ");
        Elem e;
        e.f_ = this;
        e.fp_ = x.fp_;
        e.q_ = x.q_;
        return e;
    }
    if (!parent_) throw NoEmbedding("no embedding from " + x.f_->descriptor() + " into " + descriptor());
    Elem y = parent_->embed(x);
    // Horner in the image of the parent's generator
    Elem r = zero();
    if (p_) {
        for (std::size_t i = y.fp_.size(); i-- > 0;) {
            mul(r, parent_gen_image_);
            Elem c = zero();
            if (y.fp_[i]) c.fp_.push_back(y.fp_[i]);
            add(r, c);
        }
    } else {
        for (std::size_t i = y.q_.size(); i-- > 0;) {
            mul(r, parent_gen_image_);
            add(r, from_mpq(y.q_[i]));
        }
    }
    return r;
}

void FieldCtx::add(Elem& a, const Elem& b) const {
    if (p_) {
        if (a.fp_.size() < b.fp_.size()) a.fp_.resize(b.fp_.size(), 0);
        for (std::size_t i = 0; i < b.fp_.size(); ++i) a.fp_[i] = addmod(a.fp_[i], b.fp_[i], p_);
        while (!a.fp_.empty() && a.fp_.back() == 0) a.fp_.pop_back();
    } else {
        if (a.q_.size() < b.q_.size()) a.q_.resize(b.q_.size(), mpq_class(0));
        for (std::size_t i = 0; i < b.q_.size(); ++i) a.q_[i] += b.q_[i];
        trim(a.q_);
    }
}

void FieldCtx::sub(Elem& a, const Elem& b) const {
    if (p_) {
        if (a.fp_.size() < b.fp_.size()) a.fp_.resize(b.fp_.size(), 0);
        for (std::size_t i = 0; i < b.fp_.size(); ++i) a.fp_[i] = submod(a.fp_[i], b.fp_[i], p_);
        while (!a.fp_.empty() && a.fp_.back() == 0) a.fp_.pop_back();
    } else {
        if (a.q_.size() < b.q_.size()) a.q_.resize(b.q_.size(), mpq_class(0));
        for (std::size_t i = 0; i < b.q_.size(); ++i) a.q_[i] -= b.q_[i];
        trim(a.q_);
    }
}

void FieldCtx::mul(Elem& a, const Elem& b) const {
    if (p_) {
        if (a.fp_.empty()) return;
        if (b.fp_.empty()) {
            a.fp_.clear();
            return;
        }
        if (k_ == 1) {
            a.fp_[0] = mulmod(a.fp_[0], b.fp_[0], p_);
            return;
        }
        FpVec x(a.fp_.begin(), a.fp_.end()), y(b.fp_.begin(), b.fp_.end());
        FpVec r = fp_mod(fp_mul(x, y, p_), mod_fp_, p_);
        a.fp_.assign(r.begin(), r.end());
    } else {
        if (a.q_.empty()) return;
        if (b.q_.empty()) {
            a.q_.clear();
            return;
        }
        if (k_ == 1) {
            a.q_[0] *= b.q_[0];
            return;
        }
        a.q_ = q_mod(q_mul(a.q_, b.q_), mod_q_);
    }
}

Elem FieldCtx::inverse(const Elem& a) const {
    if (a.is_zero()) throw DivisionByZero();
    Elem r;
    r.f_ = this;
    if (p_) {
        if (k_ == 1) {
            r.fp_.push_back(invmod(a.fp_[0], p_));
            return r;
        }
        FpVec x(a.fp_.begin(), a.fp_.end());
        FpVec inv = fp_inverse_mod(x, mod_fp_, p_);
        r.fp_.assign(inv.begin(), inv.end());
    } else {
        if (k_ == 1) {
            r.q_.push_back(1 / a.q_[0]);
            return r;
        }
        r.q_ = q_inverse_mod(a.q_, mod_q_);
    }
    return r;
}

Elem embed(const Elem& x, Field into) {
    if (!into->contains(x.field()))
        throw NoEmbedding("no embedding from " + x.field()->descriptor() + " into " + into->descriptor());
    return into->embed(x);
}

Field common_field(Field a, Field b) {
    if (a == b) return a;
    if (a->contains(b)) return a;
    if (b->contains(a)) return b;
    throw IncompatibleContexts("incompatible field contexts " + a->descriptor() + " and " + b->descriptor());
}

} // namespace plc
