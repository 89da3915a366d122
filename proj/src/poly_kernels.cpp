#include "poly_kernels.hpp"

#include "plc/field.hpp"

namespace plc::detail {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero();
    // p is prime
    __int128 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

void trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpVec fp_add(const FpVec& a, const FpVec& b, std::uint64_t p) {
    FpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], p);
    trim(r);
    return r;
}

FpVec fp_sub(const FpVec& a, const FpVec& b, std::uint64_t p) {
    FpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
    trim(r);
    return r;
}

FpVec fp_mul(const FpVec& a, const FpVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    if (p < (1ULL << 31)) {
        // accumulate without reduction while it is safe
        std::vector<unsigned __int128> acc(r.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
        }
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
        }
    }
    trim(r);
    return r;
}

FpVec fp_scale(const FpVec& a, std::uint64_t c, std::uint64_t p) {
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    trim(r);
    return r;
}

void fp_divmod(const FpVec& a, const FpVec& b, std::uint64_t p, FpVec& q, FpVec& r) {
    if (b.empty()) throw DivisionByZero();
    r = a;
    trim(r);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = invmod(b.back(), p);
    for (std::size_t i = r.size(); i-- >= b.size();) {
        const std::uint64_t c = mulmod(r[i], lead_inv, p);
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        if (c)
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = submod(r[shift + j], mulmod(c, b[j], p), p);
        if (i == 0) break;
    }
    trim(q);
    trim(r);
}

FpVec fp_mod(const FpVec& a, const FpVec& b, std::uint64_t p) {
    FpVec q, r;
    fp_divmod(a, b, p, q, r);
    return r;
}

FpVec fp_monic(const FpVec& a, std::uint64_t p) {
    if (a.empty()) return a;
    return fp_scale(a, invmod(a.back(), p), p);
}

FpVec fp_gcd(FpVec a, FpVec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpVec r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpVec fp_inverse_mod(const FpVec& a, const FpVec& m, std::uint64_t p) {
    FpVec r0 = m, r1 = fp_mod(a, m, p);
    FpVec s0, s1{1};
    while (!r1.empty()) {
        FpVec q, r;
        fp_divmod(r0, r1, p, q, r);
        FpVec s = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw DivisionByZero();
    return fp_mod(fp_scale(s0, invmod(r0[0], p), p), m, p);
}

FpVec fp_mulmod(const FpVec& a, const FpVec& b, const FpVec& m, std::uint64_t p) {
    return fp_mod(fp_mul(a, b, p), m, p);
}

FpVec fp_powmod(FpVec base, const mpz_class& e, const FpVec& m, std::uint64_t p) {
    FpVec r{1};
    r = fp_mod(r, m, p);
    base = fp_mod(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = fp_mulmod(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mulmod(r, base, m, p);
    }
    return r;
}

bool fp_is_irreducible(const FpVec& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const FpVec x{0, 1};
    FpVec xp = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = fp_powmod(xp, mpz_class(static_cast<unsigned long>(p)), f, p);
        FpVec g = fp_gcd(f, fp_sub(xp, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

void trim(QVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec q_add(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QVec q_sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QVec q_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void q_divmod(const QVec& a, const QVec& b, QVec& q, QVec& r) {
    if (b.empty()) throw DivisionByZero();
    r = a;
    trim(r);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, mpq_class(0));
    for (std::size_t i = r.size(); i-- >= b.size();) {
        mpq_class c = r[i] / b.back();
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        if (i == 0) break;
    }
    trim(q);
    trim(r);
}

QVec q_mod(const QVec& a, const QVec& b) {
    QVec q, r;
    q_divmod(a, b, q, r);
    return r;
}

QVec q_inverse_mod(const QVec& a, const QVec& m) {
    QVec r0 = m, r1 = q_mod(a, m);
    QVec s0, s1{mpq_class(1)};
    while (!r1.empty()) {
        QVec q, r;
        q_divmod(r0, r1, q, r);
        QVec s = q_sub(s0, q_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw DivisionByZero();
    for (auto& c : s0) c /= r0[0];
    return q_mod(s0, m);
}

} // namespace plc::detail
