// Dense polynomial kernels over F_p (uint64 coefficients) and Q (mpq_class coefficients).
// Internal to the library: used by the field arithmetic and by the irreducible-modulus search.
#ifndef PLC_SRC_POLY_KERNELS_HPP
#define PLC_SRC_POLY_KERNELS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace plc::detail {

using FpVec = std::vector<std::uint64_t>;
using QVec = std::vector<mpq_class>;

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

void trim(FpVec& a);
FpVec fp_add(const FpVec& a, const FpVec& b, std::uint64_t p);
FpVec fp_sub(const FpVec& a, const FpVec& b, std::uint64_t p);
FpVec fp_mul(const FpVec& a, const FpVec& b, std::uint64_t p);
FpVec fp_scale(const FpVec& a, std::uint64_t c, std::uint64_t p);
/// a = q*b + r; b nonzero.
void fp_divmod(const FpVec& a, const FpVec& b, std::uint64_t p, FpVec& q, FpVec& r);
FpVec fp_mod(const FpVec& a, const FpVec& b, std::uint64_t p);
FpVec fp_monic(const FpVec& a, std::uint64_t p);
FpVec fp_gcd(FpVec a, FpVec b, std::uint64_t p);
/// Returns g = gcd(a,b) (monic) and s with s*a = g mod b.
FpVec fp_inverse_mod(const FpVec& a, const FpVec& m, std::uint64_t p);
FpVec fp_mulmod(const FpVec& a, const FpVec& b, const FpVec& m, std::uint64_t p);
FpVec fp_powmod(FpVec base, const mpz_class& e, const FpVec& m, std::uint64_t p);
bool fp_is_irreducible(const FpVec& f, std::uint64_t p);

void trim(QVec& a);
QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
QVec q_mul(const QVec& a, const QVec& b);
void q_divmod(const QVec& a, const QVec& b, QVec& q, QVec& r);
QVec q_mod(const QVec& a, const QVec& b);
QVec q_inverse_mod(const QVec& a, const QVec& m);

} // namespace plc::detail

#endif
