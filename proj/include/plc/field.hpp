#ifndef PLC_FIELD_HPP
#define PLC_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace plc {

/// Base class of every error raised by the library.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

class IncompatibleContexts : public MathError {
public:
    using MathError::MathError;
};

class NoEmbedding : public MathError {
public:
    using MathError::MathError;
};

class TowerLimitExceeded : public MathError {
public:
    using MathError::MathError;
};

using Rng = std::mt19937_64;

class FieldCtx;
/// Fields are interned for the lifetime of the process, so a raw pointer is a stable handle.
using Field = const FieldCtx*;

/// An exact element of a prime field, a finite extension F_p[a]/(m), or a number field Q[a]/(m).
///
/// Finite field elements are stored as the coefficient vector of a polynomial in the field
/// generator with entries in [0,p); number field elements as rational coefficient vectors.
/// Both are trimmed (no trailing zeros) so that zero is the empty vector.
class Elem {
public:
    Elem() = default;

    Field field() const { return f_; }
    bool valid() const { return f_ != nullptr; }
    bool is_zero() const { return fp_.empty() && q_.empty(); }
    bool is_one() const;

    Elem operator-() const;
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Elem& o);
    Elem& operator/=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
    friend Elem operator/(Elem a, const Elem& b) { return a /= b; }
    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    Elem inv() const;
    Elem pow(const mpz_class& e) const;
    Elem pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }
    /// Unique p-th root (finite fields only; Frobenius is bijective there).
    Elem pth_root() const;

    /// Coefficients of the representing polynomial in the field generator.
    std::vector<std::uint64_t> fp_coeffs() const { return {fp_.begin(), fp_.end()}; }
    const std::vector<mpq_class>& q_coeffs() const { return q_; }

    /// Integer value when the element lies in the prime field (finite fields only).
    bool in_prime_field() const;

    std::string str() const;

    /// Strict weak order, used only for deterministic containers.
    friend bool operator<(const Elem& a, const Elem& b);

private:
    friend class FieldCtx;
    Field f_ = nullptr;
    boost::container::small_vector<std::uint64_t, 2> fp_;
    std::vector<mpq_class> q_;
};

/// A field context. Either finite (p > 0, F_p[a]/(modulus)) or a number field (p = 0,
/// Q[a]/(modulus)); degree 1 gives F_p and Q themselves. Every context except the prime ones
/// records its parent and the image of the parent's generator, which defines the embedding.
class FieldCtx {
public:
    static Field prime(std::uint64_t p);
    static Field rationals();
    /// F_{p^k} with a deterministic irreducible modulus (first one in lexicographic order).
    static Field finite(std::uint64_t p, int k);
    /// F_p[a]/(modulus) over the prime field; modulus must be monic and irreducible.
    static Field finite_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// Parses "Fp:7", "Fq:7^2", "QQ".
    static Field from_descriptor(const std::string& desc);

    /// Internal constructors used by extend_with_root. `image_of_parent_gen` is given as
    /// coefficients in the new generator.
    static Field finite_extension(Field parent, std::vector<std::uint64_t> modulus,
                                  std::vector<std::uint64_t> image_of_parent_gen);
    static Field number_extension(Field parent, std::vector<mpq_class> modulus,
                                  std::vector<mpq_class> image_of_parent_gen);

    std::uint64_t characteristic() const { return p_; }
    bool is_finite() const { return p_ != 0; }
    /// Absolute degree over the prime field.
    int degree() const { return k_; }
    Field parent() const { return parent_; }
    int depth() const { return depth_; }
    mpz_class order() const;

    const std::vector<std::uint64_t>& fp_modulus() const { return mod_fp_; }
    const std::vector<mpq_class>& q_modulus() const { return mod_q_; }

    std::string descriptor() const;
    std::string modulus_str() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(long long v) const;
    Elem from_mpz(const mpz_class& v) const;
    Elem from_mpq(const mpq_class& v) const;
    Elem gen() const;
    Elem from_fp_coeffs(const std::vector<std::uint64_t>& c) const;
    Elem from_q_coeffs(const std::vector<mpq_class>& c) const;
    Elem random(Rng& rng) const;

    /// True when `other` is this field or one of its ancestors.
    bool contains(Field other) const;
    /// Maps x (from an ancestor field) into this field.
    Elem embed(const Elem& x) const;

    /// Internal arithmetic kernels.
    void add(Elem& a, const Elem& b) const;
    void sub(Elem& a, const Elem& b) const;
    void mul(Elem& a, const Elem& b) const;
    Elem inverse(const Elem& a) const;

private:
    FieldCtx() = default;
    static Field intern(FieldCtx* ctx);
    void normalize(Elem& a) const;

    std::uint64_t p_ = 0;
    int k_ = 1;
    int depth_ = 0;
    std::vector<std::uint64_t> mod_fp_;
    std::vector<mpq_class> mod_q_;
    Field parent_ = nullptr;
    Elem parent_gen_image_;
};

/// Embeds `x` into `into`; throws NoEmbedding if `x`'s field is not a subfield of `into`.
Elem embed(const Elem& x, Field into);

/// The finer of two fields when one contains the other.
Field common_field(Field a, Field b);

/// Largest ℚ-tower depth accepted by extend_with_root.
inline constexpr int kMaxRationalTowerDepth = 4;

} // namespace plc

#endif
