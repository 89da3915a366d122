#ifndef PLC_UPOLY_HPP
#define PLC_UPOLY_HPP

#include <string>
#include <vector>

#include "plc/field.hpp"

namespace plc {

/// Dense univariate polynomial over a field; coefficient i multiplies t^i. Always trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Field f) : f_(f) {}
    UPoly(Field f, std::vector<Elem> c);
    static UPoly constant(const Elem& c);
    static UPoly monomial(const Elem& c, int deg);
    /// t - c
    static UPoly linear_root(const Elem& c);

    Field field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int i) const;
    Elem lead() const { return c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Elem& c);
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    void divmod(const UPoly& b, UPoly& q, UPoly& r) const;
    UPoly operator/(const UPoly& b) const;
    UPoly operator%(const UPoly& b) const;

    UPoly monic() const;
    UPoly derivative() const;
    Elem eval(const Elem& x) const;
    UPoly compose(const UPoly& inner) const;
    UPoly pow(int e) const;
    UPoly powmod(const mpz_class& e, const UPoly& m) const;
    /// Maps every coefficient into an extension field.
    UPoly embed(Field into) const;

    std::string str(char var = 't') const;

private:
    void trim();
    Field f_ = nullptr;
    std::vector<Elem> c_;
};

UPoly gcd(UPoly a, UPoly b);
/// Resultant of two univariate polynomials (Euclidean algorithm).
Elem resultant(const UPoly& a, const UPoly& b);

} // namespace plc

#endif
