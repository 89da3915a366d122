#ifndef PLC_TRIPOLY_HPP
#define PLC_TRIPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "plc/bipoly.hpp"

namespace plc {

class NotHomogeneous : public MathError {
public:
    NotHomogeneous() : MathError("polynomial is not homogeneous") {}
};

/// Sparse polynomial in x, y, z. Used for projective curves and as the parser's output.
class TriPoly {
public:
    using Exp = std::array<int, 3>;
    struct ExpLess {
        bool operator()(const Exp& a, const Exp& b) const {
            const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
            if (da != db) return da < db;
            return a > b;
        }
    };
    using Terms = std::map<Exp, Elem, ExpLess>;

    TriPoly() = default;
    explicit TriPoly(Field f) : f_(f) {}
    static TriPoly constant(const Elem& c);
    static TriPoly var(Field f, int k);
    /// z^deg f * f(x/z, y/z).
    static TriPoly homogenize(const BiPoly& f);

    Field field() const { return f_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    int degree() const;
    bool is_homogeneous() const;
    /// True when only variables with index < 2 occur.
    bool uses_var(int k) const;

    TriPoly operator-() const;
    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const Elem& c);
    friend bool operator==(const TriPoly& a, const TriPoly& b);
    TriPoly pow(int e) const;

    TriPoly differentiate(int k) const;
    Elem eval(const Elem& x, const Elem& y, const Elem& z) const;
    TriPoly embed(Field into) const;
    /// Sets variable k to 1; the remaining two variables (in order) become x, y.
    BiPoly dehomogenize(int k) const;
    /// Drops z (requires it not to occur).
    BiPoly to_bipoly() const;
    /// Substitutes a linear change: variable k -> sum_l m[k][l] * var_l.
    TriPoly linear_change(const std::array<std::array<Elem, 3>, 3>& m) const;

    std::string str(bool upper = false) const;

private:
    Field f_ = nullptr;
    Terms t_;
};

} // namespace plc

#endif
