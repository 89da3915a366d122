#ifndef PLC_BIPOLY_HPP
#define PLC_BIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plc/upoly.hpp"

namespace plc {

class NotReduced : public MathError {
public:
    NotReduced() : MathError("polynomial is not reduced") {}
};

class CharZeroPthRoot : public MathError {
public:
    CharZeroPthRoot() : MathError("p-th root requested in characteristic 0") {}
};

/// Exponent pair (i, j) of x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;
    int deg() const { return i + j; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded order, x before y: lower total degree first, then higher x-degree first.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i > b.i;
    }
};

enum class Var { X, Y };

/// Sparse bivariate polynomial sum c_ij x^i y^j; no zero coefficients are stored.
class BiPoly {
public:
    using Terms = std::map<Mono, Elem, MonoLess>;

    BiPoly() = default;
    explicit BiPoly(Field f) : f_(f) {}
    static BiPoly constant(const Elem& c);
    static BiPoly monomial(const Elem& c, int i, int j);
    static BiPoly x(Field f) { return monomial(f->one(), 1, 0); }
    static BiPoly y(Field f) { return monomial(f->one(), 0, 1); }

    Field field() const { return f_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    Elem coeff(int i, int j) const;
    void set(int i, int j, const Elem& c);

    /// Highest total degree (-1 for zero).
    int degree() const;
    /// Lowest total degree, i.e. the multiplicity at the origin (-1 for zero).
    int order() const;
    int degree_in(Var v) const;
    bool vanishes_at_origin() const { return !is_zero() && order() > 0; }
    /// Homogeneous component of degree d.
    BiPoly homogeneous_part(int d) const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Elem& c);
    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
    BiPoly pow(int e) const;

    BiPoly differentiate(Var v) const;
    Elem eval(const Elem& x, const Elem& y) const;
    /// f(X(x,y), Y(x,y)).
    BiPoly compose(const BiPoly& X, const BiPoly& Y) const;
    /// f(x + a, y + b).
    BiPoly translate(const Elem& a, const Elem& b) const;
    /// f(y, x).
    BiPoly swap() const;
    BiPoly embed(Field into) const;
    /// Makes the coefficient of the leading term (last in graded order) equal to 1.
    BiPoly normalized() const;
    /// Divides every exponent of x by x^k (caller guarantees x^k divides f).
    BiPoly shift_down(int kx, int ky) const;

    /// f(t, c) as a polynomial in t / f(c, t) as a polynomial in t.
    UPoly restrict_y(const Elem& c) const;
    UPoly restrict_x(const Elem& c) const;
    /// Coefficients in the variable `v`: f = sum_k c_k(other) v^k.
    std::vector<UPoly> coeffs_in(Var v) const;
    static BiPoly from_coeffs_in(Var v, const std::vector<UPoly>& c, Field f);

    std::string str() const;

private:
    Field f_ = nullptr;
    Terms t_;
};

/// Exact quotient a / b if b divides a.
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);
/// Monic (normalized) greatest common divisor.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Resultant with respect to `eliminate`, as a polynomial in the other variable, normalized as
/// lc(g)^deg(f) * prod_{g(b)=0} f(b); this differs from the Sylvester determinant by (-1)^(deg f deg g).
UPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);

/// Coefficient-wise p-th root of a polynomial in x^p, y^p (finite fields).
BiPoly pth_root(const BiPoly& f);

struct SquarefreeResult {
    BiPoly part;
    bool is_reduced = false;
};
/// Product of the distinct irreducible factors of f.
SquarefreeResult squarefree_part(const BiPoly& f);
/// Radical of f, provided no repeated factor passes through the origin (those are units in the
/// local ring). Throws NotReduced otherwise.
BiPoly local_radical(const BiPoly& f);

/// f = r_1 r_2 ... r_k with every r_i squarefree and r_{i+1} | r_i.
std::vector<BiPoly> radical_chain(const BiPoly& f);

} // namespace plc

#endif
