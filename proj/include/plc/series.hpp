#ifndef PLC_SERIES_HPP
#define PLC_SERIES_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "plc/bipoly.hpp"

namespace plc {

using Coeffs = std::vector<Elem>;

/// Truncated power series arithmetic on coefficient vectors (index = exponent of t).
namespace ser {
Coeffs add(const Coeffs& a, const Coeffs& b, int n);
Coeffs sub(const Coeffs& a, const Coeffs& b, int n);
Coeffs mul(const Coeffs& a, const Coeffs& b, int n);
/// Inverse modulo t^n; a[0] must be nonzero.
Coeffs inv(const Coeffs& a, int n);
/// f(x(t), y(t)) modulo t^n.
Coeffs eval(const BiPoly& f, const Coeffs& x, const Coeffs& y, int n);
} // namespace ser

/// A power series in t whose coefficients are produced on demand and memoized.
///
/// Copies share the memo, so a series and its copies must be used from one thread at a time.
class LazySeries {
public:
    /// Returns at least n coefficients; successive calls must agree on common prefixes.
    using Producer = std::function<Coeffs(int n)>;

    LazySeries() = default;
    LazySeries(Field f, Producer p);
    static LazySeries polynomial(Field f, Coeffs c);
    static LazySeries zero(Field f) { return polynomial(f, {}); }
    /// c * t^k
    static LazySeries monomial(const Elem& c, int k);

    Field field() const;
    Elem coeff(int n) const;
    /// Exactly n coefficients.
    Coeffs prefix(int n) const;
    int known_prec() const;
    /// Set when the series is a polynomial known in full.
    bool is_polynomial() const;

    friend LazySeries operator+(const LazySeries& a, const LazySeries& b);
    friend LazySeries operator-(const LazySeries& a, const LazySeries& b);
    friend LazySeries operator*(const LazySeries& a, const LazySeries& b);
    friend LazySeries operator*(const LazySeries& a, const Elem& c);

private:
    struct State {
        Field field = nullptr;
        Producer producer;
        Coeffs memo;
        bool finite = false;
    };
    std::shared_ptr<State> s_;
};

/// f(x(t), y(t)); the n-th output coefficient only needs the first n+1 coefficients of each input.
LazySeries substitute_series(const BiPoly& f, const LazySeries& x, const LazySeries& y);

/// Smallest n <= bound with a nonzero coefficient, or nullopt (the series vanishes to order > bound).
std::optional<int> series_order(const LazySeries& s, int bound);

/// The unique phi with phi(0) = 0 and g(t, phi(t)) = 0; requires g(0,0) = 0 and g_y(0,0) != 0.
LazySeries implicit_series(const BiPoly& g);

} // namespace plc

#endif
