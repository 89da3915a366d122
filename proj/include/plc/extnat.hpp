#ifndef PLC_EXTNAT_HPP
#define PLC_EXTNAT_HPP

#include <compare>
#include <optional>
#include <string>

namespace plc {

/// A natural number or infinity; arithmetic saturates at infinity.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(long v) : v_(v) {}
    static constexpr ExtNat inf() {
        ExtNat r;
        r.inf_ = true;
        return r;
    }
    static ExtNat from_opt(const std::optional<int>& o) { return o ? ExtNat(*o) : inf(); }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool finite() const { return !inf_; }
    /// Value of a finite number.
    constexpr long value() const { return v_; }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return inf();
        return ExtNat(a.v_ + b.v_);
    }
    friend constexpr ExtNat operator*(long k, ExtNat a) {
        if (a.inf_) return k == 0 ? ExtNat(0) : inf();
        return ExtNat(k * a.v_);
    }
    friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_); }
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
        return a.v_ <=> b.v_;
    }
    friend constexpr ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    long v_ = 0;
    bool inf_ = false;
};

} // namespace plc

#endif
