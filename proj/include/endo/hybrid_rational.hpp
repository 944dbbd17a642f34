#pragma once

#include "endo/rational.hpp"

#include <cstdint>
#include <memory>

namespace endo {

/// Exact rational that stays in two machine words while numerator and
/// denominator fit in int64 and moves to GMP otherwise. Used inside the LP
/// core, where almost every entry is a small fraction. Always canonical.
class HybridRational {
public:
    HybridRational() = default;
    HybridRational(std::int64_t v) : num_(v) {}  // NOLINT(implicit)
    explicit HybridRational(const Rational& v) { assign(v); }

    HybridRational(const HybridRational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<Rational>(*o.big_);
    }
    HybridRational(HybridRational&&) noexcept = default;
    HybridRational& operator=(const HybridRational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
        }
        return *this;
    }
    HybridRational& operator=(HybridRational&&) noexcept = default;

    Rational to_rational() const;
    int sign() const;
    bool is_zero() const { return !big_ && num_ == 0; }

    friend HybridRational operator+(const HybridRational& a, const HybridRational& b);
    friend HybridRational operator-(const HybridRational& a, const HybridRational& b);
    friend HybridRational operator*(const HybridRational& a, const HybridRational& b);
    friend HybridRational operator/(const HybridRational& a, const HybridRational& b);
    HybridRational operator-() const;

    HybridRational& operator+=(const HybridRational& b) { return *this = *this + b; }
    HybridRational& operator-=(const HybridRational& b) { return *this = *this - b; }
    HybridRational& operator*=(const HybridRational& b) { return *this = *this * b; }

    friend int compare(const HybridRational& a, const HybridRational& b);
    friend bool operator<(const HybridRational& a, const HybridRational& b) { return compare(a, b) < 0; }
    friend bool operator>(const HybridRational& a, const HybridRational& b) { return compare(a, b) > 0; }
    friend bool operator<=(const HybridRational& a, const HybridRational& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const HybridRational& a, const HybridRational& b) { return compare(a, b) >= 0; }
    friend bool operator==(const HybridRational& a, const HybridRational& b) { return compare(a, b) == 0; }
    friend bool operator!=(const HybridRational& a, const HybridRational& b) { return compare(a, b) != 0; }

    HybridRational abs() const { return sign() < 0 ? -*this : *this; }

private:
    void assign(const Rational& v);
    static HybridRational from_big(Rational v);
    Rational big_value() const;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<Rational> big_;  // set when the value does not fit
};

}  // namespace endo
