#include "endo/hybrid_rational.hpp"

#include <climits>
#include <numeric>

namespace endo {

namespace {

constexpr std::int64_t limit = INT64_MAX;  // |num| and den kept <= limit

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Narrow an int128 into int64 if it is within +-limit.
bool narrow(__int128 v, std::int64_t& out) {
    if (v > limit || v < -static_cast<__int128>(limit)) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

}  // namespace

void HybridRational::assign(const Rational& v) {
    if (fits(v.get_num()) && fits(v.get_den())) {
        num_ = v.get_num().get_si();
        den_ = v.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<Rational>(v);
    }
}

HybridRational HybridRational::from_big(Rational v) {
    HybridRational out;
    out.assign(v);
    return out;
}

Rational HybridRational::big_value() const {
    if (big_) return *big_;
    return Rational(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational HybridRational::to_rational() const { return big_value(); }

int HybridRational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

HybridRational HybridRational::operator-() const {
    if (big_) return from_big(-*big_);
    HybridRational out;
    out.num_ = -num_;  // |num_| <= limit, so no overflow
    out.den_ = den_;
    return out;
}

HybridRational operator+(const HybridRational& a, const HybridRational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        HybridRational out;
        if (a.den_ == 1 && b.den_ == 1) {
            if (narrow(static_cast<__int128>(a.num_) + b.num_, out.num_)) return out;
        } else {
            std::int64_t g = gcd64(a.den_, b.den_);
            std::int64_t bd = b.den_ / g;
            __int128 num = static_cast<__int128>(a.num_) * bd + static_cast<__int128>(b.num_) * (a.den_ / g);
            __int128 den = static_cast<__int128>(a.den_) * bd;
            if (num == 0) return out;
            // Only factors of g can survive in gcd(num, den).
            __int128 un = num < 0 ? -num : num;
            std::int64_t g2 = static_cast<std::int64_t>(un % g == 0 ? g : std::gcd(static_cast<std::int64_t>(un % g), g));
            num /= g2;
            den /= g2;
            if (narrow(num, out.num_) && narrow(den, out.den_)) return out;
        }
    }
    return HybridRational::from_big(a.big_value() + b.big_value());
}

HybridRational operator-(const HybridRational& a, const HybridRational& b) { return a + (-b); }

HybridRational operator*(const HybridRational& a, const HybridRational& b) {
    if (!a.big_ && !b.big_) {
        HybridRational out;
        if (a.num_ == 0 || b.num_ == 0) return out;
        std::int64_t g1 = gcd64(a.num_, b.den_);
        std::int64_t g2 = gcd64(b.num_, a.den_);
        __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        if (narrow(num, out.num_) && narrow(den, out.den_)) return out;
    }
    return HybridRational::from_big(a.big_value() * b.big_value());
}

HybridRational operator/(const HybridRational& a, const HybridRational& b) {
    if (!a.big_ && !b.big_) {
        HybridRational inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        if (inv.den_ == 0) throw std::domain_error("division by zero");
        return a * inv;
    }
    return HybridRational::from_big(a.big_value() / b.big_value());
}

int compare(const HybridRational& a, const HybridRational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return (l > r) - (l < r);
    }
    return cmp(a.big_value(), b.big_value());
}

}  // namespace endo
