#include "endo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace endo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational make_rational(long p, long q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!all_digits(num)) return std::nullopt;
    Rational r;
    if (slash == std::string_view::npos) {
        r = Rational(parse_integer(num));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(den)) return std::nullopt;
        mpz_class d = parse_integer(den);
        if (d == 0) return std::nullopt;
        r = Rational(parse_integer(num), d);
        r.canonicalize();
    }
    if (negative) r = -r;
    return r;
}

std::optional<Rational> parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto dot_pos = text.find('.');
    if (dot_pos == std::string_view::npos) {
        if (!all_digits(text)) return std::nullopt;
        Rational r(parse_integer(text));
        return negative ? Rational(-r) : r;
    }
    std::string_view whole = text.substr(0, dot_pos);
    std::string_view frac = text.substr(dot_pos + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class numerator = whole.empty() ? mpz_class(0) : parse_integer(whole);
    numerator *= scale;
    if (!frac.empty()) numerator += parse_integer(frac);
    Rational r(numerator, scale);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::optional<Rational> parse_number(std::string_view text) {
    if (text.find('.') != std::string_view::npos) return parse_decimal(text);
    return parse_rational(text);
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    mpz_class num = value.get_num();
    const mpz_class& den = value.get_den();
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    mpz_class whole = num / den;
    mpz_class rem = num % den;
    out += whole.get_str();
    if (rem == 0) return out;
    out += '.';
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        mpz_class d = rem / den;
        rem = rem % den;
        frac += d.get_str();
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) out.pop_back();
    return out + frac;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
    }
    return sum;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

RationalVector primitive_integer(const RationalVector& v) {
    if (is_zero(v)) return v;
    mpz_class lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    RationalVector out;
    out.reserve(v.size());
    for (auto& n : ints) out.emplace_back(mpz_class(n / g));
    return out;
}

RationalVector canonical_direction(const RationalVector& v) {
    RationalVector out = primitive_integer(v);
    for (const auto& x : out) {
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0) {
            for (auto& y : out) y = -y;
        }
        break;
    }
    return out;
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace endo
