#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace realsurf {

// Exact rational on int64. Twists are small fractions and the only arithmetic
// performed on them is negation, addition of halves and reduction mod 1, so no
// big-integer backend is needed; normalization keeps den > 0 and gcd = 1.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        const std::int64_t g = std::gcd(den_, o.den_);
        const std::int64_t l = den_ / g * o.den_;
        return Rational(num_ * (l / den_) + o.num_ * (l / o.den_), l);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }

    // Reduce into [0, 1).
    Rational mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_zero_or_half() const {
        return (num_ == 0 && den_ == 1) || (num_ == 1 && den_ == 2);
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Accepts "p/q" or a bare integer "p". Whole-string match only.
    static std::optional<Rational> parse(std::string_view s);

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Twist normalization: exact value mod 1 in [0, 1).
inline Rational normalize_twist(const Rational& t) { return t.mod1(); }

inline std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    const auto parse_int = [](std::string_view v, std::int64_t& out) -> bool {
        if (v.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (v[0] == '-' || v[0] == '+') {
            neg = v[0] == '-';
            i = 1;
            if (i == v.size()) return false;
        }
        std::int64_t acc = 0;
        for (; i < v.size(); ++i) {
            if (v[i] < '0' || v[i] > '9') return false;
            if (acc > (INT64_MAX - (v[i] - '0')) / 10) return false;
            acc = acc * 10 + (v[i] - '0');
        }
        out = neg ? -acc : acc;
        return true;
    };
    const std::size_t slash = s.find('/');
    std::int64_t p = 0, q = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(s, p)) return std::nullopt;
        return Rational(p);
    }
    if (!parse_int(s.substr(0, slash), p)) return std::nullopt;
    if (!parse_int(s.substr(slash + 1), q)) return std::nullopt;
    if (q == 0) return std::nullopt;
    return Rational(p, q);
}

}  // namespace realsurf
