#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace combprob {

/*
 * Exact rational arithmetic on 64-bit numerator and denominator.
 *
 * Invariants: denominator > 0, gcd(|num|, den) == 1 (zero is 0/1).  Every
 * intermediate product or cross sum is computed in 128 bits and reduced to
 * lowest terms before narrowing back to 64 bits; if the reduced value still
 * does not fit, std::overflow_error is thrown rather than wrapping.  A zero
 * denominator throws std::domain_error.  Values never pass through floating
 * point, so equality and ordering are exact.
 */
class rational {
public:
    constexpr rational() = default;
    constexpr rational(std::int64_t n) : num_(n) {}
    rational(std::int64_t n, std::int64_t d) { *this = normalize(n, d); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    friend rational operator+(const rational& a, const rational& b) {
        return normalize((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return normalize((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return normalize((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return normalize((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    rational operator-() const {
        rational r;
        r.num_ = narrow(-(__int128)num_);
        r.den_ = den_;
        return r;
    }
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }

    rational abs() const { return num_ < 0 ? -*this : *this; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    // Denominators are positive, so a/b <=> c/d reduces to ad <=> cb; the
    // products stay within 128 bits, making the comparison exact.
    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const rational& a, const rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    // "3", "-3", "3/4", "-3/4".  No whitespace, no '+', denominator positive.
    static std::optional<rational> parse(std::string_view s) {
        std::size_t slash = s.find('/');
        std::optional<std::int64_t> n, d;
        if (slash == std::string_view::npos) {
            n = parse_int(s);
            d = 1;
        } else {
            n = parse_int(s.substr(0, slash));
            d = parse_int(s.substr(slash + 1));
            if (d && *d <= 0) return std::nullopt;
        }
        if (!n || !d) return std::nullopt;
        return rational(*n, *d);
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static std::int64_t narrow(__int128 v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("rational: value exceeds 64 bits");
        return (std::int64_t)v;
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static rational normalize(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        unsigned __int128 an = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
        unsigned __int128 g = gcd128(an, (unsigned __int128)d);
        if (g > 1) {
            n /= (__int128)g;
            d /= (__int128)g;
        }
        rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static std::optional<std::int64_t> parse_int(std::string_view s) {
        bool neg = false;
        if (!s.empty() && s[0] == '-') {
            neg = true;
            s.remove_prefix(1);
        }
        if (s.empty() || s.size() > 19) return std::nullopt;
        __int128 v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        if (neg) v = -v;
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            return std::nullopt;
        return (std::int64_t)v;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace combprob
