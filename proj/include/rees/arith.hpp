#pragma once

/**
 * @file arith.hpp
 * @brief Integer helpers and the two coefficient fields: Q and F_p.
 */

#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rees/error.hpp"

namespace rees {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Least non-negative residue.
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

struct egcd_result {
    std::int64_t g, x, y;  // g = a*x + b*y
};

constexpr egcd_result extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

constexpr std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t n) {
    std::int64_t result = 1 % n;
    base = mod_floor(base, n);
    while (e) {
        if (e & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return result;
}

constexpr bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// True when n = p^k for a prime p and k >= 1.
constexpr bool is_prime_power(std::int64_t n) {
    if (n < 2) return false;
    std::int64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Legendre symbol (x / p) for an odd prime p: 0, 1 or -1.
constexpr int legendre(std::int64_t x, std::int64_t p) {
    x = mod_floor(x, p);
    if (x == 0) return 0;
    return pow_mod(x, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

/// A square root of x modulo an odd prime p (Tonelli-Shanks), if one exists.
inline std::optional<std::int64_t> sqrt_mod(std::int64_t x, std::int64_t p) {
    x = mod_floor(x, p);
    if (x == 0) return 0;
    if (p == 2) return x;
    if (legendre(x, p) != 1) return std::nullopt;
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::int64_t z = 2;
    while (legendre(z, p) != -1) ++z;
    std::int64_t m = s;
    std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), p);
    std::int64_t t = pow_mod(x, static_cast<std::uint64_t>(q), p);
    std::int64_t r = pow_mod(x, static_cast<std::uint64_t>((q + 1) / 2), p);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
        std::int64_t b = c;
        for (std::int64_t k = 0; k < m - i - 1; ++k) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

inline std::optional<bigint> exact_isqrt(const bigint& n) {
    if (n < 0) return std::nullopt;
    bigint r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

namespace detail {
inline bigint parse_bigint(std::string_view s) {
    if (s.empty()) fail(error_kind::parse_error, "empty integer");
    std::string_view digits = s;
    if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
    if (digits.empty()) fail(error_kind::parse_error, "bad integer '" + std::string(s) + "'");
    for (char ch : digits)
        if (ch < '0' || ch > '9') fail(error_kind::parse_error, "bad integer '" + std::string(s) + "'");
    bigint v{std::string(digits)};
    return s.front() == '-' ? bigint(-v) : v;
}
} // namespace detail

/// Interface shared by the coefficient fields of truncated series.
template <class F>
concept coefficient_field = requires(const F& f, const typename F::value_type& x, const typename F::value_type& y,
                                     std::string_view text) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(x, y) } -> std::same_as<typename F::value_type>;
    { f.sub(x, y) } -> std::same_as<typename F::value_type>;
    { f.mul(x, y) } -> std::same_as<typename F::value_type>;
    { f.neg(x) } -> std::same_as<typename F::value_type>;
    { f.inv(x) } -> std::same_as<typename F::value_type>;
    { f.is_zero(x) } -> std::convertible_to<bool>;
    { f.from_int(0LL) } -> std::same_as<typename F::value_type>;
    { f.sqrt(x) } -> std::same_as<std::optional<typename F::value_type>>;
    { f.characteristic() } -> std::convertible_to<std::int64_t>;
    { f.to_string(x) } -> std::convertible_to<std::string>;
    { f.parse(text) } -> std::same_as<typename F::value_type>;
    { f.name() } -> std::convertible_to<std::string>;
};

/// The rationals, exact.
struct rational_field {
    using value_type = rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type inv(const value_type& x) const {
        if (x == 0) fail(error_kind::not_a_unit, "division by zero in Q");
        return 1 / x;
    }
    bool is_zero(const value_type& x) const { return x == 0; }
    value_type from_int(long long v) const { return v; }
    std::int64_t characteristic() const { return 0; }

    /// Exact: numerator and denominator of a reduced fraction must both be squares.
    std::optional<value_type> sqrt(const value_type& x) const {
        if (x < 0) return std::nullopt;
        auto n = exact_isqrt(boost::multiprecision::numerator(x));
        auto d = exact_isqrt(boost::multiprecision::denominator(x));
        if (!n || !d) return std::nullopt;
        return value_type(*n, *d);
    }

    std::string to_string(const value_type& x) const { return x.str(); }

    value_type parse(std::string_view s) const {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return value_type(detail::parse_bigint(s));
        bigint den = detail::parse_bigint(s.substr(slash + 1));
        if (den == 0) fail(error_kind::parse_error, "zero denominator");
        return value_type(detail::parse_bigint(s.substr(0, slash)), den);
    }

    std::string name() const { return "q"; }
    friend bool operator==(const rational_field&, const rational_field&) { return true; }
};

/// The prime field F_p, values kept in [0, p).
class prime_field {
public:
    using value_type = std::int64_t;

    explicit prime_field(std::int64_t p) : p_(p) {
        if (!is_prime(p) || p > (std::int64_t{1} << 31))
            fail(error_kind::invalid_argument, "fp:" + std::to_string(p) + " is not a supported prime");
    }

    std::int64_t order() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    value_type add(value_type x, value_type y) const { return (x + y) % p_; }
    value_type sub(value_type x, value_type y) const { return mod_floor(x - y, p_); }
    value_type mul(value_type x, value_type y) const { return mul_mod(x, y, p_); }
    value_type neg(value_type x) const { return x == 0 ? 0 : p_ - x; }
    value_type inv(value_type x) const {
        if (x == 0) fail(error_kind::not_a_unit, "division by zero in F_" + std::to_string(p_));
        return mod_floor(extended_gcd(x, p_).x, p_);
    }
    bool is_zero(value_type x) const { return x == 0; }
    value_type from_int(long long v) const { return mod_floor(v, p_); }
    std::int64_t characteristic() const { return p_; }
    std::optional<value_type> sqrt(value_type x) const { return sqrt_mod(x, p_); }
    std::string to_string(value_type x) const { return std::to_string(x); }

    value_type parse(std::string_view s) const {
        auto slash = s.find('/');
        auto reduce = [&](std::string_view t) {
            bigint v = detail::parse_bigint(t) % p_;
            return mod_floor(static_cast<std::int64_t>(v), p_);
        };
        if (slash == std::string_view::npos) return reduce(s);
        return mul(reduce(s.substr(0, slash)), inv(reduce(s.substr(slash + 1))));
    }

    std::string name() const { return "fp:" + std::to_string(p_); }
    friend bool operator==(const prime_field& a, const prime_field& b) { return a.p_ == b.p_; }

private:
    std::int64_t p_;
};

} // namespace rees
