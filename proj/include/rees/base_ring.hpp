#pragma once

/**
 * @file base_ring.hpp
 * @brief Exact base rings R for the family R(I)_{a,b}: Z, Z/n and k[[S]].
 *
 * A base ring is a value object that performs arithmetic on its
 * `value_type` and knows how to build ideals. Ideals are finitely
 * generated; each ring decides membership exactly:
 *   - Z: I = (g) with g the gcd of the generators,
 *   - Z/n: I = (g) with g = gcd(generators, n),
 *   - k[[S]]: monomial ideals, membership is "support inside v(I)".
 */

#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rees/arith.hpp"
#include "rees/error.hpp"
#include "rees/semigroup.hpp"
#include "rees/series.hpp"

namespace rees {

template <class R>
concept base_ring = requires(const R& ring, const typename R::value_type& x, const typename R::value_type& y,
                             const typename R::ideal_type& ideal, std::string_view text) {
    { ring.zero() } -> std::same_as<typename R::value_type>;
    { ring.one() } -> std::same_as<typename R::value_type>;
    { ring.from_int(0LL) } -> std::same_as<typename R::value_type>;
    { ring.add(x, y) } -> std::same_as<typename R::value_type>;
    { ring.sub(x, y) } -> std::same_as<typename R::value_type>;
    { ring.mul(x, y) } -> std::same_as<typename R::value_type>;
    { ring.neg(x) } -> std::same_as<typename R::value_type>;
    { ring.equal(x, y) } -> std::convertible_to<bool>;
    { ring.is_unit(x) } -> std::convertible_to<bool>;
    { ring.invert(x) } -> std::same_as<typename R::value_type>;
    { ring.is_zero_divisor(x) } -> std::convertible_to<bool>;
    { ring.is_local() } -> std::convertible_to<bool>;
    { ring.is_finite() } -> std::convertible_to<bool>;
    { ring.contains(x) } -> std::convertible_to<bool>;
    { ring.prefers_negation(x) } -> std::convertible_to<bool>;
    { ring.to_string(x) } -> std::convertible_to<std::string>;
    { ring.parse(text) } -> std::same_as<typename R::value_type>;
    { ring.name() } -> std::convertible_to<std::string>;
    { ideal.contains(x) } -> std::convertible_to<bool>;
    { ideal.to_string() } -> std::convertible_to<std::string>;
};

/// Rings whose elements can be listed exhaustively.
template <class R>
concept finite_base_ring = base_ring<R> && requires(const R& ring, const typename R::ideal_type& ideal) {
    { ring.elements() } -> std::same_as<std::vector<typename R::value_type>>;
    { ideal.elements() } -> std::same_as<std::vector<typename R::value_type>>;
};

// ---------------------------------------------------------------------------
// Z

class integer_ring {
public:
    using value_type = bigint;

    /// I = (g), g >= 0; g = 0 is the zero ideal.
    class ideal_type {
    public:
        explicit ideal_type(bigint g) : g_(g < 0 ? bigint(-g) : g) {}
        const bigint& generator() const { return g_; }
        bool contains(const bigint& x) const { return g_ == 0 ? x == 0 : x % g_ == 0; }
        std::string to_string() const { return "(" + g_.str() + ")"; }
        friend bool operator==(const ideal_type&, const ideal_type&) = default;

    private:
        bigint g_;
    };

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    bool equal(const value_type& x, const value_type& y) const { return x == y; }
    bool is_unit(const value_type& x) const { return x == 1 || x == -1; }
    value_type invert(const value_type& x) const {
        if (!is_unit(x)) fail(error_kind::not_a_unit, x.str() + " is not a unit of Z");
        return x;
    }
    bool is_zero_divisor(const value_type& x) const { return x == 0; }
    bool is_local() const { return false; }
    bool is_finite() const { return false; }
    bool contains(const value_type&) const { return true; }
    bool prefers_negation(const value_type& x) const { return x < 0; }
    std::string to_string(const value_type& x) const { return x.str(); }
    value_type parse(std::string_view s) const { return detail::parse_bigint(std::string(detail::trim(s))); }
    std::string name() const { return "int"; }

    ideal_type make_ideal(std::span<const value_type> gens) const {
        bigint g = 0;
        for (const auto& x : gens) g = boost::multiprecision::gcd(g, x);
        return ideal_type(g);
    }

    friend bool operator==(const integer_ring&, const integer_ring&) { return true; }
};

// ---------------------------------------------------------------------------
// Z/n

/// Moduli above this are rejected: zero-divisor and unit questions are
/// answered exhaustively in the verification suites.
inline constexpr std::int64_t max_modulus = std::int64_t{1} << 16;

class zmod_ring {
public:
    using value_type = std::int64_t;

    /// I = (g) with g a divisor of n; g = n is the zero ideal.
    class ideal_type {
    public:
        ideal_type(std::int64_t g, std::int64_t n) : g_(g), n_(n) {}
        std::int64_t generator() const { return g_ % n_; }
        std::int64_t divisor() const { return g_; }
        bool contains(std::int64_t x) const { return x % g_ == 0; }
        std::vector<std::int64_t> elements() const {
            std::vector<std::int64_t> out;
            for (std::int64_t x = 0; x < n_; x += g_) out.push_back(x);
            return out;
        }
        std::string to_string() const { return "(" + std::to_string(generator()) + ")"; }
        friend bool operator==(const ideal_type&, const ideal_type&) = default;

    private:
        std::int64_t g_, n_;
    };

    explicit zmod_ring(std::int64_t n) : n_(n) {
        if (n < 2 || n > max_modulus)
            fail(error_kind::invalid_argument, "modulus must be in [2, 65536], got " + std::to_string(n));
    }

    std::int64_t modulus() const { return n_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return mod_floor(v, n_); }
    value_type add(value_type x, value_type y) const { return (x + y) % n_; }
    value_type sub(value_type x, value_type y) const { return mod_floor(x - y, n_); }
    value_type mul(value_type x, value_type y) const { return (x * y) % n_; }
    value_type neg(value_type x) const { return x == 0 ? 0 : n_ - x; }
    bool equal(value_type x, value_type y) const { return x == y; }
    bool is_unit(value_type x) const { return std::gcd(x, n_) == 1; }
    value_type invert(value_type x) const {
        auto e = extended_gcd(x, n_);
        if (e.g != 1) fail(error_kind::not_a_unit, std::to_string(x) + " is not a unit mod " + std::to_string(n_));
        return mod_floor(e.x, n_);
    }
    /// x*y = 0 for some y != 0 exactly when gcd(x, n) > 1 (0 included).
    bool is_zero_divisor(value_type x) const { return std::gcd(x, n_) != 1; }
    bool is_local() const { return is_prime_power(n_); }
    bool is_finite() const { return true; }
    bool contains(value_type x) const { return x >= 0 && x < n_; }
    bool prefers_negation(value_type x) const { return neg(x) == one(); }
    std::string to_string(value_type x) const { return std::to_string(x); }
    value_type parse(std::string_view s) const {
        bigint v = detail::parse_bigint(std::string(detail::trim(s))) % n_;
        return mod_floor(static_cast<std::int64_t>(v), n_);
    }
    std::string name() const { return "zmod:" + std::to_string(n_); }

    std::vector<value_type> elements() const {
        std::vector<value_type> out(static_cast<std::size_t>(n_));
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    ideal_type make_ideal(std::span<const value_type> gens) const {
        std::int64_t g = n_;
        for (auto x : gens) g = std::gcd(g, mod_floor(x, n_));
        return ideal_type(g, n_);
    }

    friend bool operator==(const zmod_ring& a, const zmod_ring& b) { return a.n_ == b.n_; }

private:
    std::int64_t n_;
};

// ---------------------------------------------------------------------------
// k[[S]]

/**
 * The numerical semigroup ring k[[S]] = k[[X^n1, ..., X^nv]], realized as
 * truncated series whose support lies in S.
 */
template <coefficient_field F>
class series_ring {
public:
    using value_type = truncated_series<F>;
    using coeff_type = typename F::value_type;

    /// Monomial ideal with value set E; f is a member iff supp(f) is inside E.
    class ideal_type {
    public:
        explicit ideal_type(relative_ideal values) : values_(std::move(values)) {}
        const relative_ideal& values() const { return values_; }
        bool contains(const value_type& f) const {
            auto supp = f.support();
            return std::all_of(supp.begin(), supp.end(), [&](int e) { return values_.contains(e); });
        }
        std::string to_string() const { return values_.to_string(); }
        friend bool operator==(const ideal_type&, const ideal_type&) = default;

    private:
        relative_ideal values_;
    };

    series_ring(F field, numerical_semigroup s, int precision = default_precision)
        : field_(std::move(field)), s_(std::move(s)), precision_(precision) {
        if (precision <= 0) fail(error_kind::invalid_argument, "precision must be positive");
    }

    const F& field() const { return field_; }
    const numerical_semigroup& semigroup() const { return s_; }
    int precision() const { return precision_; }

    value_type zero() const { return value_type(field_, precision_); }
    value_type one() const { return value_type::constant(field_, field_.one(), precision_); }
    value_type from_int(long long v) const { return value_type::constant(field_, field_.from_int(v), precision_); }
    value_type monomial(const coeff_type& c, int e) const {
        if (!s_.contains(e)) fail(error_kind::invalid_argument, "X^" + std::to_string(e) + " is not in k[[S]]");
        return value_type::monomial(field_, c, e, precision_);
    }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return (x * y).truncated(precision_); }
    value_type neg(const value_type& x) const { return -x; }
    bool equal(const value_type& x, const value_type& y) const { return x == y; }
    bool is_unit(const value_type& x) const { return x.order() == 0; }
    value_type invert(const value_type& x) const { return x.inverse(); }
    /// k[[S]] is a domain: only zero (to tracked precision) is a zero divisor.
    bool is_zero_divisor(const value_type& x) const { return x.is_zero(); }
    bool is_local() const { return true; }
    bool is_finite() const { return false; }
    bool contains(const value_type& x) const {
        auto supp = x.support();
        return std::all_of(supp.begin(), supp.end(), [&](int e) { return s_.contains(e); });
    }
    bool prefers_negation(const value_type& x) const { return equal(neg(x), one()); }
    std::string to_string(const value_type& x) const { return x.to_string(); }
    value_type parse(std::string_view s) const {
        auto v = parse_series(field_, s, precision_);
        if (!contains(v)) fail(error_kind::invalid_argument, "'" + std::string(s) + "' is not supported on " + s_.to_string());
        return v;
    }
    std::string name() const { return "series:" + field_.name() + ":" + s_.to_string(); }

    ideal_type make_ideal(const relative_ideal& values) const {
        if (!(values.ambient() == s_)) fail(error_kind::invalid_argument, "value set is not an ideal of S");
        if (!values.is_subset_of_ambient()) fail(error_kind::invalid_argument, "monomial ideal must lie in S");
        return ideal_type(values);
    }

    /// Ideal generated by monomials; non-monomial generators are rejected.
    ideal_type make_ideal(std::span<const value_type> gens) const {
        std::vector<int> exps;
        for (const auto& g : gens) {
            auto supp = g.support();
            if (supp.size() != 1) fail(error_kind::unsupported, "only monomial ideals are supported over k[[S]]");
            exps.push_back(supp.front());
        }
        return make_ideal(relative_ideal::from_generators(s_, exps));
    }

    friend bool operator==(const series_ring& a, const series_ring& b) {
        return a.field_ == b.field_ && a.s_ == b.s_ && a.precision_ == b.precision_;
    }

private:
    F field_;
    numerical_semigroup s_;
    int precision_;
};

} // namespace rees
