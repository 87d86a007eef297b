#pragma once

/**
 * @file fibers.hpp
 * @brief Primes of Z[t]/(t^2+at+b) and of Z(I)_{a,b} lying over pZ.
 *
 * Primes of Z[t]/(f) over p correspond to irreducible factors of f over
 * F_p. Since Z(I)_{a,b} ⊆ Z[t]/(f) is integral, its primes over p are
 * contractions of those, so the family count never exceeds the quadratic
 * count, and equals 1 whenever the quadratic count is 1.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>

#include "rees/arith.hpp"
#include "rees/error.hpp"

namespace rees {

enum class splitting_type { two_distinct_roots, irreducible, double_root };

constexpr std::string_view to_string(splitting_type s) {
    switch (s) {
    case splitting_type::two_distinct_roots: return "two-distinct-roots";
    case splitting_type::irreducible: return "irreducible";
    case splitting_type::double_root: return "double-root";
    }
    return "?";
}

/// Number of primes of the family over p: exactly one, exactly two, or only the bound.
enum class family_count { one, two, at_most_two };

constexpr std::string_view to_string(family_count c) {
    switch (c) {
    case family_count::one: return "1";
    case family_count::two: return "2";
    case family_count::at_most_two: return "<=2";
    }
    return "?";
}

struct fiber_report {
    std::int64_t p = 0;
    std::int64_t discriminant = 0;  // a^2 - 4b
    splitting_type splitting = splitting_type::irreducible;
    int primes_over_quadratic = 1;
    family_count primes_over_family = family_count::one;
};

/// Splitting of t^2 + at + b over F_p.
inline splitting_type classify_mod_p(std::int64_t p, std::int64_t a, std::int64_t b) {
    if (p == 2) {
        // t^2 + at + b over F_2: roots among {0, 1}.
        int roots = 0;
        for (std::int64_t t = 0; t < 2; ++t)
            if (mod_floor(t * t + a * t + b, 2) == 0) ++roots;
        if (roots == 2) return splitting_type::two_distinct_roots;
        if (roots == 0) return splitting_type::irreducible;
        return splitting_type::double_root;  // t^2 or (t+1)^2
    }
    switch (legendre(mod_floor(a * a - 4 * b, p), p)) {
    case 1: return splitting_type::two_distinct_roots;
    case -1: return splitting_type::irreducible;
    default: return splitting_type::double_root;
    }
}

/// Two primes of the duplication over p when P does not contain I, one otherwise.
inline int duplication_fiber(std::int64_t p, std::span<const std::int64_t> ideal_gens) {
    if (!is_prime(p)) fail(error_kind::invalid_argument, std::to_string(p) + " is not prime");
    for (auto g : ideal_gens)
        if (g % p != 0) return 2;
    return 1;
}

/**
 * `duplication_ideal`, when given, applies the duplication rule; it requires
 * (a, b) = (-1, 0).
 */
inline fiber_report count_primes_over(std::int64_t p, std::int64_t a, std::int64_t b,
                                      std::optional<std::span<const std::int64_t>> duplication_ideal = {}) {
    if (!is_prime(p)) fail(error_kind::invalid_argument, std::to_string(p) + " is not prime");
    if (duplication_ideal && !(a == -1 && b == 0))
        fail(error_kind::context_error, "the duplication rule needs (a, b) = (-1, 0)");
    fiber_report rep;
    rep.p = p;
    rep.discriminant = a * a - 4 * b;
    rep.splitting = classify_mod_p(p, a, b);
    rep.primes_over_quadratic = rep.splitting == splitting_type::two_distinct_roots ? 2 : 1;
    if (rep.primes_over_quadratic == 1)
        rep.primes_over_family = family_count::one;
    else if (duplication_ideal)
        rep.primes_over_family = duplication_fiber(p, *duplication_ideal) == 1 ? family_count::one : family_count::two;
    else
        rep.primes_over_family = family_count::at_most_two;
    return rep;
}

/// Number of irreducible factors (with one for a repeated factor) of t^2+at+b over Q.
inline int factors_over_rationals(std::int64_t a, std::int64_t b) {
    const bigint disc = bigint(a) * a - 4 * bigint(b);
    if (disc == 0) return 1;
    return exact_isqrt(disc) ? 2 : 1;
}

} // namespace rees
