#pragma once

/**
 * @file verify.hpp
 * @brief The acceptance checks, runnable from the CLI and from ctest.
 *
 * Each check compares library results against an independent route:
 * exhaustive enumeration over finite rings, brute-force root counting over
 * F_p, literal products for the Hilbert function, or a second theorem.
 */

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rees/rees.hpp"

namespace rees::verify {

struct check_result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    std::optional<double> time_limit;  // seconds
};

namespace detail {

template <class R>
using elem = family_element<R>;

template <finite_base_ring R>
std::vector<elem<R>> all_elements(const context_ptr<R>& ctx) {
    std::vector<elem<R>> out;
    for (const auto& r : ctx->ring.elements())
        for (const auto& i : ctx->ideal.elements()) out.emplace_back(ctx, r, i);
    return out;
}

/// Unit oracle: search for y with xy = 1.
template <finite_base_ring R>
bool has_inverse(const elem<R>& x, const std::vector<elem<R>>& everything) {
    const auto one = elem<R>::one(x.context());
    for (const auto& y : everything)
        if (x * y == one) return true;
    return false;
}

/// Roots of t^2 + at + b in F_p by enumeration.
inline int count_roots(std::int64_t p, std::int64_t a, std::int64_t b) {
    int roots = 0;
    for (std::int64_t t = 0; t < p; ++t)
        if (mod_floor(t * t + a * t + b, p) == 0) ++roots;
    return roots;
}

struct tally {
    long long checked = 0;
    long long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures++ == 0) first_failure = what;
    }

    std::string summary() const {
        std::ostringstream os;
        os << checked << " checks, " << failures << " failures";
        if (failures) os << " (first: " << first_failure << ")";
        return os.str();
    }
};

template <finite_base_ring R>
void check_idealization_iso(const R& ring, std::int64_t ideal_gen, tally& t) {
    std::vector<typename R::value_type> g{ideal_gen};
    auto ctx = make_context(ring, ring.make_ideal(g), ring.zero(), ring.zero());
    auto xs = all_elements(ctx);
    std::set<std::pair<typename R::value_type, typename R::value_type>> image;
    for (const auto& x : xs) {
        auto ax = to_idealization(x);
        image.emplace(ax.r, ax.i);
        for (const auto& y : xs) {
            auto ay = to_idealization(y);
            t.expect(idealization_equal(ring, to_idealization(x * y), idealization_mul(ring, ax, ay)),
                     "alpha(xy) != alpha(x)alpha(y) at " + x.to_string() + ", " + y.to_string());
            t.expect(idealization_equal(ring, to_idealization(x + y), idealization_add(ring, ax, ay)),
                     "alpha(x+y) at " + x.to_string() + ", " + y.to_string());
        }
    }
    // R ⋉ I has |R||I| elements; the image must be all of them.
    std::size_t target = 0;
    for (const auto& r : ring.elements())
        for (const auto& i : ctx->ideal.elements()) {
            ++target;
            t.expect(image.count({r, i}) == 1, "alpha misses a target element");
        }
    t.expect(image.size() == xs.size() && image.size() == target, "alpha is not bijective");
}

template <finite_base_ring R>
void check_duplication_iso(const R& ring, std::int64_t ideal_gen, tally& t) {
    std::vector<typename R::value_type> g{ideal_gen};
    auto ctx = make_context(ring, ring.make_ideal(g), ring.from_int(-1), ring.zero());
    auto xs = all_elements(ctx);
    std::set<std::pair<typename R::value_type, typename R::value_type>> image;
    for (const auto& x : xs) {
        auto bx = to_duplication(x);
        t.expect(duplication_contains(*ctx, bx), "beta(x) outside R ⋈ I");
        image.emplace(bx.first, bx.second);
        for (const auto& y : xs) {
            auto by = to_duplication(y);
            t.expect(duplication_equal(ring, to_duplication(x * y), duplication_mul(ring, bx, by)),
                     "beta(xy) != beta(x)beta(y) at " + x.to_string() + ", " + y.to_string());
            t.expect(duplication_equal(ring, to_duplication(x + y), duplication_add(ring, bx, by)),
                     "beta(x+y) at " + x.to_string() + ", " + y.to_string());
        }
    }
    // R ⋈ I = {(r, s) in R x R : s - r in I}.
    std::size_t target = 0;
    for (const auto& r : ring.elements())
        for (const auto& s : ring.elements()) {
            if (!ctx->ideal.contains(ring.sub(s, r))) continue;
            ++target;
            t.expect(image.count({r, s}) == 1, "beta misses a target element");
        }
    t.expect(image.size() == xs.size() && image.size() == target, "beta is not bijective");
}

template <finite_base_ring R>
void check_comaximal(const R& ring, std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta,
                     std::int64_t ideal_gen, tally& t) {
    std::vector<typename R::value_type> g{ideal_gen};
    auto ctx = make_context(ring, ring.make_ideal(g), ring.from_int(a), ring.from_int(b));
    comaximal_map<R> phi(ctx, ring.from_int(alpha), ring.from_int(beta));
    auto xs = all_elements(ctx);
    std::set<std::pair<typename R::value_type, typename R::value_type>> image;
    for (const auto& x : xs) {
        auto px = phi(x);
        image.emplace(px.r(), px.i());
        for (const auto& y : xs) {
            t.expect(phi(x * y) == phi(x) * phi(y), "phi(xy) at " + x.to_string() + ", " + y.to_string());
            t.expect(phi(x + y) == phi(x) + phi(y), "phi(x+y) at " + x.to_string() + ", " + y.to_string());
        }
    }
    auto targets = all_elements(phi.target());
    for (const auto& z : targets) t.expect(image.count({z.r(), z.i()}) == 1, "phi misses " + z.to_string());
    t.expect(image.size() == xs.size() && image.size() == targets.size(), "phi is not bijective");
}

inline std::vector<int> random_generators(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(2, 4), value(2, 13);
    for (;;) {
        std::vector<int> gens(static_cast<std::size_t>(count(rng)));
        int g = 0;
        for (auto& x : gens) {
            x = value(rng);
            g = std::gcd(g, x);
        }
        if (g == 1) return gens;
    }
}

} // namespace detail

/// 1. The worked example: <2,3> ⋈^5 (3 + S) = <4,6,11>, symmetric, type 1.
inline check_result check_worked_example() {
    check_result res{1, "worked-example", false, "", 0, 1.0};
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    auto dup = duplication(s, e, 5);
    const auto& t = dup.semigroup;
    const std::vector<int> gaps{1, 2, 3, 5, 7, 9, 13};
    const std::vector<int> gens{4, 6, 11};
    const int type = cm_type_family(s, e);
    res.passed = t.generators() == gens && t.gaps() == gaps && t.frobenius() == 13 && t.is_symmetric() &&
                 type == 1 && is_gorenstein(s, e) && is_canonical(s, e);
    res.detail = "T = " + t.to_string() + ", gaps {" + rees::detail::join_ints(t.gaps()) +
                 "}, symmetric = " + (t.is_symmetric() ? "true" : "false") + ", type = " + std::to_string(type);
    return res;
}

/// 2. alpha and beta are bijective ring homomorphisms over Z/8, I=(2) and Z/9, I=(3).
inline check_result check_isomorphisms() {
    check_result res{2, "isomorphisms", false, "", 0, 5.0};
    detail::tally t;
    detail::check_idealization_iso(zmod_ring(8), 2, t);
    detail::check_duplication_iso(zmod_ring(8), 2, t);
    detail::check_idealization_iso(zmod_ring(9), 3, t);
    detail::check_duplication_iso(zmod_ring(9), 3, t);
    res.passed = t.failures == 0;
    res.detail = t.summary();
    return res;
}

/// 3. Comaximal roots: Z/7 with t^2 - 5t + 6 = (t-2)(t-3), and Z/35 with a proper I.
inline check_result check_comaximal() {
    check_result res{3, "comaximal", false, "", 0, std::nullopt};
    detail::tally t;
    detail::check_comaximal(zmod_ring(7), -5, 6, 2, 3, 7, t);  // I = (7) = (0)
    detail::check_comaximal(zmod_ring(7), -5, 6, 2, 3, 1, t);  // I = (1)
    detail::check_comaximal(zmod_ring(35), -5, 6, 2, 3, 5, t);
    detail::check_comaximal(zmod_ring(35), -5, 6, 2, 3, 7, t);
    // t^2 - 7t = t(t - 7) over Z/35: 7 is not a unit, so the map must be refused.
    {
        zmod_ring z35(35);
        std::vector<std::int64_t> g{5};
        auto ctx = make_context(z35, z35.make_ideal(g), z35.from_int(-7), z35.zero());
        bool refused = false;
        try {
            comaximal_map<zmod_ring>(ctx, 0, 7);
        } catch (const error& err) {
            refused = err.kind() == error_kind::not_comaximal;
        }
        t.expect(refused, "non-unit beta - alpha accepted");
        bool rejected = false;
        try {
            comaximal_map<zmod_ring>(ctx, 1, 7);
        } catch (const error& err) {
            rejected = err.kind() == error_kind::not_a_factorization;
        }
        t.expect(rejected, "wrong roots accepted");
    }
    res.passed = t.failures == 0;
    res.detail = t.summary();
    return res;
}

/// 4. H = 1,3,4,4,4 for every (a, b) over F_2 and F_5, equal to the value-set formula.
inline check_result check_hilbert() {
    check_result res{4, "hilbert", false, "", 0, 10.0};
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    const std::vector<int> expected{1, 3, 4, 4, 4};
    auto formula = hilbert_family(s, e, 4);
    detail::tally t;
    t.expect(formula.values == expected, "value-set formula differs");
    for (std::int64_t p : {2, 5}) {
        series_ring<prime_field> ring(prime_field(p), s, default_precision);
        const std::vector<std::pair<std::string, std::string>> ab{{"0", "0"}, {"-1", "0"}, {"0", "-X^5"}};
        for (const auto& [a, b] : ab) {
            auto ctx = make_context(ring, ring.make_ideal(e), ring.parse(a), ring.parse(b));
            auto rec = brute_force_hilbert(ctx, 4);
            t.expect(rec.values == expected && rec == formula,
                     "F_" + std::to_string(p) + " (a,b)=(" + a + "," + b + ") gave " +
                         rees::detail::join_ints(rec.values));
        }
    }
    res.passed = t.failures == 0;
    res.detail = t.summary() + ", H = " + rees::detail::join_ints(formula.values);
    return res;
}

/// 5. CM type formula vs. type of the numerical duplication, on random triples.
inline check_result check_type_cross(int triples = 40) {
    check_result res{5, "type-cross-theorem", false, "", 0, std::nullopt};
    std::mt19937_64 rng(20240611);
    detail::tally t;
    int canonical_hits = 0, count = 0;
    while (count < triples) {
        auto s = numerical_semigroup::from_generators(detail::random_generators(rng));
        if (s.is_whole()) continue;
        relative_ideal e = relative_ideal::maximal(s);
        if (count % 4 == 0) {
            e = canonical_ideal(s);
        } else {
            auto members = s.members_below(s.conductor() + 2 * s.multiplicity() + 1);
            members.erase(members.begin());  // drop 0
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            std::uniform_int_distribution<int> how_many(1, 3);
            std::vector<int> gens;
            for (int k = how_many(rng); k > 0; --k) gens.push_back(members[pick(rng)]);
            e = relative_ideal::from_generators(s, gens);
        }
        std::vector<int> odd;
        for (int x : s.members_below(s.conductor() + 2 * s.multiplicity() + 2))
            if (x % 2) odd.push_back(x);
        std::uniform_int_distribution<std::size_t> pick_m(0, odd.size() - 1);
        const int m = odd[pick_m(rng)];

        auto dup = duplication(s, e, m).semigroup;
        const int type = cm_type_family(s, e);
        const bool canonical = is_canonical(s, e);
        const std::string where = s.to_string() + " " + e.to_string() + " m=" + std::to_string(m);
        t.expect(type == dup.type(), "type mismatch at " + where);
        t.expect(canonical == dup.is_symmetric(), "canonical/symmetric mismatch at " + where);
        t.expect(canonical == (type == 1), "Gorenstein mismatch at " + where);
        canonical_hits += canonical;
        ++count;
    }
    res.passed = t.failures == 0 && count >= 25;
    res.detail = std::to_string(count) + " triples (" + std::to_string(canonical_hits) + " canonical), " + t.summary();
    return res;
}

/// 6. Over Z/8, I = (2), every (a, b): unit <=> delta unit <=> r unit, inverses verified.
inline check_result check_units() {
    check_result res{6, "units", false, "", 0, std::nullopt};
    zmod_ring ring(8);
    std::vector<std::int64_t> g{2};
    detail::tally t;
    for (std::int64_t a = 0; a < 8; ++a)
        for (std::int64_t b = 0; b < 8; ++b) {
            auto ctx = make_context(ring, ring.make_ideal(g), a, b);
            auto xs = detail::all_elements(ctx);
            const auto one = family_element<zmod_ring>::one(ctx);
            for (const auto& x : xs) {
                const bool oracle = detail::has_inverse(x, xs);
                const bool delta_unit = ring.is_unit(determinant(x));
                const bool r_unit = ring.is_unit(x.r());
                const std::string where = x.to_string() + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
                t.expect(oracle == delta_unit && delta_unit == r_unit && is_unit(x) == oracle, "unit mismatch at " + where);
                if (oracle) {
                    auto y = invert(x);
                    t.expect(x * y == one && y * x == one, "bad inverse at " + where);
                }
            }
        }
    res.passed = t.failures == 0;
    res.detail = t.summary();
    return res;
}

/// 7. mul((s, j), (ja - s, j)) = (u, 0) with u = s(ja - s) - j^2 b.
inline check_result check_rationalize(int samples = 1000) {
    check_result res{7, "rationalize", false, "", 0, std::nullopt};
    std::mt19937_64 rng(77);
    detail::tally t;
    {
        zmod_ring ring(9);
        std::uniform_int_distribution<std::int64_t> d(0, 8);
        std::vector<std::int64_t> g1{1};
        auto ideal = ring.make_ideal(g1);
        for (int k = 0; k < samples; ++k) {
            const auto s = d(rng), j = d(rng), a = d(rng), b = d(rng);
            auto ctx = make_context(ring, ideal, a, b);
            family_element<zmod_ring> den(ctx, s, j);
            auto [mult, u] = make_rationalizer(den);
            const auto expected_u = ring.sub(ring.mul(s, ring.sub(ring.mul(j, a), s)), ring.mul(ring.mul(j, j), b));
            t.expect(u == expected_u && den * mult == family_element<zmod_ring>::scalar(ctx, u),
                     "Z/9 identity fails at " + den.to_string());
        }
    }
    {
        auto sg = numerical_semigroup::from_generators({2, 3});
        series_ring<prime_field> ring(prime_field(5), sg, default_precision);
        auto ideal = ring.make_ideal(relative_ideal::from_generators(sg, {3}));
        std::uniform_int_distribution<int> coeff(0, 4), terms(0, 6), expo(0, default_precision - 1);
        auto random_series = [&](const relative_ideal* support) {
            std::map<int, std::int64_t> m;
            for (int n = terms(rng); n > 0; --n) {
                int e = expo(rng);
                if (support ? support->contains(e) : sg.contains(e)) m[e] = coeff(rng);
            }
            return truncated_series<prime_field>::from_terms(ring.field(), m, default_precision);
        };
        const auto& values = ideal.values();
        for (int k = 0; k < samples; ++k) {
            auto a = random_series(nullptr), b = random_series(nullptr);
            auto ctx = make_context(ring, ideal, a, b);
            family_element<series_ring<prime_field>> den(ctx, random_series(nullptr), random_series(&values));
            auto [mult, u] = make_rationalizer(den);
            const auto& s = den.r();
            const auto& j = den.i();
            auto expected_u = ring.sub(ring.mul(s, ring.sub(ring.mul(j, a), s)), ring.mul(ring.mul(j, j), b));
            auto prod = den * mult;
            t.expect(ring.equal(u, expected_u) && ring.equal(prod.r(), u) && prod.i().is_zero() &&
                         prod.r().precision() == default_precision,
                     "F_5 series identity fails at " + den.to_string());
        }
    }
    res.passed = t.failures == 0;
    res.detail = t.summary();
    return res;
}

/// 8. Splitting of t^2 + 1 mod p for all p < 1000 against root counting.
inline check_result check_fibers() {
    check_result res{8, "fibers", false, "", 0, 5.0};
    detail::tally t;
    int primes = 0;
    for (std::int64_t p = 2; p < 1000; ++p) {
        if (!is_prime(p)) continue;
        ++primes;
        auto rep = count_primes_over(p, 0, 1);
        const int roots = detail::count_roots(p, 0, 1);
        const splitting_type expected = roots == 2   ? splitting_type::two_distinct_roots
                                        : roots == 1 ? splitting_type::double_root
                                                     : splitting_type::irreducible;
        t.expect(rep.splitting == expected && rep.primes_over_quadratic == (roots == 2 ? 2 : 1),
                 "p = " + std::to_string(p));
        t.expect(rep.primes_over_quadratic != 1 || rep.primes_over_family == family_count::one,
                 "family count at p = " + std::to_string(p));
    }
    t.expect(count_primes_over(5, 0, 1).primes_over_quadratic == 2, "p = 5 should give 2");
    auto three = count_primes_over(3, 0, 1);
    t.expect(three.primes_over_quadratic == 1 && three.primes_over_family == family_count::one, "p = 3 should give 1");
    res.passed = t.failures == 0;
    res.detail = std::to_string(primes) + " primes, " + t.summary();
    return res;
}

/// 9. Phi is multiplicative and v'(Phi(x)) lies in <4,6,11>.
inline check_result check_phi(int samples = 500) {
    check_result res{9, "phi-homomorphism", false, "", 0, std::nullopt};
    using ring_t = series_ring<prime_field>;
    auto sg = numerical_semigroup::from_generators({2, 3});
    ring_t ring(prime_field(5), sg, default_precision);
    auto e = relative_ideal::from_generators(sg, {3});
    auto ctx = make_context(ring, ring.make_ideal(e), ring.zero(), ring.parse("-X^5"));
    const auto t_sgp = numerical_semigroup::from_generators({4, 6, 11});
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coeff(0, 4), terms(0, 5), expo(0, 40);
    auto random_series = [&](const auto& contains) {
        std::map<int, std::int64_t> m;
        for (int n = terms(rng); n > 0; --n) {
            int x = expo(rng);
            if (contains(x)) m[x] = coeff(rng);
        }
        return truncated_series<prime_field>::from_terms(ring.field(), m, default_precision);
    };
    auto random_element = [&] {
        return family_element<ring_t>(ctx, random_series([&](int x) { return sg.contains(x); }),
                                      random_series([&](int x) { return e.contains(x); }));
    };
    detail::tally t;
    for (int k = 0; k < samples; ++k) {
        auto x = random_element(), y = random_element();
        auto px = phi_map(x, 5), py = phi_map(y, 5), pxy = phi_map(x * y, 5);
        auto prod = px * py;
        t.expect(pxy.ambient() == t_sgp, "image semigroup is not <4,6,11>");
        t.expect(pxy.series().precision() >= default_precision && prod.series().precision() >= default_precision &&
                     pxy.series().truncated(default_precision) == prod.series().truncated(default_precision),
                 "Phi(xy) != Phi(x)Phi(y) at " + x.to_string() + ", " + y.to_string());
        t.expect(phi_map(x + y, 5) == px + py, "Phi not additive");
        if (!(x.r().is_zero() && x.i().is_zero())) {
            auto v = px.series().valuation();
            int expected = std::min(x.r().is_zero() ? 1 << 20 : 2 * x.r().order(),
                                    x.i().is_zero() ? 1 << 20 : 2 * x.i().order() + 5);
            t.expect(v && t_sgp.contains(*v) && *v == expected, "bad valuation for " + x.to_string());
        }
    }
    res.passed = t.failures == 0;
    res.detail = t.summary();
    return res;
}

/// 10. t^2 - X^5 irreducible; t^2 - X^4(1+X) splits over Q with a verified root.
inline check_result check_irreducibility() {
    check_result res{10, "irreducibility", false, "", 0, std::nullopt};
    rational_field q;
    auto b1 = parse_series(q, "X^5", default_precision);
    auto b2 = parse_series(q, "X^4+X^5", default_precision);
    auto root = series_sqrt(b2);
    bool witness_ok = root && ((*root) * (*root)).precision() >= b2.precision() && (*root) * (*root) == b2;
    res.passed = irreducible_t2_minus_b(b1) && irreducible_t2_minus_b(parse_series(prime_field(5), "X^5", 64)) &&
                 !irreducible_t2_minus_b(b2) && witness_ok;
    res.detail = std::string("X^5: ") + (irreducible_t2_minus_b(b1) ? "irreducible" : "reducible") +
                 "; X^4(1+X): " + (witness_ok ? "reducible, w^2 = b to precision " + std::to_string(b2.precision())
                                              : "no verified root");
    return res;
}

struct suite_entry {
    int id;
    std::string name;
    std::function<check_result()> run;
};

inline std::vector<suite_entry> all_checks() {
    return {
        {1, "worked-example", [] { return check_worked_example(); }},
        {2, "isomorphisms", [] { return check_isomorphisms(); }},
        {3, "comaximal", [] { return check_comaximal(); }},
        {4, "hilbert", [] { return check_hilbert(); }},
        {5, "type-cross-theorem", [] { return check_type_cross(); }},
        {6, "units", [] { return check_units(); }},
        {7, "rationalize", [] { return check_rationalize(); }},
        {8, "fibers", [] { return check_fibers(); }},
        {9, "phi-homomorphism", [] { return check_phi(); }},
        {10, "irreducibility", [] { return check_irreducibility(); }},
    };
}

/// Runs a check, timing it; exceeding the time limit fails the check.
inline check_result run_timed(const suite_entry& entry) {
    const auto start = std::chrono::steady_clock::now();
    check_result res;
    try {
        res = entry.run();
    } catch (const std::exception& ex) {
        res = {entry.id, entry.name, false, std::string("exception: ") + ex.what(), 0, std::nullopt};
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.time_limit && res.seconds > *res.time_limit) {
        res.passed = false;
        res.detail += " [over time limit]";
    }
    return res;
}

/// `suite` is "all", a check number, or a check name.
inline std::vector<check_result> run_suite(const std::string& suite) {
    std::vector<check_result> out;
    bool matched = false;
    for (const auto& entry : all_checks()) {
        if (suite == "all" || suite == entry.name || suite == std::to_string(entry.id)) {
            matched = true;
            out.push_back(run_timed(entry));
        }
    }
    if (!matched) fail(error_kind::invalid_argument, "unknown suite '" + suite + "'");
    return out;
}

} // namespace rees::verify
