#include <gtest/gtest.h>

#include <random>

#include "rees/family.hpp"
#include "rees/semigroup_ring.hpp"
#include "rees/series.hpp"

using namespace rees;

namespace {

using qseries = truncated_series<rational_field>;
using fseries = truncated_series<prime_field>;

qseries q(const char* text, int precision = default_precision) { return parse_series(rational_field{}, text, precision); }

// Oracle: schoolbook product of two coefficient maps, truncated at `precision`.
std::map<int, rational> naive_mul(const std::map<int, rational>& x, const std::map<int, rational>& y, int precision) {
    std::map<int, rational> out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            if (i + j < precision) out[i + j] += a * b;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

TEST(Series, Valuation) {
    EXPECT_EQ(q("X^2+X^5").valuation(), 2);
    auto zero = qseries(rational_field{}, 20);
    EXPECT_FALSE(zero.valuation().has_value());
    EXPECT_GE(zero.order(), 20);
    auto sq = q("X^2+X^3") * q("X^2+X^3");
    EXPECT_EQ(sq, q("X^4+2*X^5+X^6"));
    EXPECT_EQ(sq.valuation(), 4);
}

TEST(Series, PrecisionTracking) {
    auto x = q("X^2+X^3", 10);
    auto y = q("X+X^4", 12);
    auto p = x * y;
    // Known below min(10 + 1, 12 + 2).
    EXPECT_EQ(p.precision(), 11);
    EXPECT_EQ((x + y).precision(), 10);
    EXPECT_THROW(p.coeff(11), error);
    try {
        p.coeff(20);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::precision_exceeded);
    }
    EXPECT_EQ(q("1+X", 8).substitute_power(2).precision(), 16);
    EXPECT_EQ(q("1+X", 8).shifted(3), q("X^3+X^4", 11));
}

TEST(Series, ProductMatchesSchoolbook) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5), exp(0, 30), count(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::map<int, rational> a, b;
        for (int k = count(rng); k > 0; --k) a[exp(rng)] += rational(coef(rng), 1 + (trial % 3));
        for (int k = count(rng); k > 0; --k) b[exp(rng)] += coef(rng);
        auto x = qseries::from_terms(rational_field{}, a, 40);
        auto y = qseries::from_terms(rational_field{}, b, 40);
        auto p = x * y;
        auto want = naive_mul(x.terms(), y.terms(), p.precision());
        ASSERT_EQ(p.terms(), want);
        ASSERT_EQ(x * y, y * x);
    }
}

TEST(Series, InverseAndParse) {
    auto x = q("1+X");
    auto inv = x.inverse();
    EXPECT_EQ(inv.coeff(5), rational(-1));
    EXPECT_EQ(x * inv, qseries::constant(rational_field{}, 1, default_precision));
    EXPECT_THROW(q("X").inverse(), error);
    EXPECT_EQ(q("1/2*X - X^3").to_string(), "1/2*X-X^3");
    EXPECT_EQ(q(q("-1/2*X^2+3*X^7").to_string().c_str()), q("-1/2*X^2+3*X^7"));
    EXPECT_EQ(qseries(rational_field{}, 5).to_string(), "0");
    EXPECT_THROW(q("X^"), error);
    EXPECT_THROW(q("2*Y"), error);

    prime_field f5(5);
    auto s = parse_series(f5, "3*X+4*X^2", 10);
    EXPECT_EQ(s.coeff(1), 3);
    EXPECT_EQ((s + s).coeff(1), 1);
    EXPECT_EQ(parse_series(f5, "1/2", 4).coeff(0), 3);
}

TEST(SquareRoot, Witness) {
    auto b = q("X^4+X^5");
    auto w = series_sqrt(b);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->coeff(2), rational(1));
    EXPECT_EQ(w->coeff(3), rational(1, 2));
    EXPECT_EQ(w->coeff(4), rational(-1, 8));
    auto w2 = (*w) * (*w);
    EXPECT_GE(w2.precision(), b.precision());
    EXPECT_EQ(w2, b);
    EXPECT_FALSE(irreducible_t2_minus_b(b));
}

TEST(SquareRoot, Irreducible) {
    EXPECT_TRUE(irreducible_t2_minus_b(q("X^5")));
    EXPECT_TRUE(irreducible_t2_minus_b(q("2*X^2")));
    EXPECT_FALSE(irreducible_t2_minus_b(q("4/9*X^2")));
    prime_field f5(5), f7(7);
    // 2 is a non-square mod 5, 2 = 3^2 mod 7.
    EXPECT_TRUE(irreducible_t2_minus_b(parse_series(f5, "2*X^2+X^3", 30)));
    EXPECT_FALSE(irreducible_t2_minus_b(parse_series(f7, "2*X^2+X^3", 30)));
}

TEST(SquareRoot, RandomSquaresHaveRoots) {
    std::mt19937 rng(9);
    prime_field f(101);
    std::uniform_int_distribution<int> c(0, 100), v(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::map<int, std::int64_t> terms;
        int val = v(rng);
        terms[val] = 1 + c(rng) % 100;
        for (int k = 1; k < 6; ++k) terms[val + k] = c(rng);
        auto g = fseries::from_terms(f, terms, 48);
        auto b = g * g;
        auto w = series_sqrt(b);
        ASSERT_TRUE(w.has_value());
        ASSERT_EQ((*w) * (*w), b);
        ASSERT_GE(((*w) * (*w)).precision(), b.precision());
    }
}

TEST(SquareRoot, Errors) {
    prime_field f2(2);
    try {
        series_sqrt(parse_series(f2, "X^2", 10));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::unsupported);
    }
    try {
        series_sqrt(qseries(rational_field{}, 10));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::invalid_argument);
    }
}

namespace {

struct phi_fixture {
    numerical_semigroup s = numerical_semigroup::from_generators({2, 3});
    series_ring<prime_field> ring{prime_field(5), s, 64};
    context_ptr<series_ring<prime_field>> ctx =
        make_context(ring, ring.make_ideal(relative_ideal::from_generators(s, {3})), ring.zero(), ring.parse("-X^5"));
};

} // namespace

TEST(Phi, Examples) {
    phi_fixture fx;
    auto x = parse_element(fx.ctx, "(X^2)+(X^3)t");
    EXPECT_EQ(phi_map(x, 5).series(), parse_series(prime_field(5), "X^4+X^11", 128));
    EXPECT_EQ(phi_target(*fx.ctx, 5).to_string(), "<4,6,11>");
    EXPECT_EQ(phi_map(family_element<series_ring<prime_field>>::one(fx.ctx), 5).series(),
              parse_series(prime_field(5), "1", 128));
    auto y = parse_element(fx.ctx, "(X^3)t");
    EXPECT_EQ(y * y, parse_element(fx.ctx, "X^11"));
    EXPECT_EQ(phi_map(y * y, 5), phi_map(y, 5) * phi_map(y, 5));
    EXPECT_EQ(phi_map(y * y, 5).series(), parse_series(prime_field(5), "X^22", 128));
}

TEST(Phi, Errors) {
    phi_fixture fx;
    auto x = parse_element(fx.ctx, "(X^2)+(X^3)t");
    EXPECT_THROW(phi_map(x, 4), error);
    auto bad = make_context(fx.ring, fx.ctx->ideal, fx.ring.parse("X^2"), fx.ring.parse("-X^5"));
    try {
        phi_map(parse_element(bad, "X^2"), 5);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::context_error);
    }
}

TEST(Phi, HomomorphismAndValuations) {
    phi_fixture fx;
    auto t = phi_target(*fx.ctx, 5);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(0, 4);
    auto random_element = [&] {
        std::map<int, std::int64_t> r, i;
        for (int e = 0; e < 12; ++e)
            if (fx.s.contains(e)) r[e] = c(rng);
        for (int e = 3; e < 12; ++e)
            if (fx.ctx->ideal.values().contains(e)) i[e] = c(rng);
        return family_element<series_ring<prime_field>>(
            fx.ctx, fseries::from_terms(prime_field(5), r, 64), fseries::from_terms(prime_field(5), i, 64));
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_element(), y = random_element();
        ASSERT_EQ(phi_map(x * y, 5), phi_map(x, 5) * phi_map(y, 5));
        ASSERT_EQ(phi_map(x + y, 5), phi_map(x, 5) + phi_map(y, 5));
        auto img = phi_map(x, 5).series();
        if (auto v = img.valuation()) {
            ASSERT_TRUE(t.contains(*v));
            int vr = x.r().valuation().value_or(1 << 20), vi = x.i().valuation().value_or(1 << 20);
            ASSERT_EQ(*v, std::min(2 * vr, 2 * vi + 5));
        }
    }
}
