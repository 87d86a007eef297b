#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rees/semigroup.hpp"

using namespace rees;

namespace {

// Independent oracle: membership by a plain reachability sieve up to `bound`.
std::vector<bool> sieve(const std::vector<int>& gens, int bound) {
    std::vector<bool> in(bound + 1, false);
    in[0] = true;
    for (int n = 1; n <= bound; ++n)
        for (int g : gens)
            if (g <= n && in[n - g]) {
                in[n] = true;
                break;
            }
    return in;
}

std::vector<int> sieve_gaps(const std::vector<int>& gens, int bound) {
    auto in = sieve(gens, bound);
    std::vector<int> out;
    for (int n = 0; n <= bound; ++n)
        if (!in[n]) out.push_back(n);
    return out;
}

// Window membership of an ideal as a plain set, for comparing against naive constructions.
std::set<int> window(const relative_ideal& e, int lo, int hi) {
    std::set<int> out;
    for (int z = lo; z < hi; ++z)
        if (e.contains(z)) out.insert(z);
    return out;
}

std::vector<int> random_gens(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(2, 4), value(2, 13);
    while (true) {
        std::vector<int> g;
        int k = count(rng);
        for (int i = 0; i < k; ++i) g.push_back(value(rng));
        int d = 0;
        for (int x : g) d = std::gcd(d, x);
        if (d == 1) return g;
    }
}

} // namespace

TEST(Semigroup, WholeMonoid) {
    auto n = numerical_semigroup::from_generators({1});
    EXPECT_TRUE(n.is_whole());
    EXPECT_EQ(n.frobenius(), -1);
    EXPECT_TRUE(n.gaps().empty());
    EXPECT_EQ(n.type(), 1);
    EXPECT_EQ(n.pseudo_frobenius(), std::vector<int>{-1});
    EXPECT_EQ(n.generators(), std::vector<int>{1});
    EXPECT_EQ(n.apery_set(1), std::vector<int>{0});
    EXPECT_EQ(numerical_semigroup{}, n);
}

TEST(Semigroup, TwoThree) {
    auto s = numerical_semigroup::from_generators({2, 3});
    EXPECT_EQ(s.gaps(), std::vector<int>{1});
    EXPECT_EQ(s.frobenius(), 1);
    EXPECT_EQ(s.genus(), 1);
    EXPECT_FALSE(s.contains(1));
    EXPECT_TRUE(s.contains(0));
    EXPECT_FALSE(s.contains(-3));
    EXPECT_EQ(s.apery_set(2), (std::vector<int>{0, 3}));
}

TEST(Semigroup, FourSixEleven) {
    auto s = numerical_semigroup::from_generators({4, 6, 11});
    EXPECT_EQ(s.gaps(), sieve_gaps({4, 6, 11}, 30));
    EXPECT_EQ(s.gaps(), (std::vector<int>{1, 2, 3, 5, 7, 9, 13}));
    EXPECT_EQ(s.frobenius(), 13);
    EXPECT_FALSE(s.contains(13));
    EXPECT_EQ(s.apery_set(4), (std::vector<int>{0, 6, 11, 17}));
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_EQ(s.type(), 1);
    EXPECT_EQ(s.to_string(), "<4,6,11>");
}

TEST(Semigroup, ThreeFourFiveHasTypeTwo) {
    auto s = numerical_semigroup::from_generators({3, 4, 5});
    EXPECT_EQ(s.type(), 2);
    EXPECT_EQ(s.pseudo_frobenius(), (std::vector<int>{1, 2}));
    EXPECT_FALSE(s.is_symmetric());
}

TEST(Semigroup, RedundantGeneratorsAreDropped) {
    auto s = numerical_semigroup::from_generators({6, 4, 10, 11, 8});
    EXPECT_EQ(s.generators(), (std::vector<int>{4, 6, 11}));
}

TEST(Semigroup, Errors) {
    EXPECT_THROW(numerical_semigroup::from_generators({2, 4}), error);
    EXPECT_THROW(numerical_semigroup::from_generators(std::initializer_list<int>{}), error);
    EXPECT_THROW(numerical_semigroup::from_generators({0, -3}), error);
    try {
        numerical_semigroup::from_generators({4, 6});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::not_numerical);
    }
    auto s = numerical_semigroup::from_generators({2, 3});
    EXPECT_THROW(s.apery_set(1), error);
}

TEST(Semigroup, ParseRoundTrip) {
    for (const char* lit : {"<2,3>", "<4,6,11>", "<1>", "<3,4,5>"}) {
        auto s = parse_semigroup(lit);
        EXPECT_EQ(s.to_string(), lit);
        EXPECT_EQ(parse_semigroup(s.to_string()), s);
    }
    EXPECT_EQ(parse_semigroup(" < 3 , 2 > ").to_string(), "<2,3>");
    EXPECT_THROW(parse_semigroup("<2,x>"), error);
    EXPECT_EQ(parse_semigroup("2,3").to_string(), "<2,3>");
    EXPECT_THROW(parse_semigroup("<2,3"), error);
}

TEST(Ideal, Examples) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    EXPECT_EQ(window(e, -5, 20), (std::set<int>{3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19}));
    EXPECT_EQ(relative_ideal::from_generators(s, {0}), relative_ideal::whole(s));
    auto m = relative_ideal::from_generators(s, {2, 3});
    EXPECT_EQ(m, relative_ideal::maximal(s));
    EXPECT_EQ(window(m, -5, 10), (std::set<int>{2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(m.minimal_generators(), (std::vector<int>{2, 3}));
    EXPECT_TRUE(e.is_proper());
    EXPECT_FALSE(relative_ideal::whole(s).is_proper());
}

TEST(Ideal, Difference) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    auto m = relative_ideal::maximal(s);
    // 2 is not in E - M because 2 + 2 = 4 is not in E.
    auto d = ideal_difference(e, m);
    EXPECT_EQ(d.floor(), 3);
    EXPECT_EQ(window(d, -5, 12), (std::set<int>{3, 4, 5, 6, 7, 8, 9, 10, 11}));
    auto mm = ideal_difference(m, m);
    EXPECT_EQ(window(mm, -5, 12), window(relative_ideal::from_predicate(s, 0, 1, [](long long) { return true; }), -5, 12));
    EXPECT_EQ(mm.floor(), 0);
    EXPECT_TRUE(mm.contains(1));
    auto whole = relative_ideal::whole(s);
    EXPECT_EQ(ideal_difference(whole, whole), whole);
}

TEST(Ideal, ParseRoundTrip) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = parse_ideal("ideal(3;2,3)");
    EXPECT_EQ(e.ambient(), s);
    EXPECT_EQ(e, relative_ideal::from_generators(s, {3}));
    EXPECT_EQ(parse_ideal(e.to_string()), e);
    EXPECT_EQ(parse_ideal("3, 5", &s), e);
    EXPECT_THROW(parse_ideal("3"), error);
    EXPECT_THROW(parse_ideal("ideal(3;2,4)"), error);
}

TEST(Duplication, Examples) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto d = duplication(s, relative_ideal::from_generators(s, {3}), 5);
    EXPECT_EQ(d.semigroup.to_string(), "<4,6,11>");
    EXPECT_TRUE(d.warnings.empty());

    numerical_semigroup n;
    auto dn = duplication(n, relative_ideal::whole(n), 1);
    EXPECT_TRUE(dn.semigroup.is_whole());
    EXPECT_FALSE(dn.warnings.empty());

    auto t = numerical_semigroup::from_generators({3, 4, 5});
    auto m = relative_ideal::maximal(t);
    auto dt = duplication(t, m, 3);
    // Oracle: 2*{0,3,4,5,...} u (2*{3,4,5,...} + 3) built directly.
    auto in = [&](int z) {
        if (z % 2 == 0) return t.contains(z / 2);
        return (z - 3) % 2 == 0 && m.contains((z - 3) / 2);
    };
    for (int z = 0; z < 60; ++z) EXPECT_EQ(dt.semigroup.contains(z), in(z)) << z;
}

TEST(Duplication, Errors) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    EXPECT_THROW(duplication(s, e, 4), error);  // even
    EXPECT_THROW(duplication(s, e, 1), error);  // not in S
    auto outside = ideal_difference(e, relative_ideal::maximal(s));
    EXPECT_NO_THROW(duplication(s, outside, 3));
    auto neg = relative_ideal::from_generators(s, {-1});
    EXPECT_THROW(duplication(s, neg, 3), error);
}

TEST(Canonical, Examples) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto k = standard_canonical_ideal(s);
    EXPECT_EQ(window(k, -3, 8), (std::set<int>{0, 2, 3, 4, 5, 6, 7}));
    auto kp = canonical_ideal(s);
    EXPECT_EQ(window(kp, -3, 9), (std::set<int>{2, 4, 5, 6, 7, 8}));

    auto t = numerical_semigroup::from_generators({3, 4, 5});
    EXPECT_EQ(window(standard_canonical_ideal(t), -3, 8), (std::set<int>{0, 1, 3, 4, 5, 6, 7}));

    auto sym = numerical_semigroup::from_generators({4, 6, 11});
    EXPECT_EQ(standard_canonical_ideal(sym), relative_ideal::whole(sym));

    EXPECT_THROW(canonical_ideal(numerical_semigroup{}), error);
}

TEST(FamilyType, Examples) {
    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    auto terms = cm_type_terms(s, e);
    EXPECT_EQ(terms.colon_term, 0);
    EXPECT_EQ(terms.socle_term, 1);
    EXPECT_EQ(cm_type_family(s, e), 1);
    EXPECT_TRUE(is_canonical(s, e));

    auto t = numerical_semigroup::from_generators({3, 4, 5});
    auto m = relative_ideal::maximal(t);
    for (int odd : {3, 5})
        EXPECT_EQ(cm_type_family(t, m), duplication(t, m, odd).semigroup.type());

    EXPECT_THROW(cm_type_family(s, relative_ideal::whole(s)), error);
}

// Property sweep over random semigroups against the sieve oracle.
TEST(SemigroupProperties, RandomAgainstSieve) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        auto gens = random_gens(rng);
        auto s = numerical_semigroup::from_generators(gens);
        const int bound = 200;
        auto in = sieve(gens, bound);
        for (int n = 0; n <= bound; ++n) ASSERT_EQ(s.contains(n), static_cast<bool>(in[n])) << s.to_string() << " " << n;
        auto gaps = sieve_gaps(gens, bound);
        EXPECT_EQ(s.gaps(), gaps);
        EXPECT_EQ(s.genus(), static_cast<int>(gaps.size()));
        EXPECT_EQ(s.frobenius(), gaps.empty() ? -1 : gaps.back());

        // Apery sets: size n, one per residue class, each the least member of its class.
        for (int n : s.generators()) {
            auto ap = s.apery_set(n);
            ASSERT_EQ(static_cast<int>(ap.size()), n);
            std::set<int> residues;
            for (int w : ap) {
                residues.insert(w % n);
                EXPECT_TRUE(in[w]);
                EXPECT_TRUE(w < n || !in[w - n]);
            }
            EXPECT_EQ(static_cast<int>(residues.size()), n);
        }

        // Pseudo-Frobenius numbers by definition.
        std::vector<int> pf;
        for (int x : gaps) {
            bool ok = true;
            for (int y = 1; y <= bound - x && ok; ++y)
                if (in[y] && !in[x + y]) ok = false;
            if (ok) pf.push_back(x);
        }
        if (!gaps.empty()) { EXPECT_EQ(s.pseudo_frobenius(), pf); }
        EXPECT_EQ(s.is_symmetric(), 2 * s.genus() == s.frobenius() + 1);
        EXPECT_EQ(s.is_symmetric(), s.type() == 1);
    }
}

TEST(IdealProperties, RandomAgainstNaive) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> shift(0, 9);
    for (int trial = 0; trial < 80; ++trial) {
        auto s = numerical_semigroup::from_generators(random_gens(rng));
        std::vector<int> ga{shift(rng), shift(rng)}, gb{shift(rng) + 1};
        auto a = relative_ideal::from_generators(s, ga);
        auto b = relative_ideal::from_generators(s, gb);
        auto naive_ideal = [&](const std::vector<int>& g, int z) {
            for (int x : g)
                if (s.contains(z - x)) return true;
            return false;
        };
        for (int z = -10; z < 60; ++z) {
            ASSERT_EQ(a.contains(z), naive_ideal(ga, z));
            // A + B by pairs of generators.
            bool in_sum = false;
            for (int x : ga)
                for (int y : gb) in_sum = in_sum || s.contains(z - x - y);
            EXPECT_EQ(ideal_sum(a, b).contains(z), in_sum) << z;
            EXPECT_EQ(ideal_intersection(a, b).contains(z), a.contains(z) && b.contains(z));
            // A - B = {z : z + B in A}, checked on many members of B.
            bool in_diff = true;
            for (int y = b.floor(); y < b.tail_start() + 1; ++y)
                if (b.contains(y) && !a.contains(z + y)) in_diff = false;
            EXPECT_EQ(ideal_difference(a, b).contains(z), in_diff) << z;
        }
        // (A - B) + B inside A; monotone in A.
        auto d = ideal_difference(a, b);
        EXPECT_TRUE(ideal_sum(d, b).is_subset_of(a));
        auto wider = relative_ideal::from_generators(s, {ga[0], ga[1], shift(rng)});
        EXPECT_TRUE(ideal_difference(a, b).is_subset_of(ideal_difference(wider, b)));
        EXPECT_EQ(ideal_power(a, 2), ideal_sum(a, a));
        EXPECT_EQ(ideal_power(a, 0), relative_ideal::whole(s));
        int naive_count = 0;
        for (int z = -10; z < b.tail_start() + a.tail_start() + 10; ++z) naive_count += a.contains(z) && !b.contains(z);
        EXPECT_EQ(count_difference(a, b), naive_count);
    }
}

TEST(DuplicationProperties, ParitySplitAndCrossTheorem) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> shift(1, 8);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto s = numerical_semigroup::from_generators(random_gens(rng));
        auto e = trial % 3 == 0 ? canonical_ideal(s) : relative_ideal::from_generators(s, {s.multiplicity() + shift(rng)});
        if (!e.is_proper()) continue;
        std::vector<int> odd;
        for (int x : s.members_below(40))
            if (x % 2 == 1) odd.push_back(x);
        if (odd.empty()) continue;
        int m = odd[trial % odd.size()];
        auto d = duplication(s, e, m);
        const auto& t = d.semigroup;
        for (int z = 0; z < 4 * (s.conductor() + e.tail_start() + m) + 10; ++z) {
            bool naive = z % 2 == 0 ? s.contains(z / 2) : e.contains((z - m) / 2) && z >= m;
            ASSERT_EQ(t.contains(z), naive) << t.to_string() << " " << z;
        }
        // Closed under addition on a window.
        for (int x = 0; x < 40; ++x)
            for (int y = 0; y < 40; ++y)
                if (t.contains(x) && t.contains(y)) { ASSERT_TRUE(t.contains(x + y)); }
        EXPECT_EQ(cm_type_family(s, e), t.type());
        EXPECT_EQ(is_canonical(s, e), t.is_symmetric());
        ++checked;
    }
    EXPECT_GE(checked, 25);
}
