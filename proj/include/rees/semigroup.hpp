#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups, relative ideals and the numerical duplication.
 *
 * A numerical semigroup S is stored through its membership table below the
 * conductor; everything at or above the conductor is a member. A relative
 * ideal E of S is stored the same way relative to its floor: every integer
 * at or above floor(E) + conductor(S) belongs to E. All set operations are
 * therefore exact on a finite window.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rees/error.hpp"

namespace rees {

namespace detail {

inline std::string join_ints(std::span<const int> xs, char sep = ',') {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(xs[k]);
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(',', pos);
        auto tok = trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos));
        int v = 0;
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            fail(error_kind::parse_error, "expected an integer, got '" + std::string(tok) + "'");
        out.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

} // namespace detail

/// Largest conductor we are willing to sieve.
inline constexpr int max_conductor = 1 << 22;

class numerical_semigroup {
public:
    /// The whole monoid N = <1>.
    numerical_semigroup() : generators_{1} {}

    static numerical_semigroup from_generators(std::span<const int> gens) {
        if (gens.empty()) fail(error_kind::invalid_argument, "semigroup needs at least one generator");
        int g = 0;
        long long lo = gens[0];
        for (int x : gens) {
            if (x <= 0) fail(error_kind::invalid_argument, "semigroup generators must be positive");
            g = std::gcd(g, x);
            lo = std::min<long long>(lo, x);
        }
        if (g != 1)
            fail(error_kind::not_numerical,
                 "gcd of generators is " + std::to_string(g) + ", complement would be infinite");
        long long hi = *std::max_element(gens.begin(), gens.end());
        if ((lo - 1) * (hi - 1) > max_conductor)
            fail(error_kind::invalid_argument, "generators too large to sieve");

        // Sieve until min(gens) consecutive members appear; after that every
        // integer is a member.
        std::vector<char> member{1};
        int run = 1;
        int n = 0;
        while (run < lo) {
            ++n;
            char in = 0;
            for (int x : gens)
                if (x <= n && member[n - x]) { in = 1; break; }
            member.push_back(in);
            run = in ? run + 1 : 0;
        }
        int conductor = n - static_cast<int>(lo) + 1;
        member.resize(static_cast<std::size_t>(conductor));
        return numerical_semigroup(std::move(member));
    }

    static numerical_semigroup from_generators(std::initializer_list<int> gens) {
        return from_generators(std::span<const int>(gens.begin(), gens.size()));
    }

    /**
     * Builds a semigroup from a membership predicate that is trusted on
     * [0, bound) and assumed true from bound on. Closure under addition is
     * verified on the window.
     */
    template <class Pred>
    static numerical_semigroup from_membership(int bound, Pred&& is_member) {
        if (bound < 0 || bound > max_conductor) fail(error_kind::invalid_argument, "membership window out of range");
        std::vector<char> member(static_cast<std::size_t>(bound));
        for (int k = 0; k < bound; ++k) member[k] = is_member(k) ? 1 : 0;
        if (bound > 0 && !member[0]) fail(error_kind::invalid_argument, "0 must be a member");
        for (int x = 1; x < bound; ++x) {
            if (!member[x]) continue;
            for (int y = x; x + y < bound; ++y)
                if (member[y] && !member[x + y])
                    fail(error_kind::invalid_argument,
                         "set is not closed under addition: " + std::to_string(x) + "+" + std::to_string(y));
        }
        int conductor = bound;
        while (conductor > 0 && member[conductor - 1]) --conductor;
        member.resize(static_cast<std::size_t>(conductor));
        return numerical_semigroup(std::move(member));
    }

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n >= conductor()) return true;
        return member_[static_cast<std::size_t>(n)] != 0;
    }

    const std::vector<int>& generators() const { return generators_; }
    int embedding_dimension() const { return static_cast<int>(generators_.size()); }
    int conductor() const { return static_cast<int>(member_.size()); }
    int frobenius() const { return conductor() - 1; }
    const std::vector<int>& gaps() const { return gaps_; }
    int genus() const { return static_cast<int>(gaps_.size()); }
    /// Least positive member.
    int multiplicity() const { return generators_.front(); }
    bool is_whole() const { return member_.empty(); }

    /// Members strictly below `bound`, ascending.
    std::vector<int> members_below(int bound) const {
        std::vector<int> out;
        for (int k = 0; k < bound; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    /// The n smallest members in distinct residue classes mod n.
    std::vector<int> apery_set(int n) const {
        if (n <= 0 || !contains(n)) fail(error_kind::invalid_argument, "Apery set needs a positive member");
        std::vector<int> out(static_cast<std::size_t>(n), -1);
        int found = 0;
        for (int k = 0; found < n; ++k) {
            if (contains(k) && out[k % n] < 0) {
                out[k % n] = k;
                ++found;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// {x not in S : x + (S \ {0}) in S}; {-1} for N.
    std::vector<int> pseudo_frobenius() const {
        if (is_whole()) return {-1};
        std::vector<int> out;
        for (int g : gaps_) {
            bool ok = std::all_of(generators_.begin(), generators_.end(),
                                  [&](int n) { return contains(static_cast<long long>(g) + n); });
            if (ok) out.push_back(g);
        }
        return out;
    }

    int type() const { return static_cast<int>(pseudo_frobenius().size()); }

    bool is_symmetric() const {
        const int f = frobenius();
        return std::all_of(gaps_.begin(), gaps_.end(), [&](int g) { return contains(f - g); });
    }

    std::string to_string() const { return "<" + detail::join_ints(generators_) + ">"; }

    friend bool operator==(const numerical_semigroup& a, const numerical_semigroup& b) {
        return a.member_ == b.member_;
    }

private:
    explicit numerical_semigroup(std::vector<char> member) : member_(std::move(member)) {
        for (int k = 1; k < conductor(); ++k)
            if (!member_[k]) gaps_.push_back(k);
        // Minimal generators lie below conductor + multiplicity.
        int m = 1;
        while (!contains(m)) ++m;
        const int limit = std::max(conductor(), 1) + m;
        for (int x = 1; x < limit; ++x) {
            if (!contains(x)) continue;
            bool decomposable = false;
            for (int y = 1; y <= x / 2 && !decomposable; ++y)
                decomposable = contains(y) && contains(x - y);
            if (!decomposable) generators_.push_back(x);
        }
    }

    std::vector<char> member_;   // membership of 0 .. conductor-1
    std::vector<int> gaps_;
    std::vector<int> generators_;
};

/**
 * A relative ideal E of S: a set of integers, bounded below, with E + S in E.
 * Stored as floor(E) plus membership of floor .. floor + conductor(S) - 1.
 */
class relative_ideal {
public:
    static relative_ideal from_generators(const numerical_semigroup& s, std::span<const int> gens) {
        if (gens.empty()) fail(error_kind::invalid_argument, "ideal needs at least one generator");
        const int lo = *std::min_element(gens.begin(), gens.end());
        return from_predicate(s, lo, lo + s.conductor(), [&](long long z) {
            return std::any_of(gens.begin(), gens.end(), [&](int g) { return s.contains(z - g); });
        });
    }

    static relative_ideal from_generators(const numerical_semigroup& s, std::initializer_list<int> gens) {
        return from_generators(s, std::span<const int>(gens.begin(), gens.size()));
    }

    /// S itself, viewed as an ideal.
    static relative_ideal whole(const numerical_semigroup& s) { return from_generators(s, {0}); }

    /// M = S \ {0}.
    static relative_ideal maximal(const numerical_semigroup& s) {
        return from_generators(s, std::span<const int>(s.generators()));
    }

    /**
     * Builds an ideal from a predicate decided on [lo, hi); every integer
     * below lo is excluded and every integer from hi on is included.
     */
    template <class Pred>
    static relative_ideal from_predicate(const numerical_semigroup& s, long long lo, long long hi, Pred&& pred) {
        long long floor = lo;
        while (floor < hi && !pred(floor)) ++floor;
        const int c = s.conductor();
        std::vector<char> window(static_cast<std::size_t>(c));
        for (int k = 0; k < c; ++k) {
            long long z = floor + k;
            window[k] = (z >= hi || pred(z)) ? 1 : 0;
        }
        for (long long z = floor + c; z < hi; ++z)
            if (!pred(z))
                fail(error_kind::invalid_argument, "set is not a relative ideal: tail gap at " + std::to_string(z));
        return relative_ideal(s, static_cast<int>(floor), std::move(window));
    }

    const numerical_semigroup& ambient() const { return ambient_; }
    int floor() const { return floor_; }
    /// Every integer from here on is a member.
    int tail_start() const { return floor_ + ambient_.conductor(); }

    bool contains(long long z) const {
        if (z < floor_) return false;
        if (z >= tail_start()) return true;
        return window_[static_cast<std::size_t>(z - floor_)] != 0;
    }

    std::vector<int> elements_below(int bound) const {
        std::vector<int> out;
        for (int z = floor_; z < bound; ++z)
            if (contains(z)) out.push_back(z);
        return out;
    }

    /// Elements of E that are not in E + M.
    std::vector<int> minimal_generators() const {
        std::vector<int> out;
        const auto& gens = ambient_.generators();
        const int limit = tail_start() + ambient_.multiplicity();
        for (int z = floor_; z < limit; ++z) {
            if (!contains(z)) continue;
            bool reducible = std::any_of(gens.begin(), gens.end(), [&](int n) { return contains(z - n); });
            if (!reducible) out.push_back(z);
        }
        return out;
    }

    int num_generators() const { return static_cast<int>(minimal_generators().size()); }

    /// E + S in E, checked on the stored window.
    bool is_closed() const {
        for (int z = floor_; z < tail_start(); ++z) {
            if (!contains(z)) continue;
            for (int n : ambient_.generators())
                if (!contains(static_cast<long long>(z) + n)) return false;
        }
        return true;
    }

    bool is_subset_of_ambient() const {
        if (floor_ < 0) return false;
        for (int z = floor_; z < tail_start(); ++z)
            if (contains(z) && !ambient_.contains(z)) return false;
        return true;
    }

    /// A proper ideal of S: contained in S \ {0}.
    bool is_proper() const { return floor_ >= 1 && is_subset_of_ambient(); }

    bool is_subset_of(const relative_ideal& other) const {
        const int hi = std::max(tail_start(), other.tail_start());
        for (int z = floor_; z < hi; ++z)
            if (contains(z) && !other.contains(z)) return false;
        return true;
    }

    relative_ideal shifted(int k) const {
        return relative_ideal(ambient_, floor_ + k, window_);
    }

    /// "ideal(g1,g2;n1,n2,...)".
    std::string to_string() const {
        return "ideal(" + detail::join_ints(minimal_generators()) + ";" +
               detail::join_ints(ambient_.generators()) + ")";
    }

    friend bool operator==(const relative_ideal& a, const relative_ideal& b) {
        return a.ambient_ == b.ambient_ && a.floor_ == b.floor_ && a.window_ == b.window_;
    }

private:
    relative_ideal(numerical_semigroup s, int floor, std::vector<char> window)
        : ambient_(std::move(s)), floor_(floor), window_(std::move(window)) {}

    numerical_semigroup ambient_;
    int floor_;
    std::vector<char> window_;
};

namespace detail {
inline void require_same_ambient(const relative_ideal& a, const relative_ideal& b) {
    if (!(a.ambient() == b.ambient()))
        fail(error_kind::invalid_argument, "relative ideals over different semigroups");
}
} // namespace detail

/// A + B = {x + y}.
inline relative_ideal ideal_sum(const relative_ideal& a, const relative_ideal& b) {
    detail::require_same_ambient(a, b);
    const long long lo = static_cast<long long>(a.floor()) + b.floor();
    const long long hi = lo + a.ambient().conductor();
    return relative_ideal::from_predicate(a.ambient(), lo, hi, [&](long long z) {
        for (long long x = a.floor(); x <= z - b.floor(); ++x)
            if (a.contains(x) && b.contains(z - x)) return true;
        return false;
    });
}

/// n-fold sum E + ... + E; n = 0 gives S.
inline relative_ideal ideal_power(const relative_ideal& e, int n) {
    relative_ideal out = relative_ideal::whole(e.ambient());
    for (int k = 0; k < n; ++k) out = ideal_sum(out, e);
    return out;
}

inline relative_ideal ideal_intersection(const relative_ideal& a, const relative_ideal& b) {
    detail::require_same_ambient(a, b);
    return relative_ideal::from_predicate(a.ambient(), std::max(a.floor(), b.floor()),
                                          std::max(a.tail_start(), b.tail_start()),
                                          [&](long long z) { return a.contains(z) && b.contains(z); });
}

/// A - B = {z : z + B in A}.
inline relative_ideal ideal_difference(const relative_ideal& a, const relative_ideal& b) {
    detail::require_same_ambient(a, b);
    const auto gens = b.minimal_generators();
    const long long lo = static_cast<long long>(a.floor()) - b.floor();
    const long long hi = static_cast<long long>(a.tail_start()) - b.floor();
    return relative_ideal::from_predicate(a.ambient(), lo, hi, [&](long long z) {
        return std::all_of(gens.begin(), gens.end(), [&](int g) { return a.contains(z + g); });
    });
}

/// |A \ B|, finite because both sets are cofinite.
inline int count_difference(const relative_ideal& a, const relative_ideal& b) {
    const int lo = std::min(a.floor(), b.floor());
    const int hi = std::max(a.tail_start(), b.tail_start());
    int n = 0;
    for (int z = lo; z < hi; ++z)
        if (a.contains(z) && !b.contains(z)) ++n;
    return n;
}

struct duplication_result {
    numerical_semigroup semigroup;
    std::vector<int> doubled_semigroup;  // 2*S below the verified bound
    std::vector<int> shifted_ideal;      // 2*E + m below the verified bound
    int bound = 0;
    std::vector<std::string> warnings;
};

/// S ⋈^m E = 2*S ∪ (2*E + m), with minimal generators derived from scratch.
inline duplication_result duplication(const numerical_semigroup& s, const relative_ideal& e, int m) {
    if (m % 2 == 0) fail(error_kind::invalid_argument, "duplication: m must be odd");
    if (!s.contains(m)) fail(error_kind::invalid_argument, "duplication: m must be a member of S");
    if (!(e.ambient() == s)) fail(error_kind::invalid_argument, "duplication: E is not an ideal of S");
    if (!e.is_subset_of_ambient()) fail(error_kind::invalid_argument, "duplication: E must be contained in S");

    duplication_result out;
    if (e.floor() == 0) out.warnings.push_back("E contains 0, so E = S is not a proper ideal");

    const long long bound = std::max(2LL * s.conductor(), 2LL * e.tail_start() + m) + 1;
    if (bound > max_conductor) fail(error_kind::invalid_argument, "duplication window too large");
    auto is_member = [&](long long n) {
        if (n % 2 == 0) return s.contains(n / 2);
        return (n - m) % 2 == 0 && e.contains((n - m) / 2);
    };
    for (long long n = 0; n < bound; ++n) {
        if (n % 2 == 0 && s.contains(n / 2)) out.doubled_semigroup.push_back(static_cast<int>(n));
        if (n % 2 != 0 && is_member(n)) out.shifted_ideal.push_back(static_cast<int>(n));
    }
    out.bound = static_cast<int>(bound);
    out.semigroup = numerical_semigroup::from_membership(out.bound, is_member);
    return out;
}

/// The standard canonical ideal K = {z : F - z not in S}, floor 0.
inline relative_ideal standard_canonical_ideal(const numerical_semigroup& s) {
    if (s.is_whole())
        fail(error_kind::no_proper_canonical, "S = N: the ring is a DVR and any principal ideal is canonical");
    const int f = s.frobenius();
    return relative_ideal::from_predicate(s, 0, f + 1, [&](long long z) { return !s.contains(f - z); });
}

/// K shifted by the least k > 0 with k + K inside S, giving a proper ideal.
inline relative_ideal canonical_ideal(const numerical_semigroup& s) {
    const auto k = standard_canonical_ideal(s);
    for (int shift = 1;; ++shift) {
        auto candidate = k.shifted(shift);
        if (candidate.is_subset_of_ambient()) return candidate;
    }
}

struct family_type_terms {
    int colon_term;   // |((E-E) ∩ (S-M)) \ S|
    int socle_term;   // |(E-M) \ E|
    int total() const { return colon_term + socle_term; }
};

/// Both summands of the CM type of R(I)_{a,b} for a monomial ideal with value set E.
inline family_type_terms cm_type_terms(const numerical_semigroup& s, const relative_ideal& e) {
    if (!(e.ambient() == s)) fail(error_kind::invalid_argument, "E is not an ideal of S");
    if (!e.is_proper()) fail(error_kind::invalid_argument, "E must be a proper ideal of S");
    const auto whole = relative_ideal::whole(s);
    const auto max = relative_ideal::maximal(s);
    const auto first = ideal_intersection(ideal_difference(e, e), ideal_difference(whole, max));
    return {count_difference(first, whole), count_difference(ideal_difference(e, max), e)};
}

inline int cm_type_family(const numerical_semigroup& s, const relative_ideal& e) {
    return cm_type_terms(s, e).total();
}

inline bool is_canonical(const numerical_semigroup& s, const relative_ideal& e) {
    return cm_type_terms(s, e).socle_term == 1;
}

/// Parses "<4,6,11>" (angle brackets optional).
inline numerical_semigroup parse_semigroup(std::string_view text) {
    auto s = detail::trim(text);
    if (!s.empty() && s.front() == '<') {
        if (s.back() != '>') fail(error_kind::parse_error, "unterminated semigroup literal");
        s = s.substr(1, s.size() - 2);
    }
    auto gens = detail::parse_int_list(s);
    return numerical_semigroup::from_generators(gens);
}

/// Parses "ideal(3;2,3)", or a bare generator list "3,5" over `ambient`.
inline relative_ideal parse_ideal(std::string_view text, const numerical_semigroup* ambient = nullptr) {
    auto s = detail::trim(text);
    if (s.starts_with("ideal(")) {
        if (s.back() != ')') fail(error_kind::parse_error, "unterminated ideal literal");
        s = s.substr(6, s.size() - 7);
        auto semi = s.find(';');
        if (semi == std::string_view::npos) fail(error_kind::parse_error, "ideal literal needs ';'");
        auto gens = detail::parse_int_list(s.substr(0, semi));
        auto sg = parse_semigroup(s.substr(semi + 1));
        if (ambient && !(sg == *ambient)) fail(error_kind::invalid_argument, "ideal ambient differs from --sgp");
        return relative_ideal::from_generators(sg, gens);
    }
    if (!ambient) fail(error_kind::parse_error, "bare ideal generators need an ambient semigroup");
    auto gens = detail::parse_int_list(s);
    return relative_ideal::from_generators(*ambient, gens);
}

} // namespace rees
