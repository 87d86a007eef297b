#pragma once

/**
 * @file family.hpp
 * @brief Arithmetic in R(I)_{a,b} = R_+ / (I^2 (t^2 + a t + b)).
 *
 * Every class has a unique representative r + i t with r in R and i in I,
 * so elements are stored as pairs (r, i). Reducing t^2 = -a t - b gives
 *
 *     (r, i)(s, j) = (rs - b ij, rj + si - a ij).
 *
 * Elements carry a shared, immutable family_context holding R, I, a and b.
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/base_ring.hpp"
#include "rees/error.hpp"

namespace rees {

template <base_ring R>
struct family_context {
    using value_type = typename R::value_type;
    using ideal_type = typename R::ideal_type;

    R ring;
    ideal_type ideal;
    value_type a;
    value_type b;

    friend bool operator==(const family_context& x, const family_context& y) {
        return x.ring == y.ring && x.ideal == y.ideal && x.ring.equal(x.a, y.a) && x.ring.equal(x.b, y.b);
    }

    std::string to_string() const {
        return ring.name() + " I=" + ideal.to_string() + " a=" + ring.to_string(a) + " b=" + ring.to_string(b);
    }
};

template <base_ring R>
using context_ptr = std::shared_ptr<const family_context<R>>;

template <base_ring R>
context_ptr<R> make_context(R ring, typename R::ideal_type ideal, typename R::value_type a,
                            typename R::value_type b) {
    if (!ring.contains(a) || !ring.contains(b)) fail(error_kind::invalid_argument, "a and b must lie in R");
    return std::make_shared<const family_context<R>>(
        family_context<R>{std::move(ring), std::move(ideal), std::move(a), std::move(b)});
}

template <base_ring R>
class family_element {
public:
    using value_type = typename R::value_type;

    family_element(context_ptr<R> ctx, value_type r, value_type i)
        : ctx_(std::move(ctx)), r_(std::move(r)), i_(std::move(i)) {
        if (!ctx_->ring.contains(r_)) fail(error_kind::invalid_argument, "r is not an element of R");
        if (!ctx_->ideal.contains(i_))
            fail(error_kind::invalid_argument, ctx_->ring.to_string(i_) + " is not in I = " + ctx_->ideal.to_string());
    }

    /// The canonical section R -> R(I)_{a,b}, r -> r + 0t.
    static family_element scalar(context_ptr<R> ctx, value_type r) {
        auto zero = ctx->ring.zero();
        return family_element(std::move(ctx), std::move(r), std::move(zero));
    }

    static family_element one(context_ptr<R> ctx) {
        auto one = ctx->ring.one();
        return scalar(std::move(ctx), std::move(one));
    }

    static family_element zero(context_ptr<R> ctx) {
        auto zero = ctx->ring.zero();
        return scalar(std::move(ctx), std::move(zero));
    }

    const context_ptr<R>& context() const { return ctx_; }
    const family_context<R>& ctx() const { return *ctx_; }
    const R& ring() const { return ctx_->ring; }
    const value_type& r() const { return r_; }
    const value_type& i() const { return i_; }

    friend family_element operator+(const family_element& x, const family_element& y) {
        x.require_same_context(y);
        const R& R_ = x.ring();
        return family_element(x.ctx_, R_.add(x.r_, y.r_), R_.add(x.i_, y.i_));
    }

    friend family_element operator-(const family_element& x, const family_element& y) {
        x.require_same_context(y);
        const R& R_ = x.ring();
        return family_element(x.ctx_, R_.sub(x.r_, y.r_), R_.sub(x.i_, y.i_));
    }

    family_element operator-() const { return family_element(ctx_, ring().neg(r_), ring().neg(i_)); }

    friend family_element operator*(const family_element& x, const family_element& y) {
        x.require_same_context(y);
        const auto& c = x.ctx();
        const R& R_ = c.ring;
        auto ij = R_.mul(x.i_, y.i_);
        auto r = R_.sub(R_.mul(x.r_, y.r_), R_.mul(c.b, ij));
        auto i = R_.sub(R_.add(R_.mul(x.r_, y.i_), R_.mul(y.r_, x.i_)), R_.mul(c.a, ij));
        return family_element(x.ctx_, std::move(r), std::move(i));
    }

    friend bool operator==(const family_element& x, const family_element& y) {
        return x.same_context(y) && x.ring().equal(x.r_, y.r_) && x.ring().equal(x.i_, y.i_);
    }

    /// "3+6t", "2t", "-1-t", "(X^2)+(X^3)t" for series.
    std::string to_string() const { return format_pair(ring(), r_, i_); }

    bool same_context(const family_element& y) const { return ctx_ == y.ctx_ || *ctx_ == *y.ctx_; }

    void require_same_context(const family_element& y) const {
        if (!same_context(y)) fail(error_kind::context_error, "elements belong to different rings R(I)_{a,b}");
    }

    static std::string format_pair(const R& ring, const value_type& r, const value_type& i) {
        auto is_zero = [&](const value_type& x) { return ring.equal(x, ring.zero()); };
        // Parenthesize anything that is not a plain signed number.
        auto wrap = [](std::string s) {
            bool simple = s.find('X') == std::string::npos && s.find_first_of("+-*/", 1) == std::string::npos;
            return simple ? s : "(" + s + ")";
        };
        std::string out;
        if (!is_zero(r) || is_zero(i)) out = is_zero(i) ? ring.to_string(r) : wrap(ring.to_string(r));
        if (!is_zero(i)) {
            std::string coeff = wrap(ring.to_string(i));
            bool negative = coeff.front() == '-';
            if (!out.empty() && !negative) out += "+";
            if (coeff == "1") coeff.clear();
            if (coeff == "-1") coeff = "-";
            out += coeff + "t";
        }
        return out;
    }

private:
    context_ptr<R> ctx_;
    value_type r_;
    value_type i_;
};

template <base_ring R>
family_element<R> mul(const family_element<R>& x, const family_element<R>& y) {
    return x * y;
}

/// delta = r^2 - i a r + i^2 b, the determinant of multiplication by r + it.
template <base_ring R>
typename R::value_type determinant(const family_element<R>& x) {
    const auto& c = x.ctx();
    const R& R_ = c.ring;
    auto ir = R_.mul(x.i(), x.r());
    return R_.add(R_.sub(R_.mul(x.r(), x.r()), R_.mul(c.a, ir)), R_.mul(R_.mul(x.i(), x.i()), c.b));
}

/// (r - ia) - it; x times its conjugate is the scalar delta.
template <base_ring R>
family_element<R> conjugate(const family_element<R>& x) {
    const R& R_ = x.ring();
    return family_element<R>(x.context(), R_.sub(x.r(), R_.mul(x.i(), x.ctx().a)), R_.neg(x.i()));
}

namespace detail {
template <finite_base_ring R>
std::optional<family_element<R>> search_inverse(const family_element<R>& x) {
    const auto one = family_element<R>::one(x.context());
    for (const auto& s : x.ring().elements())
        for (const auto& j : x.ctx().ideal.elements()) {
            family_element<R> y(x.context(), s, j);
            if (x * y == one) return y;
        }
    return std::nullopt;
}
} // namespace detail

/**
 * Unit test. A unit delta always yields an inverse. When delta is not a unit
 * a finite base is searched exhaustively; for an infinite base x is reported
 * as a non-unit, since x times its conjugate is delta and a unit x would
 * make delta a unit of R[t]/(t^2+at+b), hence of R.
 */
template <base_ring R>
bool is_unit(const family_element<R>& x) {
    if (x.ring().is_unit(determinant(x))) return true;
    if constexpr (finite_base_ring<R>) return detail::search_inverse(x).has_value();
    return false;
}

template <base_ring R>
family_element<R> invert(const family_element<R>& x) {
    const R& R_ = x.ring();
    auto delta = determinant(x);
    if (R_.is_unit(delta)) {
        auto d = R_.invert(delta);
        return family_element<R>(x.context(), R_.mul(R_.sub(x.r(), R_.mul(x.i(), x.ctx().a)), d),
                                 R_.neg(R_.mul(x.i(), d)));
    }
    if constexpr (finite_base_ring<R>) {
        if (auto y = detail::search_inverse(x)) return *y;
    }
    fail(error_kind::not_a_unit, x.to_string() + " is not a unit");
}

/// For den = s + jt: the multiplier (ja - s) + jt and u = s(ja - s) - j^2 b.
template <base_ring R>
struct rationalizer {
    family_element<R> multiplier;
    typename R::value_type u;
};

template <base_ring R>
rationalizer<R> make_rationalizer(const family_element<R>& den) {
    const auto& c = den.ctx();
    const R& R_ = c.ring;
    auto ja_minus_s = R_.sub(R_.mul(den.i(), c.a), den.r());
    auto u = R_.sub(R_.mul(den.r(), ja_minus_s), R_.mul(R_.mul(den.i(), den.i()), c.b));
    return {family_element<R>(den.context(), ja_minus_s, den.i()), u};
}

template <base_ring R>
struct fraction {
    family_element<R> numerator;
    typename R::value_type denominator;
};

/**
 * Writes num/den as w/u with u a regular element of R. den is regular in
 * R(I)_{a,b} exactly when u is regular in R. The sign of (w, u) is flipped
 * when the base ring prefers -u (e.g. u < 0 over Z, or u = -1).
 */
template <base_ring R>
fraction<R> rationalize(const family_element<R>& num, const family_element<R>& den) {
    num.require_same_context(den);
    const R& R_ = num.ring();
    auto [multiplier, u] = make_rationalizer(den);
    if (R_.is_zero_divisor(u))
        fail(error_kind::not_regular, den.to_string() + " is a zero divisor of R(I)_{a,b}");
    if (R_.prefers_negation(u)) {
        multiplier = -multiplier;
        u = R_.neg(u);
    }
    return {num * multiplier, u};
}

// ---------------------------------------------------------------------------
// Isomorphisms onto the idealization and the duplication.

/// R ⋉ I: pairs with (r, i)(s, j) = (rs, rj + si).
template <base_ring R>
struct idealization_element {
    typename R::value_type r, i;
};

template <base_ring R>
idealization_element<R> idealization_mul(const R& ring, const idealization_element<R>& x,
                                         const idealization_element<R>& y) {
    return {ring.mul(x.r, y.r), ring.add(ring.mul(x.r, y.i), ring.mul(y.r, x.i))};
}

template <base_ring R>
idealization_element<R> idealization_add(const R& ring, const idealization_element<R>& x,
                                         const idealization_element<R>& y) {
    return {ring.add(x.r, y.r), ring.add(x.i, y.i)};
}

template <base_ring R>
bool idealization_equal(const R& ring, const idealization_element<R>& x, const idealization_element<R>& y) {
    return ring.equal(x.r, y.r) && ring.equal(x.i, y.i);
}

/// R ⋈ I inside R x R: pairs (r, r + i), componentwise operations.
template <base_ring R>
struct duplication_element {
    typename R::value_type first, second;
};

template <base_ring R>
duplication_element<R> duplication_mul(const R& ring, const duplication_element<R>& x,
                                       const duplication_element<R>& y) {
    return {ring.mul(x.first, y.first), ring.mul(x.second, y.second)};
}

template <base_ring R>
duplication_element<R> duplication_add(const R& ring, const duplication_element<R>& x,
                                       const duplication_element<R>& y) {
    return {ring.add(x.first, y.first), ring.add(x.second, y.second)};
}

template <base_ring R>
bool duplication_equal(const R& ring, const duplication_element<R>& x, const duplication_element<R>& y) {
    return ring.equal(x.first, y.first) && ring.equal(x.second, y.second);
}

/// Membership in R ⋈ I: second - first must lie in I.
template <base_ring R>
bool duplication_contains(const family_context<R>& ctx, const duplication_element<R>& x) {
    return ctx.ideal.contains(ctx.ring.sub(x.second, x.first));
}

template <base_ring R>
void require_coefficients(const family_element<R>& x, long long a, long long b, const char* what) {
    const R& R_ = x.ring();
    if (!R_.equal(x.ctx().a, R_.from_int(a)) || !R_.equal(x.ctx().b, R_.from_int(b)))
        fail(error_kind::context_error, std::string(what) + " needs (a, b) = (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ")");
}

/// alpha(r + it) = (r, i), defined for (a, b) = (0, 0).
template <base_ring R>
idealization_element<R> to_idealization(const family_element<R>& x) {
    require_coefficients(x, 0, 0, "idealization");
    return {x.r(), x.i()};
}

/// beta(r + it) = (r, r + i), defined for (a, b) = (-1, 0).
template <base_ring R>
duplication_element<R> to_duplication(const family_element<R>& x) {
    require_coefficients(x, -1, 0, "duplication");
    return {x.r(), x.ring().add(x.r(), x.i())};
}

/**
 * For t^2 + at + b = (t - alpha)(t - beta) with beta - alpha a unit:
 * r + it -> (r + alpha i) + (beta - alpha) i t', an isomorphism onto
 * R(J)_{-1,0} = R ⋈ J with J = (beta - alpha) I = I.
 */
template <base_ring R>
class comaximal_map {
public:
    comaximal_map(context_ptr<R> source, typename R::value_type alpha, typename R::value_type beta)
        : source_(std::move(source)), alpha_(std::move(alpha)) {
        const R& R_ = source_->ring;
        // (t - alpha)(t - beta) = t^2 - (alpha + beta) t + alpha beta
        if (!R_.equal(R_.neg(R_.add(alpha_, beta)), source_->a) || !R_.equal(R_.mul(alpha_, beta), source_->b))
            fail(error_kind::not_a_factorization, "(t - " + R_.to_string(alpha_) + ")(t - " + R_.to_string(beta) +
                                                      ") is not t^2 + at + b");
        diff_ = R_.sub(beta, alpha_);
        if (!R_.is_unit(diff_))
            fail(error_kind::not_comaximal, "beta - alpha = " + R_.to_string(diff_) + " is not a unit");
        target_ = make_context(R_, source_->ideal, R_.from_int(-1), R_.zero());
    }

    const context_ptr<R>& target() const { return target_; }

    family_element<R> operator()(const family_element<R>& x) const {
        if (!(x.ctx() == *source_)) fail(error_kind::context_error, "element is not in the source ring");
        const R& R_ = source_->ring;
        return family_element<R>(target_, R_.add(x.r(), R_.mul(alpha_, x.i())), R_.mul(diff_, x.i()));
    }

private:
    context_ptr<R> source_;
    typename R::value_type alpha_;
    typename R::value_type diff_;
    context_ptr<R> target_;
};

/**
 * For t^2 + at + b = (t - alpha)^2: substituting t -> t + alpha gives
 * r + it -> (r + alpha i) + i t', an isomorphism onto R(I)_{0,0} = R ⋉ I.
 */
template <base_ring R>
class square_shift_map {
public:
    square_shift_map(context_ptr<R> source, typename R::value_type alpha)
        : source_(std::move(source)), alpha_(std::move(alpha)) {
        const R& R_ = source_->ring;
        if (!R_.equal(R_.neg(R_.add(alpha_, alpha_)), source_->a) || !R_.equal(R_.mul(alpha_, alpha_), source_->b))
            fail(error_kind::not_a_factorization, "(t - " + R_.to_string(alpha_) + ")^2 is not t^2 + at + b");
        target_ = make_context(R_, source_->ideal, R_.zero(), R_.zero());
    }

    const context_ptr<R>& target() const { return target_; }

    family_element<R> operator()(const family_element<R>& x) const {
        if (!(x.ctx() == *source_)) fail(error_kind::context_error, "element is not in the source ring");
        const R& R_ = source_->ring;
        return family_element<R>(target_, R_.add(x.r(), R_.mul(alpha_, x.i())), x.i());
    }

private:
    context_ptr<R> source_;
    typename R::value_type alpha_;
    context_ptr<R> target_;
};

/**
 * Parses "3+2t", "-t", "5", "(X^2)+(X^3)t" or "X^2+X^3*t". Terms ending in
 * t form the I-part, the rest the R-part; each coefficient goes through the
 * base ring's own parser.
 */
template <base_ring R>
family_element<R> parse_element(const context_ptr<R>& ctx, std::string_view text) {
    const R& R_ = ctx->ring;
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) fail(error_kind::parse_error, "empty element literal");

    // Split on top-level signs that start a term (not after '^', '*', '/' or '(').
    std::vector<std::pair<bool, std::string>> terms;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        start = 1;
    }
    for (std::size_t k = start; k <= s.size(); ++k) {
        char ch = k < s.size() ? s[k] : '\0';
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool boundary = k == s.size() ||
                        (depth == 0 && (ch == '+' || ch == '-') && k > start && s[k - 1] != '^' &&
                         s[k - 1] != '*' && s[k - 1] != '/' && s[k - 1] != '(');
        if (!boundary) continue;
        terms.emplace_back(negative, s.substr(start, k - start));
        if (k < s.size()) {
            negative = ch == '-';
            start = k + 1;
        }
    }
    if (depth != 0) fail(error_kind::parse_error, "unbalanced parentheses in '" + std::string(text) + "'");

    auto r = R_.zero();
    auto i = R_.zero();
    for (auto& [neg, term] : terms) {
        if (term.empty()) fail(error_kind::parse_error, "empty term in '" + std::string(text) + "'");
        bool is_t = term.back() == 't';
        if (is_t) {
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        auto value = term.empty() ? R_.one() : R_.parse(term);
        if (neg) value = R_.neg(value);
        if (is_t)
            i = R_.add(i, value);
        else
            r = R_.add(r, value);
    }
    return family_element<R>(ctx, r, i);
}

} // namespace rees
