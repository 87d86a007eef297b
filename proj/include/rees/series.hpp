#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in one variable X over Q or F_p.
 *
 * A truncated_series knows its coefficients below `precision()` and nothing
 * above it. Every operation propagates precision: equality, valuation and
 * printing only ever speak about the known part.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/arith.hpp"
#include "rees/error.hpp"

namespace rees {

inline constexpr int default_precision = 64;
/// Hard ceiling on tracked precision.
inline constexpr int max_precision = 1 << 16;

template <coefficient_field F>
class truncated_series {
public:
    using field_type = F;
    using coeff_type = typename F::value_type;

    truncated_series(F field, int precision)
        : field_(std::move(field)), coeffs_(static_cast<std::size_t>(check_precision(precision)), field_.zero()) {}

    static truncated_series constant(F field, const coeff_type& c, int precision) {
        truncated_series s(std::move(field), precision);
        if (precision > 0) s.coeffs_[0] = c;
        return s;
    }

    /// c * X^e; the term vanishes if e is at or beyond the precision.
    static truncated_series monomial(F field, const coeff_type& c, int e, int precision) {
        if (e < 0) fail(error_kind::invalid_argument, "negative exponent in power series");
        truncated_series s(std::move(field), precision);
        if (e < precision) s.coeffs_[e] = c;
        return s;
    }

    static truncated_series from_terms(F field, const std::map<int, coeff_type>& terms, int precision) {
        truncated_series s(std::move(field), precision);
        for (const auto& [e, c] : terms) {
            if (e < 0) fail(error_kind::invalid_argument, "negative exponent in power series");
            if (e < precision) s.coeffs_[e] = s.field_.add(s.coeffs_[e], c);
        }
        return s;
    }

    const F& field() const { return field_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of X^e; e must be below the precision.
    const coeff_type& coeff(int e) const {
        if (e < 0 || e >= precision()) fail(error_kind::precision_exceeded, "coefficient beyond tracked precision");
        return coeffs_[e];
    }

    /// Least exponent with a nonzero coefficient, or precision() for the truncated zero.
    int order() const {
        for (int e = 0; e < precision(); ++e)
            if (!field_.is_zero(coeffs_[e])) return e;
        return precision();
    }

    /// nullopt means "valuation >= precision".
    std::optional<int> valuation() const {
        int v = order();
        if (v == precision()) return std::nullopt;
        return v;
    }

    bool is_zero() const { return order() == precision(); }

    /// Exponents carrying a nonzero coefficient.
    std::vector<int> support() const {
        std::vector<int> out;
        for (int e = 0; e < precision(); ++e)
            if (!field_.is_zero(coeffs_[e])) out.push_back(e);
        return out;
    }

    std::map<int, coeff_type> terms() const {
        std::map<int, coeff_type> out;
        for (int e = 0; e < precision(); ++e)
            if (!field_.is_zero(coeffs_[e])) out.emplace(e, coeffs_[e]);
        return out;
    }

    truncated_series truncated(int precision) const {
        truncated_series out(field_, std::min(precision, this->precision()));
        std::copy_n(coeffs_.begin(), out.precision(), out.coeffs_.begin());
        return out;
    }

    truncated_series operator-() const {
        truncated_series out(*this);
        for (auto& c : out.coeffs_) c = field_.neg(c);
        return out;
    }

    friend truncated_series operator+(const truncated_series& x, const truncated_series& y) {
        x.require_same_field(y);
        truncated_series out(x.field_, std::min(x.precision(), y.precision()));
        for (int e = 0; e < out.precision(); ++e) out.coeffs_[e] = x.field_.add(x.coeffs_[e], y.coeffs_[e]);
        return out;
    }

    friend truncated_series operator-(const truncated_series& x, const truncated_series& y) { return x + (-y); }

    /// Known below min(p1 + v2, p2 + v1), capped at max_precision.
    friend truncated_series operator*(const truncated_series& x, const truncated_series& y) {
        x.require_same_field(y);
        const int vx = x.order(), vy = y.order();
        const int prec = std::min({x.precision() + vy, y.precision() + vx, max_precision});
        truncated_series out(x.field_, prec);
        for (int i = vx; i < x.precision() && i < prec; ++i) {
            if (x.field_.is_zero(x.coeffs_[i])) continue;
            for (int j = vy; j < y.precision() && i + j < prec; ++j) {
                if (x.field_.is_zero(y.coeffs_[j])) continue;
                out.coeffs_[i + j] = x.field_.add(out.coeffs_[i + j], x.field_.mul(x.coeffs_[i], y.coeffs_[j]));
            }
        }
        return out;
    }

    truncated_series scaled(const coeff_type& c) const {
        truncated_series out(*this);
        for (auto& a : out.coeffs_) a = field_.mul(a, c);
        return out;
    }

    /// X^k * this.
    truncated_series shifted(int k) const {
        if (k < 0) fail(error_kind::invalid_argument, "negative shift");
        truncated_series out(field_, precision() + k);
        std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + k);
        return out;
    }

    /// f(X^k).
    truncated_series substitute_power(int k) const {
        if (k <= 0) fail(error_kind::invalid_argument, "substitution exponent must be positive");
        truncated_series out(field_, precision() * k);
        for (int e = 0; e < precision(); ++e) out.coeffs_[e * k] = coeffs_[e];
        return out;
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    truncated_series inverse() const {
        if (precision() == 0 || field_.is_zero(coeffs_[0]))
            fail(error_kind::not_a_unit, "power series with zero constant term is not invertible");
        truncated_series out(field_, precision());
        const coeff_type inv0 = field_.inv(coeffs_[0]);
        out.coeffs_[0] = inv0;
        for (int n = 1; n < precision(); ++n) {
            coeff_type acc = field_.zero();
            for (int k = 1; k <= n; ++k) acc = field_.add(acc, field_.mul(coeffs_[k], out.coeffs_[n - k]));
            out.coeffs_[n] = field_.neg(field_.mul(acc, inv0));
        }
        return out;
    }

    /// Equality of the coefficients both operands know.
    friend bool operator==(const truncated_series& x, const truncated_series& y) {
        if (!(x.field_ == y.field_)) return false;
        const int p = std::min(x.precision(), y.precision());
        for (int e = 0; e < p; ++e)
            if (x.field_.sub(x.coeffs_[e], y.coeffs_[e]) != x.field_.zero()) return false;
        return true;
    }

    /// "X^2+3*X^5"; "0" for the truncated zero.
    std::string to_string() const {
        std::string out;
        for (int e = 0; e < precision(); ++e) {
            const auto& c = coeffs_[e];
            if (field_.is_zero(c)) continue;
            std::string cs = field_.to_string(c);
            bool negative = !cs.empty() && cs.front() == '-';
            if (negative) cs.erase(0, 1);
            if (!out.empty() || negative) out += negative ? "-" : "+";
            if (e == 0) {
                out += cs;
                continue;
            }
            if (cs != "1") out += cs + "*";
            out += e == 1 ? "X" : "X^" + std::to_string(e);
        }
        return out.empty() ? "0" : out;
    }

private:
    static int check_precision(int precision) {
        if (precision < 0 || precision > max_precision)
            fail(error_kind::precision_exceeded, "precision out of range: " + std::to_string(precision));
        return precision;
    }

    void require_same_field(const truncated_series& y) const {
        if (!(field_ == y.field_)) fail(error_kind::context_error, "series over different fields");
    }

    F field_;
    std::vector<coeff_type> coeffs_;
};

/// Parses "X^2+3*X^5", "1/2*X - X^3", "(1+X)" into a series of the given precision.
template <coefficient_field F>
truncated_series<F> parse_series(const F& field, std::string_view text, int precision) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) fail(error_kind::parse_error, "empty series literal");

    std::map<int, typename F::value_type> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) fail(error_kind::parse_error, "empty term in series literal '" + std::string(text) + "'");

        int exponent = 0;
        std::string coeff = term;
        auto x = term.find('X');
        if (x != std::string::npos) {
            coeff = term.substr(0, x);
            if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
            std::string rest = term.substr(x + 1);
            if (rest.empty()) {
                exponent = 1;
            } else if (rest.front() == '^') {
                auto v = detail::parse_bigint(rest.substr(1));
                if (v < 0 || v > (1 << 16)) fail(error_kind::parse_error, "bad exponent in '" + term + "'");
                exponent = static_cast<int>(v);
            } else {
                fail(error_kind::parse_error, "bad term '" + term + "'");
            }
        }
        auto c = coeff.empty() ? field.one() : field.parse(coeff);
        if (negative) c = field.neg(c);
        auto [it, inserted] = terms.emplace(exponent, c);
        if (!inserted) it->second = field.add(it->second, c);
    }
    return truncated_series<F>::from_terms(field, terms, precision);
}

/**
 * Square root in k((X)) of b = X^(2k) * u, u(0) a nonzero square in k.
 * Returns nullopt when b is not a square. The root is computed by the
 * coefficient recurrence w_n = (u_n - sum w_i w_(n-i)) / (2 w_0), which is
 * Hensel lifting one coefficient at a time.
 */
template <coefficient_field F>
std::optional<truncated_series<F>> series_sqrt(const truncated_series<F>& b) {
    const F& k = b.field();
    if (k.characteristic() == 2) fail(error_kind::unsupported, "square roots in characteristic 2 are not supported");
    auto v = b.valuation();
    if (!v) fail(error_kind::invalid_argument, "b is zero to tracked precision");
    if (*v % 2 != 0) return std::nullopt;
    auto w0 = k.sqrt(b.coeff(*v));
    if (!w0) return std::nullopt;

    const int half = *v / 2;
    const int n_terms = b.precision() - *v;  // known coefficients of the unit part
    std::vector<typename F::value_type> w(static_cast<std::size_t>(n_terms), k.zero());
    w[0] = *w0;
    const auto inv_two_w0 = k.inv(k.mul(k.from_int(2), *w0));
    for (int n = 1; n < n_terms; ++n) {
        auto acc = b.coeff(*v + n);
        for (int i = 1; i < n; ++i) acc = k.sub(acc, k.mul(w[i], w[n - i]));
        w[n] = k.mul(acc, inv_two_w0);
    }
    std::map<int, typename F::value_type> terms;
    for (int n = 0; n < n_terms; ++n)
        if (!k.is_zero(w[n])) terms.emplace(n + half, w[n]);
    return truncated_series<F>::from_terms(k, terms, b.precision() - half);
}

template <coefficient_field F>
bool is_square_in_series(const truncated_series<F>& b) {
    return series_sqrt(b).has_value();
}

/// t^2 - b over k((X)) is irreducible iff b is not a square there.
template <coefficient_field F>
bool irreducible_t2_minus_b(const truncated_series<F>& b) {
    return !is_square_in_series(b);
}

} // namespace rees
