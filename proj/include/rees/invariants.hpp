#pragma once

/**
 * @file invariants.hpp
 * @brief Hilbert function, embedding dimension, multiplicity, CM type and
 * Gorenstein test for R(I)_{a,b} with R = k[[S]] and I monomial.
 *
 * Over a semigroup ring every monomial ideal is determined by its value set,
 * so lengths become cardinalities: with M = S \ {0} and nM the n-fold sum,
 *
 *     H(n) = |nM \ (n+1)M| + |(E + (n-1)M) \ (E + nM)|,   n >= 1.
 *
 * brute_force_hilbert computes the same numbers without value sets, by
 * literal products in R(I)_{a,b} and linear algebra over F_p.
 */

#include <map>
#include <optional>
#include <vector>

#include "rees/base_ring.hpp"
#include "rees/family.hpp"
#include "rees/semigroup.hpp"

namespace rees {

struct hilbert_record {
    std::vector<int> values;           // H(0), ..., H(n_max)
    std::optional<int> stabilized_at;  // first n >= 1 from which H is constant up to n_max
    std::optional<int> multiplicity;   // H(stabilized_at)

    friend bool operator==(const hilbert_record&, const hilbert_record&) = default;
};

namespace detail {
inline hilbert_record finish_record(std::vector<int> values) {
    hilbert_record rec{std::move(values), std::nullopt, std::nullopt};
    const int last = static_cast<int>(rec.values.size()) - 1;
    // Need at least two equal values past n = 1.
    for (int n = 1; n < last; ++n) {
        bool constant = true;
        for (int k = n; k <= last && constant; ++k) constant = rec.values[k] == rec.values[n];
        if (constant) {
            rec.stabilized_at = n;
            rec.multiplicity = rec.values[n];
            break;
        }
    }
    return rec;
}

inline void require_proper(const numerical_semigroup& s, const relative_ideal& e) {
    if (!(e.ambient() == s)) fail(error_kind::invalid_argument, "E is not an ideal of S");
    if (!e.is_proper()) fail(error_kind::invalid_argument, "E must be a proper ideal of S");
}
} // namespace detail

inline hilbert_record hilbert_family(const numerical_semigroup& s, const relative_ideal& e, int n_max) {
    detail::require_proper(s, e);
    if (n_max < 1) fail(error_kind::invalid_argument, "n_max must be at least 1");
    const auto max = relative_ideal::maximal(s);
    std::vector<relative_ideal> m_pow{relative_ideal::whole(s)};  // nM
    std::vector<relative_ideal> e_pow{e};                           // E + nM
    for (int n = 1; n <= n_max + 1; ++n) {
        m_pow.push_back(ideal_sum(m_pow.back(), max));
        e_pow.push_back(ideal_sum(e_pow.back(), max));
    }
    std::vector<int> values{1};
    for (int n = 1; n <= n_max; ++n)
        values.push_back(count_difference(m_pow[n], m_pow[n + 1]) + count_difference(e_pow[n - 1], e_pow[n]));
    return detail::finish_record(std::move(values));
}

/// nu(S) + nu(E).
inline int embdim_family(const numerical_semigroup& s, const relative_ideal& e) {
    detail::require_proper(s, e);
    return s.embedding_dimension() + e.num_generators();
}

/// The stable value of the Hilbert function.
inline int multiplicity_family(const numerical_semigroup& s, const relative_ideal& e) {
    // nM = n*m + (blow-up semigroup) for n >= m - 1, and likewise for E + nM,
    // so the function is constant well before 2m + 4.
    const int n_max = 2 * s.multiplicity() + 4;
    auto rec = hilbert_family(s, e, n_max);
    return rec.values.back();
}

inline int cm_type(const numerical_semigroup& s, const relative_ideal& e) { return cm_type_family(s, e); }

inline bool is_gorenstein(const numerical_semigroup& s, const relative_ideal& e) { return cm_type(s, e) == 1; }

// ---------------------------------------------------------------------------
// Brute-force oracle.

namespace detail {

/// Row-echelon basis of a subspace of F_p^dim.
class echelon_basis {
public:
    echelon_basis(prime_field field, int dim) : field_(std::move(field)), dim_(dim) {}

    bool insert(std::vector<std::int64_t> v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            const auto factor = v[pivot];
            for (int k = pivot; k < dim_; ++k) v[k] = field_.sub(v[k], field_.mul(factor, row[k]));
        }
        int pivot = 0;
        while (pivot < dim_ && v[pivot] == 0) ++pivot;
        if (pivot == dim_) return false;
        const auto inv = field_.inv(v[pivot]);
        for (auto& x : v) x = field_.mul(x, inv);
        for (auto& [p, row] : rows_) {
            if (row[pivot] == 0) continue;
            const auto factor = row[pivot];
            for (int k = 0; k < dim_; ++k) row[k] = field_.sub(row[k], field_.mul(factor, v[k]));
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, std::vector<std::int64_t>>& rows() const { return rows_; }

private:
    prime_field field_;
    int dim_;
    std::map<int, std::vector<std::int64_t>> rows_;
};

} // namespace detail

/**
 * Hilbert function of R(I)_{a,b}, R = F_p[[S]], computed from literal
 * products. Elements are coordinate vectors (coefficients of r below N,
 * then coefficients of i below N) modulo T_N = {(r, i) : all exponents >= N},
 * where N is chosen so that T_N is inside M^(n_max+1). Starting from a basis
 * of R(I) mod T_N, each M^(n+1) is spanned by g * v for the maximal ideal
 * generators g (X^n_k and X^e_j t) and basis vectors v of M^n. The pivots of
 * the echelon form are the value pairs; H(n) = dim M^n - dim M^(n+1).
 */
inline hilbert_record brute_force_hilbert(const context_ptr<series_ring<prime_field>>& ctx, int n_max) {
    using ring_t = series_ring<prime_field>;
    using elem = family_element<ring_t>;
    const ring_t& ring = ctx->ring;
    const auto& s = ring.semigroup();
    const auto& e = ctx->ideal.values();
    const auto& field = ring.field();
    detail::require_proper(s, e);
    if (n_max < 1) fail(error_kind::invalid_argument, "n_max must be at least 1");

    const int window = n_max * s.multiplicity() + std::max({s.conductor(), 1, e.tail_start()});
    if (window > ring.precision())
        fail(error_kind::precision_exceeded, "n_max = " + std::to_string(n_max) + " needs precision " +
                                                 std::to_string(window) + ", have " +
                                                 std::to_string(ring.precision()));
    const int dim = 2 * window;

    auto to_vector = [&](const elem& x) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
        for (int k = 0; k < window; ++k) {
            v[k] = x.r().coeff(k);
            v[window + k] = x.i().coeff(k);
        }
        return v;
    };
    auto to_element = [&](const std::vector<std::int64_t>& v) {
        std::map<int, std::int64_t> r, i;
        for (int k = 0; k < window; ++k) {
            if (v[k]) r.emplace(k, v[k]);
            if (v[window + k]) i.emplace(k, v[window + k]);
        }
        return elem(ctx, truncated_series<prime_field>::from_terms(field, r, ring.precision()),
                    truncated_series<prime_field>::from_terms(field, i, ring.precision()));
    };

    std::vector<elem> gens;
    for (int n : s.generators()) gens.push_back(elem::scalar(ctx, ring.monomial(field.one(), n)));
    for (int g : e.minimal_generators())
        gens.emplace_back(ctx, ring.zero(), truncated_series<prime_field>::monomial(field, field.one(), g,
                                                                                    ring.precision()));

    // M^0 = R(I): monomials X^s and X^e t below the window.
    detail::echelon_basis level(field, dim);
    for (int k = 0; k < window; ++k) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
        if (s.contains(k)) {
            v[k] = 1;
            level.insert(v);
            v[k] = 0;
        }
        if (e.contains(k)) {
            v[window + k] = 1;
            level.insert(v);
        }
    }

    std::vector<int> dims{level.rank()};
    for (int n = 0; n <= n_max; ++n) {
        detail::echelon_basis next(field, dim);
        for (const auto& [pivot, row] : level.rows()) {
            const auto x = to_element(row);
            for (const auto& g : gens) next.insert(to_vector(g * x));
        }
        dims.push_back(next.rank());
        level = std::move(next);
    }

    std::vector<int> values;
    for (int n = 0; n <= n_max; ++n) values.push_back(dims[n] - dims[n + 1]);
    return detail::finish_record(std::move(values));
}

} // namespace rees
