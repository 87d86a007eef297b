#pragma once

/**
 * @file semigroup_ring.hpp
 * @brief Elements of k[[S]] and the map Phi: k[[S]](I)_{0,-X^m} -> k[[T]].
 *
 * With t^2 = X^m (m odd), sending X -> X^2 and t -> X^m identifies the
 * family ring with the semigroup ring of T = S ⋈^m v(I):
 *
 *     Phi(r(X) + i(X) t) = r(X^2) + i(X^2) X^m.
 */

#include <string>

#include "rees/base_ring.hpp"
#include "rees/family.hpp"
#include "rees/semigroup.hpp"
#include "rees/series.hpp"

namespace rees {

template <coefficient_field F>
class semigroup_ring_element {
public:
    semigroup_ring_element(truncated_series<F> series, numerical_semigroup ambient)
        : series_(std::move(series)), ambient_(std::move(ambient)) {
        for (int e : series_.support())
            if (!ambient_.contains(e))
                fail(error_kind::invalid_argument,
                     "X^" + std::to_string(e) + " is not in k[[" + ambient_.to_string() + "]]");
    }

    const truncated_series<F>& series() const { return series_; }
    const numerical_semigroup& ambient() const { return ambient_; }

    friend semigroup_ring_element operator+(const semigroup_ring_element& x, const semigroup_ring_element& y) {
        x.require_same_ambient(y);
        return {x.series_ + y.series_, x.ambient_};
    }

    friend semigroup_ring_element operator*(const semigroup_ring_element& x, const semigroup_ring_element& y) {
        x.require_same_ambient(y);
        return {x.series_ * y.series_, x.ambient_};
    }

    friend bool operator==(const semigroup_ring_element& x, const semigroup_ring_element& y) {
        return x.ambient_ == y.ambient_ && x.series_ == y.series_;
    }

private:
    void require_same_ambient(const semigroup_ring_element& y) const {
        if (!(ambient_ == y.ambient_)) fail(error_kind::context_error, "elements of different semigroup rings");
    }

    truncated_series<F> series_;
    numerical_semigroup ambient_;
};

/// The semigroup T = S ⋈^m v(I) of the image of Phi.
template <coefficient_field F>
numerical_semigroup phi_target(const family_context<series_ring<F>>& ctx, int m) {
    const auto& ring = ctx.ring;
    if (m % 2 == 0) fail(error_kind::context_error, "Phi needs an odd m");
    if (!ring.semigroup().contains(m)) fail(error_kind::context_error, "Phi needs m in S");
    if (!ring.equal(ctx.a, ring.zero())) fail(error_kind::context_error, "Phi needs a = 0");
    if (!ring.equal(ctx.b, ring.neg(ring.monomial(ring.field().one(), m))))
        fail(error_kind::context_error, "Phi needs b = -X^" + std::to_string(m) + " (t^2 = X^m)");
    return duplication(ring.semigroup(), ctx.ideal.values(), m).semigroup;
}

template <coefficient_field F>
semigroup_ring_element<F> phi_map(const family_element<series_ring<F>>& x, int m) {
    auto target = phi_target(x.ctx(), m);
    auto image = x.r().substitute_power(2) + x.i().substitute_power(2).shifted(m);
    return {std::move(image), std::move(target)};
}

} // namespace rees
