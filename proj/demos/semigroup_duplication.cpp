// Builds k[[<2,3>]](I)_{0,-X^5} for I = (X^3, X^5): the value semigroup is
// <4,6,11>, which is symmetric, so the ring is Gorenstein. Then checks one
// product against the map r + it -> r(X^2) + i(X^2) X^5.
#include <iostream>

#include "rees/rees.hpp"

int main() {
    using namespace rees;

    auto s = numerical_semigroup::from_generators({2, 3});
    auto e = relative_ideal::from_generators(s, {3});
    auto d = duplication(s, e, 5);
    std::cout << "S = " << s.to_string() << ", E = " << e.to_string() << "\n"
              << "S dup E = " << d.semigroup.to_string() << ", gaps {"
              << detail::join_ints(d.semigroup.gaps()) << "}\n"
              << "symmetric: " << std::boolalpha << d.semigroup.is_symmetric()
              << ", type of the ring: " << cm_type_family(s, e) << "\n";

    series_ring<rational_field> ring(rational_field{}, s, 32);
    auto ctx = make_context(ring, ring.make_ideal(e), ring.zero(), ring.parse("-X^5"));
    auto x = parse_element(ctx, "(1+X^2)+(X^3)t");
    auto y = parse_element(ctx, "(X^3)+(X^5)t");
    auto lhs = phi_map(x * y, 5);
    auto rhs = phi_map(x, 5) * phi_map(y, 5);
    std::cout << "x*y = " << (x * y).to_string() << "\n"
              << "phi(x*y) = " << lhs.series().to_string() << "\n"
              << "phi(x)phi(y) agrees: " << (lhs == rhs) << "\n";
}
