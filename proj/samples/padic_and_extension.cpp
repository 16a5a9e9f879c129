// Non-Archimedean coefficients: the 5-adic field, the sup-norm algebra that
// exists only over such fields, the tensor quotient, and scalar extension by
// a truncated polynomial ring.

#include <iostream>

#include <grassbanach/grassbanach.hpp>

using namespace grassbanach;

int main() {
    const field_descriptor Q5 = field_descriptor::padic(5, 8);

    // The sup-norm algebra constructs only over ultrametric fields.
    grassmann_algebra sup(Q5, norm_mode::linf);
    const auto x = sup.unit().scaled(scalar::from_integer(Q5, 25)) +
                   sup.generator(1).scaled(scalar::from_integer(Q5, 5));
    std::cout << "x        = " << render_text(x) << "\n";
    std::cout << "|x|_inf  = " << sup.norm(x) << "  (max of 5^-2 and 5^-1)\n";

    try {
        grassmann_algebra bad(field_descriptor::real64(), norm_mode::linf);
    } catch (const not_ultrametric& e) {
        std::cout << "over the reals: " << e.what() << "\n";
    }

    // Tensor words map onto signed monomials; repeated labels vanish.
    const ordering_function ord = ordering_function::canonical();
    const tensor_element t = tensor_element::from_words(
        Q5, tensor_mode::projective,
        {{word{2, 1}, scalar::one(Q5)}, {word{3, 3}, scalar::from_integer(Q5, 7)}});
    std::cout << "quotient of e2(x)e1 + 7 e3(x)e3 = " << render_text(quotient_map(t, ord))
              << "  (coefficient is -1 written mod 5^8)\n";

    // Scalar extension by B = Q5[t]/(t^3).
    const auto B = algebra_descriptor::truncated_poly(Q5, 3);
    const auto one_plus_t =
        bscalar::from_coefficients(B, {scalar::one(Q5), scalar::one(Q5)});
    const auto g = grassmann_element::generator(Q5, 1) + grassmann_element::unit(Q5);
    const extended_element ext = embed(g, B).scaled(one_plus_t);
    std::cout << "(1+t) (1 + e1) has body " << ext.body().to_string() << "\n";
    const extended_element inv = ext.inverse();
    std::cout << "inverse check: " << (ext * inv == extended_element::unit(B) ? "ok" : "BROKEN")
              << "\n";
    return 0;
}
