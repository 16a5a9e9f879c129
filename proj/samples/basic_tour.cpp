// A short tour of the core algebra: products, grading, inversion, and the
// expression front end, over the rational coefficient field.

#include <iostream>

#include <grassbanach/grassbanach.hpp>

using namespace grassbanach;

int main() {
    const field_descriptor Q = field_descriptor::rational();
    const auto e1 = grassmann_element::generator(Q, 1);
    const auto e2 = grassmann_element::generator(Q, 2);
    const auto unit = grassmann_element::unit(Q);

    std::cout << "generators anticommute: e1*e2 + e2*e1 = "
              << render_text(e1 * e2 + e2 * e1) << "\n";

    const auto a = unit.scaled(scalar::from_integer(Q, 2)) + e1 + e1 * e2;
    std::cout << "a               = " << render_text(a) << "\n";
    std::cout << "body(a)         = " << a.body().to_string() << "\n";
    std::cout << "soul(a)         = " << render_text(a.soul()) << "\n";
    std::cout << "even part       = " << render_text(a.grade_projection(0)) << "\n";
    std::cout << "odd part        = " << render_text(a.grade_projection(1)) << "\n";
    std::cout << "|a|_1           = " << a.norm_l1() << "\n";

    const auto inv = a.inverse();
    std::cout << "inv(a)          = " << render_text(inv) << "\n";
    std::cout << "a * inv(a)      = " << render_text(a * inv) << "\n";

    const generator_label w = (e1 * e2).annihilator_witness();
    std::cout << "fresh witness for e1*e2: e" << w << ", product "
              << render_text(e1 * e2 * grassmann_element::generator(Q, w)) << "\n";

    // The expression engine parses and evaluates the same algebra.
    session_config cfg;
    cfg.field = Q;
    const auto result = evaluate(parse_expression("inv(1 + e1*e2) * (1 + e1*e2)", Q), cfg);
    std::cout << "expression round-trip: " << render_text(result) << "\n";
    std::cout << "as JSON: " << render_json(result) << "\n";
    return 0;
}
