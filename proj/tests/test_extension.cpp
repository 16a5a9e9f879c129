#include <catch2/catch_amalgamated.hpp>

#include <grassbanach/extension.hpp>

#include "support/generators.hpp"

#include <random>

using namespace grassbanach;

namespace {

const field_descriptor kQ = field_descriptor::rational();
const algebra_descriptor kB4 = algebra_descriptor::truncated_poly(kQ, 4);

scalar q(long long n, long long d = 1) { return scalar::from_rational(big_rational(n, d)); }

bscalar poly(const std::vector<long long>& cs, const algebra_descriptor& d = kB4) {
    std::vector<scalar> out;
    out.reserve(cs.size());
    for (long long c : cs) out.push_back(scalar::from_integer(d.base(), c));
    return bscalar::from_coefficients(d, out);
}

bscalar random_bscalar(std::mt19937_64& rng, const algebra_descriptor& d) {
    std::uniform_int_distribution<int> len(0, d.degree_bound());
    std::vector<scalar> cs;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) cs.push_back(testgen::random_scalar(rng, d.base()));
    return bscalar::from_coefficients(d, cs);
}

extended_element random_extended(std::mt19937_64& rng, const algebra_descriptor& d,
                                 bool include_body = false) {
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<std::pair<monomial, bscalar>> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(testgen::random_monomial(rng, 6, 3), random_bscalar(rng, d));
    auto x = extended_element::from_terms(d, ordering_function::canonical(), terms);
    while (include_body && !x.body().is_invertible())
        x = x + extended_element::unit(d).scaled(
                    bscalar::constant(d, testgen::random_nonzero_scalar(rng, d.base())));
    return x;
}

}  // namespace

TEST_CASE("algebra descriptor") {
    CHECK(kB4.kind() == algebra_kind::truncated_poly);
    CHECK(kB4.degree_bound() == 4);
    CHECK(kB4.base() == kQ);
    CHECK_FALSE(kB4.is_ultrametric());

    auto field_desc = algebra_descriptor::field(kQ);
    CHECK(field_desc.degree_bound() == 1);
    CHECK_FALSE(field_desc.is_ultrametric());
    CHECK(algebra_descriptor::field(field_descriptor::padic(3)).is_ultrametric());

    // Sup norm exists only over a non-Archimedean base, and is ultrametric.
    CHECK_THROWS_AS(algebra_descriptor::truncated_poly(kQ, 3, poly_norm::sup), not_ultrametric);
    auto bsup = algebra_descriptor::truncated_poly(field_descriptor::padic(5, 6), 3, poly_norm::sup);
    CHECK(bsup.is_ultrametric());
    CHECK_FALSE(
        algebra_descriptor::truncated_poly(field_descriptor::padic(5, 6), 3).is_ultrametric());

    CHECK_THROWS_AS(algebra_descriptor::truncated_poly(kQ, 0), invalid_descriptor);
}

TEST_CASE("bscalar arithmetic modulo t^N") {
    // (1 + t)(1 - t) truncates to 1 at N = 2 and keeps -t^2 at N = 3.
    auto b2 = algebra_descriptor::truncated_poly(kQ, 2);
    auto b3 = algebra_descriptor::truncated_poly(kQ, 3);
    CHECK(poly({1, 1}, b2) * poly({1, -1}, b2) == bscalar::one(b2));
    CHECK(poly({1, 1}, b3) * poly({1, -1}, b3) == poly({1, 0, -1}, b3));

    auto x = poly({2, 0, 1});
    CHECK(bscalar::one(kB4) * x == x);
    CHECK((x + (-x)).is_zero());
    CHECK(bscalar::t_power(kB4, 1) * bscalar::t_power(kB4, 3) == bscalar::zero(kB4));
    CHECK(bscalar::t_power(kB4, 5).is_zero());
    CHECK(poly({0, 1}) == bscalar::t_power(kB4, 1));

    // Trailing zeros trim; degree bound is enforced on input.
    CHECK(poly({3, 0, 0}).coefficients().size() == 1);
    CHECK_THROWS_AS(poly({1, 1, 1, 1, 1}), invalid_descriptor);
    CHECK_THROWS_AS(poly({1}) + poly({1}, b2), descriptor_mismatch);

    CHECK(poly({1, 2, 0, -3}).to_string() == "1 + 2*t + -3*t^3");
    CHECK(bscalar::zero(kB4).to_string() == "0");
    CHECK(poly({0, 1, 1}).to_string() == "t + t^2");
}

TEST_CASE("bscalar norms and Banach property") {
    CHECK(poly({1, -2, 0, 3}).norm() == 6.0);
    CHECK(bscalar::one(kB4).norm() == 1.0);
    CHECK(bscalar::zero(kB4).norm() == 0.0);

    auto bsup = algebra_descriptor::truncated_poly(field_descriptor::padic(3, 6), 3, poly_norm::sup);
    auto y = bscalar::from_coefficients(
        bsup, {scalar::from_integer(bsup.base(), 9), scalar::from_integer(bsup.base(), 3)});
    CHECK(y.norm() == Catch::Approx(1.0 / 3.0));

    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_bscalar(rng, kB4);
        auto b = random_bscalar(rng, kB4);
        CHECK((a * b).norm() <= a.norm() * b.norm() * (1 + 1e-12));
        CHECK(a * b == b * a);
    }
    // Ultrametric for the sup variant.
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_bscalar(rng, bsup);
        auto b = random_bscalar(rng, bsup);
        CHECK((a + b).norm() <= std::max(a.norm(), b.norm()) * (1 + 1e-12));
        CHECK((a * b).norm() <= a.norm() * b.norm() * (1 + 1e-12));
    }
}

TEST_CASE("bscalar inversion") {
    auto b2 = algebra_descriptor::truncated_poly(kQ, 2);
    CHECK(poly({1, 1}, b2).inverse() == poly({1, -1}, b2));
    CHECK(poly({2}).inverse() == bscalar::constant(kB4, q(1, 2)));

    CHECK_FALSE(bscalar::t_power(kB4, 1).is_invertible());
    CHECK_FALSE(bscalar::zero(kB4).is_invertible());
    CHECK_THROWS_AS(bscalar::t_power(kB4, 1).inverse(), division_by_zero);

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_bscalar(rng, kB4);
        if (!a.is_invertible()) continue;
        CHECK(a * a.inverse() == bscalar::one(kB4));
    }
}

TEST_CASE("extended elements multiply with scalars sliding out") {
    auto ord = ordering_function::canonical();
    auto one_plus_t = poly({1, 1});
    auto a = extended_element::from_terms(kB4, ord, {{monomial({1}), one_plus_t}});
    auto b = extended_element::from_terms(kB4, ord, {{monomial({2}), bscalar::one(kB4)}});
    auto ab = a * b;
    CHECK(ab.support_size() == 1);
    CHECK(ab.coefficient(monomial({1, 2})) == one_plus_t);

    // Anticommutation persists over B.
    auto ba = b * a;
    CHECK(ba.coefficient(monomial({1, 2})) == -one_plus_t);
    CHECK((a * a).is_zero());
}

TEST_CASE("extended inversion follows the constant term of the body") {
    auto b2 = algebra_descriptor::truncated_poly(kQ, 2);
    auto ord = ordering_function::canonical();

    // invert((1+t) e) = (1-t) e at N = 2.
    auto x = extended_element::from_terms(b2, ord, {{monomial::unit(), poly({1, 1}, b2)}});
    CHECK(x.inverse() ==
          extended_element::from_terms(b2, ord, {{monomial::unit(), poly({1, -1}, b2)}}));

    // t e has body with zero constant term: not invertible.
    auto te = extended_element::from_terms(b2, ord, {{monomial::unit(), bscalar::t_power(b2, 1)}});
    CHECK_THROWS_AS(te.inverse(), not_invertible);
    CHECK_THROWS_AS(extended_element::generator(kB4, 1).inverse(), not_invertible);

    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        auto y = random_extended(rng, kB4, true);
        CHECK(y * y.inverse() == extended_element::unit(kB4));
    }
}

TEST_CASE("Banach inequality and unit norm over B") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_extended(rng, kB4);
        auto b = random_extended(rng, kB4);
        CHECK((a * b).norm_l1() <= a.norm_l1() * b.norm_l1() * (1 + 1e-12));
    }
    CHECK(extended_element::unit(kB4).norm_l1() == 1.0);

    // Sup-norm algebra over the ultrametric variant of B.
    auto bsup = algebra_descriptor::truncated_poly(field_descriptor::padic(3, 6), 3, poly_norm::sup);
    CHECK_NOTHROW(extended_algebra(bsup, norm_mode::linf));
    CHECK_THROWS_AS(extended_algebra(kB4, norm_mode::linf), not_ultrametric);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_extended(rng, bsup);
        auto b = random_extended(rng, bsup);
        CHECK((a * b).norm_linf() <= a.norm_linf() * b.norm_linf() * (1 + 1e-12));
    }
}

TEST_CASE("pure tensor expansion") {
    auto ord = ordering_function::canonical();
    auto e1 = grassmann_element::generator(kQ, 1);

    // expand([(1, e1)]) is e1 over B.
    auto x = expand_pure_tensors(kB4, {{bscalar::one(kB4), e1}});
    CHECK(x == embed(e1, kB4));

    // expand([(t, e), (1, e1 e2)]) = t*e + e1e2.
    auto e12 = grassmann_element::from_terms(kQ, ord, {{monomial({1, 2}), q(1)}});
    auto y = expand_pure_tensors(
        kB4, {{bscalar::t_power(kB4, 1), grassmann_element::unit(kQ)}, {bscalar::one(kB4), e12}});
    CHECK(y.body() == bscalar::t_power(kB4, 1));
    CHECK(y.coefficient(monomial({1, 2})) == bscalar::one(kB4));

    CHECK_THROWS_AS(expand_pure_tensors(
                        kB4, {{bscalar::one(kB4),
                               grassmann_element::generator(field_descriptor::real64(), 1)}}),
                    descriptor_mismatch);
}

TEST_CASE("embedding is an isometric homomorphism") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testgen::random_element(rng, kQ);
        auto h = testgen::random_element(rng, kQ);
        CHECK(embed(g * h, kB4) == embed(g, kB4) * embed(h, kB4));
        CHECK(embed(g + h, kB4) == embed(g, kB4) + embed(h, kB4));
        CHECK(embed(g, kB4).norm_l1() == Catch::Approx(g.norm_l1()));
    }
}

TEST_CASE("pure tensor products expand consistently") {
    // Multiplying pure tensors componentwise (B is purely even, no signs)
    // and expanding agrees with expanding first and multiplying in G(M,B).
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 300; ++trial) {
        auto b1 = random_bscalar(rng, kB4);
        auto b2 = random_bscalar(rng, kB4);
        auto g1 = testgen::random_element(rng, kQ);
        auto g2 = testgen::random_element(rng, kQ);

        auto componentwise = expand_pure_tensors(kB4, {{b1 * b2, g1 * g2}});
        auto expanded = expand_pure_tensors(kB4, {{b1, g1}}) * expand_pure_tensors(kB4, {{b2, g2}});
        CHECK(componentwise == expanded);
    }

    // Bilinearity over two-term lists.
    for (int trial = 0; trial < 200; ++trial) {
        auto b1 = random_bscalar(rng, kB4);
        auto b2 = random_bscalar(rng, kB4);
        auto g1 = testgen::random_element(rng, kQ);
        auto g2 = testgen::random_element(rng, kQ);
        auto joint = expand_pure_tensors(kB4, {{b1, g1}, {b2, g2}});
        CHECK(joint == expand_pure_tensors(kB4, {{b1, g1}}) + expand_pure_tensors(kB4, {{b2, g2}}));
    }
}

TEST_CASE("decompose inverts expansion") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_extended(rng, kB4);
        auto parts = decompose(x);
        CHECK(expand_pure_tensors(kB4, parts) == x);
        // Basis-aligned: the B components are exactly the powers of t.
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto& b = parts[j].first;
            std::size_t degree = b.coefficients().size() - 1;
            CHECK(b == bscalar::t_power(kB4, static_cast<int>(degree)));
            CHECK_FALSE(parts[j].second.is_zero());
        }
    }
    CHECK(decompose(extended_element::zero(kB4)).empty());

    // Round-trip the other way on basis-aligned lists.
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<bscalar, grassmann_element>> list;
        for (int j = 0; j < kB4.degree_bound(); ++j) {
            if (rng() % 2 == 0) continue;
            auto g = testgen::random_element(rng, kQ);
            if (g.is_zero()) continue;
            list.emplace_back(bscalar::t_power(kB4, j), g);
        }
        auto expanded = expand_pure_tensors(kB4, list);
        CHECK(decompose(expanded) == list);
    }
}
