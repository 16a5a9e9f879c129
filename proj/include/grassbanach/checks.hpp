#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "expr.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "tensor.hpp"

namespace grassbanach {

namespace detail {

inline scalar check_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    const long long dens[] = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<int> di(0, 4);
    return scalar::from_rational(big_rational(num(rng), dens[di(rng)]));
}

inline monomial check_monomial(std::mt19937_64& rng, generator_label max_label, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    std::vector<generator_label> pool;
    for (generator_label a = 0; a < max_label; ++a) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size_dist(rng)));
    return monomial(pool);
}

inline grassmann_element check_element(std::mt19937_64& rng, const field_descriptor& d,
                                       int max_terms = 5) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<std::pair<monomial, scalar>> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(check_monomial(rng, 7, 3), check_scalar(rng));
    return grassmann_element::from_terms(d, ordering_function::canonical(), terms);
}

inline scalar check_padic_scalar(std::mt19937_64& rng, const field_descriptor& d) {
    std::uniform_int_distribution<long long> unit(1, 200);
    std::uniform_int_distribution<long long> val(-2, 2);
    return scalar::padic_from_parts(d, val(rng), big_int(unit(rng)));
}

inline grassmann_element check_padic_element(std::mt19937_64& rng, const field_descriptor& d) {
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<std::pair<monomial, scalar>> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(check_monomial(rng, 7, 3), check_padic_scalar(rng, d));
    return grassmann_element::from_terms(d, ordering_function::canonical(), terms);
}

inline tensor_element check_tensor(std::mt19937_64& rng, const field_descriptor& d) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<generator_label> label(0, 5);
    std::vector<std::pair<word, scalar>> entries;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        word w;
        const int l = len(rng);
        for (int k = 0; k < l; ++k) w.push_back(label(rng));
        entries.emplace_back(std::move(w), check_scalar(rng));
    }
    return tensor_element::from_words(d, tensor_mode::projective, entries);
}

}  // namespace detail

/// Runs a deterministic, seeded battery of structural self-checks, one
/// report line per check written to `out` after the whole battery ran.
/// Returns true iff every check passed. `inject_fault` corrupts one
/// expected value so the failure path can be exercised on demand.
inline bool run_property_checks(std::ostream& out, bool inject_fault = false) {
    std::mt19937_64 rng(0xC0FFEEu);
    const field_descriptor Q = field_descriptor::rational();
    const field_descriptor Q5 = field_descriptor::padic(5, 8);
    const ordering_function ord = ordering_function::canonical();

    std::ostringstream report;
    bool all_ok = true;
    auto record = [&](const char* name, bool ok) {
        report << (ok ? "ok   " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        std::uniform_int_distribution<generator_label> label(0, 39);
        for (int i = 0; i < 25 && ok; ++i) {
            const auto ea = grassmann_element::generator(Q, label(rng));
            const auto eb = grassmann_element::generator(Q, label(rng));
            ok = (ea * eb + eb * ea).is_zero() && (ea * ea).is_zero();
        }
        record("generator relations", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 15 && ok; ++i) {
            const auto a = detail::check_element(rng, Q);
            const auto b = detail::check_element(rng, Q);
            const auto c = detail::check_element(rng, Q);
            ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        }
        record("associativity and distributivity", ok);
    }
    {
        const auto unit = grassmann_element::unit(Q);
        bool ok = unit.norm_l1() == 1.0 &&
                  grassmann_element::unit(Q5).norm_linf() == 1.0;
        for (int i = 0; i < 30 && ok; ++i) {
            const auto a = detail::check_element(rng, Q);
            const auto b = detail::check_element(rng, Q);
            ok = (a * b).norm_l1() <= a.norm_l1() * b.norm_l1() * (1.0 + 1e-9) + 1e-12;
        }
        record("l1 norm is submultiplicative", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 30 && ok; ++i) {
            const auto a = detail::check_padic_element(rng, Q5);
            const auto b = detail::check_padic_element(rng, Q5);
            ok = (a * b).norm_linf() <= a.norm_linf() * b.norm_linf() * (1.0 + 1e-12) &&
                 (a + b).norm_linf() <=
                     std::max(a.norm_linf(), b.norm_linf()) * (1.0 + 1e-12);
        }
        record("linf norm is ultrametric", ok);
    }
    {
        bool ok = true;
        std::uniform_int_distribution<int> grade(0, 1);
        for (int i = 0; i < 20 && ok; ++i) {
            grassmann_element a = detail::check_element(rng, Q).grade_projection(grade(rng));
            grassmann_element b = detail::check_element(rng, Q).grade_projection(grade(rng));
            const bool both_odd =
                a.parity() == parity_kind::odd && b.parity() == parity_kind::odd;
            const grassmann_element rhs = both_odd ? -(b * a) : b * a;
            ok = a * b == rhs;
        }
        record("homogeneous supercommutativity", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 10 && ok; ++i) {
            grassmann_element a = detail::check_element(rng, Q);
            while (!a.body().is_invertible())
                a = a + grassmann_element::unit(Q).scaled(scalar::from_integer(Q, 1 + i));
            const grassmann_element inv = a.inverse();
            const auto unit = grassmann_element::unit(Q);
            ok = a * inv == unit && inv * a == unit;
        }
        record("inversion against the unit", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 12 && ok; ++i) {
            const tensor_element x = detail::check_tensor(rng, Q);
            const tensor_element y = detail::check_tensor(rng, Q);
            ok = quotient_map(x, ord) * quotient_map(y, ord) == quotient_map(x * y, ord) &&
                 quotient_map(x, ord).norm_l1() <= x.norm() * (1.0 + 1e-9);
        }
        record("tensor quotient is a contraction homomorphism", ok);
    }
    {
        const auto B = algebra_descriptor::truncated_poly(Q, 3);
        bool ok = true;
        for (int i = 0; i < 12 && ok; ++i) {
            const auto g = detail::check_element(rng, Q);
            const auto h = detail::check_element(rng, Q);
            ok = embed(g, B) * embed(h, B) == embed(g * h, B) &&
                 embed(g + h, B) == embed(g, B) + embed(h, B);
        }
        record("scalar extension embedding is a homomorphism", ok);
    }
    {
        const auto B = algebra_descriptor::truncated_poly(Q, 3);
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i) {
            std::vector<std::pair<monomial, bscalar>> terms;
            for (int t = 0; t < 3; ++t)
                terms.emplace_back(detail::check_monomial(rng, 6, 3),
                                   bscalar::from_coefficients(
                                       B, {detail::check_scalar(rng), detail::check_scalar(rng),
                                           detail::check_scalar(rng)}));
            const extended_element x = extended_element::from_terms(B, ord, terms);
            ok = expand_pure_tensors(B, decompose(x)) == x;
        }
        record("scalar extension decomposition round-trips", ok);
    }
    {
        session_config cfg;
        cfg.field = Q;
        const char* inverse_expected = inject_fault ? "1 + e1*e2" : "1 - e1*e2";
        bool ok =
            render_text(evaluate(parse_expression("inv(1 + e1*e2)", Q), cfg)) ==
                inverse_expected &&
            render_text(evaluate(parse_expression("e1*e2 + e2*e1", Q), cfg)) == "0" &&
            render_text(evaluate(parse_expression("(1 + e1*e2)^2", Q), cfg)) ==
                "1 + 2*e1*e2" &&
            render_text(evaluate(parse_expression("norm(2 - 3*e1)", Q), cfg)) == "5";
        record("expression engine worked examples", ok);
    }

    out << report.str();
    return all_ok;
}

}  // namespace grassbanach
