#pragma once

#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "truncated_poly.hpp"

namespace grassbanach {

/// A Grassmann element with coefficients in a commutative algebra B,
/// realizing the scalar extension of the base algebra.
using extended_element = basic_element<bscalar>;
using extended_algebra = basic_algebra<bscalar>;

/// Coefficient-wise embedding along K -> B: each field coefficient becomes
/// the constant polynomial. An isometric algebra homomorphism.
inline extended_element embed(const grassmann_element& g, const algebra_descriptor& B) {
    if (!(g.descriptor() == B.base()))
        throw descriptor_mismatch("element field does not match the base of B");
    std::vector<std::pair<monomial, bscalar>> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) terms.emplace_back(t.mono, bscalar::constant(B, t.coeff));
    return extended_element::from_terms(B, g.ordering(), terms);
}

/// Realizes the sum of pure tensors b_i (x) g_i as the element
/// sum b_i * embed(g_i) of the extended algebra. All g_i must share the
/// given ordering and the base field of B.
inline extended_element expand_pure_tensors(
    const algebra_descriptor& B,
    const std::vector<std::pair<bscalar, grassmann_element>>& tensors,
    const ordering_function& ord = ordering_function::canonical()) {
    extended_element acc = extended_element::zero(B, ord);
    for (const auto& [b, g] : tensors) {
        if (!(b.descriptor() == B)) throw descriptor_mismatch();
        if (!(g.ordering() == ord))
            throw descriptor_mismatch("pure tensor factor uses a different ordering");
        acc = acc + embed(g, B).scaled(b);
    }
    return acc;
}

/// The inverse of expand_pure_tensors on basis-aligned representatives:
/// splits x into pure tensors (t^j, g_j) where g_j collects the degree-j
/// polynomial coefficients. expand_pure_tensors(B, decompose(x)) == x.
inline std::vector<std::pair<bscalar, grassmann_element>> decompose(const extended_element& x) {
    const algebra_descriptor& B = x.descriptor();
    const field_descriptor& base = B.base();
    std::vector<std::vector<std::pair<monomial, scalar>>> buckets(
        static_cast<std::size_t>(B.degree_bound()));
    for (const auto& t : x.terms())
        for (std::size_t j = 0; j < t.coeff.coefficients().size(); ++j) {
            const scalar& c = t.coeff.coefficients()[j];
            if (!c.is_zero()) buckets[j].emplace_back(t.mono, c);
        }
    std::vector<std::pair<bscalar, grassmann_element>> out;
    for (std::size_t j = 0; j < buckets.size(); ++j) {
        if (buckets[j].empty()) continue;
        out.emplace_back(bscalar::t_power(B, static_cast<int>(j)),
                         grassmann_element::from_terms(base, x.ordering(), buckets[j]));
    }
    return out;
}

}  // namespace grassbanach
