#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "ordering.hpp"

namespace grassbanach {

/// Requirements on a coefficient type: a commutative normed unital ring
/// tagged by a descriptor. Satisfied by scalar (field coefficients) and by
/// truncated-polynomial coefficients.
template <typename C>
concept coefficient_ring = requires(const C& a, const C& b, const typename C::descriptor_type& d) {
    typename C::descriptor_type;
    { a.descriptor() } -> std::convertible_to<typename C::descriptor_type>;
    { d.is_ultrametric() } -> std::convertible_to<bool>;
    { C::zero(d) } -> std::same_as<C>;
    { C::one(d) } -> std::same_as<C>;
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_invertible() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<C>;
    { a.norm() } -> std::convertible_to<double>;
};

enum class parity_kind : std::uint8_t { even, odd, mixed, zero };

/// A finitely supported element of the Grassmann algebra over coefficient
/// ring C: a map from monomials to nonzero coefficients, together with the
/// coefficient descriptor and the ordering function fixing sign conventions.
template <coefficient_ring C>
class basic_element {
public:
    using coefficient_type = C;
    using descriptor_type = typename C::descriptor_type;

    struct term {
        monomial mono;
        C coeff;

        bool operator==(const term&) const = default;
    };

    static basic_element zero(const descriptor_type& d,
                              ordering_function ord = ordering_function::canonical()) {
        return basic_element(d, std::move(ord), {});
    }

    /// The unit e = e_emptyset.
    static basic_element unit(const descriptor_type& d,
                              ordering_function ord = ordering_function::canonical()) {
        return basic_element(d, std::move(ord), {{monomial::unit(), C::one(d)}});
    }

    static basic_element generator(const descriptor_type& d, generator_label a,
                                   ordering_function ord = ordering_function::canonical()) {
        return basic_element(d, std::move(ord), {{monomial::single(a), C::one(d)}});
    }

    /// Builds from an arbitrary term list: duplicate monomials are summed,
    /// zero coefficients dropped, terms sorted into graded-lex order.
    static basic_element from_terms(const descriptor_type& d, ordering_function ord,
                                    const std::vector<std::pair<monomial, C>>& terms) {
        std::map<monomial, C> acc;
        for (const auto& [mono, coeff] : terms) {
            if (!(coeff.descriptor() == d))
                throw descriptor_mismatch("term coefficient does not match the element's field");
            auto it = acc.find(mono);
            if (it == acc.end())
                acc.emplace(mono, coeff);
            else
                it->second = it->second + coeff;
        }
        std::vector<term> out;
        out.reserve(acc.size());
        for (auto& [mono, coeff] : acc)
            if (!coeff.is_zero()) out.push_back({mono, std::move(coeff)});
        return basic_element(d, std::move(ord), std::move(out));
    }

    const descriptor_type& descriptor() const noexcept { return desc_; }
    const ordering_function& ordering() const noexcept { return ord_; }
    const std::vector<term>& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of monomial I, 0 if absent from the support.
    C coefficient(const monomial& I) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), I,
                                   [](const term& t, const monomial& m) { return t.mono < m; });
        if (it != terms_.end() && it->mono == I) return it->coeff;
        return C::zero(desc_);
    }

    friend basic_element operator+(const basic_element& a, const basic_element& b) {
        a.require_compatible(b);
        std::vector<term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            if (i->mono < j->mono) {
                out.push_back(*i++);
            } else if (j->mono < i->mono) {
                out.push_back(*j++);
            } else {
                C sum = i->coeff + j->coeff;
                if (!sum.is_zero()) out.push_back({i->mono, std::move(sum)});
                ++i;
                ++j;
            }
        }
        out.insert(out.end(), i, a.terms_.end());
        out.insert(out.end(), j, b.terms_.end());
        return basic_element(a.desc_, a.ord_, std::move(out));
    }

    friend basic_element operator-(const basic_element& a, const basic_element& b) {
        return a + (-b);
    }

    basic_element operator-() const {
        std::vector<term> out = terms_;
        for (term& t : out) t.coeff = -t.coeff;
        return basic_element(desc_, ord_, std::move(out));
    }

    /// Scalar multiple c*a. Coefficients that vanish (for example by
    /// truncation in a polynomial coefficient ring) are dropped.
    basic_element scaled(const C& c) const {
        if (!(c.descriptor() == desc_)) throw descriptor_mismatch();
        std::vector<term> out;
        out.reserve(terms_.size());
        for (const term& t : terms_) {
            C prod = c * t.coeff;
            if (!prod.is_zero()) out.push_back({t.mono, std::move(prod)});
        }
        return basic_element(desc_, ord_, std::move(out));
    }

    /// The convolution product (a*b)(I) = sum over I1 u I2 = I of
    /// eps(I1,I2) a(I1) b(I2). Pairs with overlapping monomials contribute
    /// nothing. The pair iteration order is a pure function of the inputs,
    /// so binary64 results are reproducible.
    friend basic_element operator*(const basic_element& a, const basic_element& b) {
        a.require_compatible(b);
        if (a.is_zero() || b.is_zero()) return zero(a.desc_, a.ord_);
        if (a.ord_.is_canonical() && a.all_labels_below(64) && b.all_labels_below(64))
            return mul_masked(a, b);
        return mul_general(a, b);
    }

    friend bool operator==(const basic_element& a, const basic_element& b) {
        return a.desc_ == b.desc_ && a.ord_ == b.ord_ && a.terms_ == b.terms_;
    }

    /// a^k by repeated squaring; a^0 is the unit.
    basic_element pow(std::uint64_t k) const {
        basic_element result = unit(desc_, ord_);
        basic_element base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    /// Coefficient of the empty monomial (the component along the unit).
    C body() const {
        if (!terms_.empty() && terms_.front().mono.empty()) return terms_.front().coeff;
        return C::zero(desc_);
    }

    /// a minus its body: a = body()*e + soul() holds exactly.
    basic_element soul() const {
        if (!terms_.empty() && terms_.front().mono.empty()) {
            std::vector<term> out(terms_.begin() + 1, terms_.end());
            return basic_element(desc_, ord_, std::move(out));
        }
        return *this;
    }

    double norm_l1() const {
        double sum = 0;
        for (const term& t : terms_) sum += t.coeff.norm();
        return sum;
    }

    double norm_linf() const {
        double best = 0;
        for (const term& t : terms_) best = std::max(best, t.coeff.norm());
        return best;
    }

    /// Projection onto the even (i = 0) or odd (i = 1) subspace: keeps the
    /// terms whose monomial length is congruent to i mod 2.
    basic_element grade_projection(int i) const {
        if (i != 0 && i != 1) throw config_error("grade index must be 0 or 1");
        std::vector<term> out;
        for (const term& t : terms_)
            if (static_cast<int>(t.mono.size() % 2) == i) out.push_back(t);
        return basic_element(desc_, ord_, std::move(out));
    }

    parity_kind parity() const {
        if (terms_.empty()) return parity_kind::zero;
        bool has_even = false, has_odd = false;
        for (const term& t : terms_) (t.mono.size() % 2 == 0 ? has_even : has_odd) = true;
        if (has_even && has_odd) return parity_kind::mixed;
        return has_even ? parity_kind::even : parity_kind::odd;
    }

    /// Multiplicative inverse. An element is invertible exactly when its
    /// body is; the soul s is nilpotent at finite support (s^(n+1) = 0 for
    /// n distinct generators), so the geometric series terminates.
    basic_element inverse() const {
        const C b = body();
        if (!b.is_invertible()) throw not_invertible();
        const C binv = b.inverse();
        const basic_element s = soul();
        std::set<generator_label> labels;
        for (const term& t : s.terms_)
            labels.insert(t.mono.labels().begin(), t.mono.labels().end());
        const std::size_t n = labels.size();

        basic_element result = unit(desc_, ord_).scaled(binv);
        basic_element power = unit(desc_, ord_);
        C factor = binv;
        for (std::size_t k = 1; k <= n; ++k) {
            power = power * s;
            if (power.is_zero()) break;
            factor = factor * (-binv);
            result = result + power.scaled(factor);
        }
        return result;
    }

    /// A fresh generator label b with e_b * a != 0, witnessing that no
    /// nonzero element annihilates the odd subspace from the right.
    generator_label annihilator_witness() const {
        if (is_zero()) throw zero_element();
        generator_label fresh = 0;
        for (const term& t : terms_)
            if (!t.mono.empty()) fresh = std::max(fresh, t.mono.labels().back() + 1);
        return fresh;
    }

    /// Applies an injective label map; labels absent from the map are kept.
    /// Each coefficient picks up the parity of the permutation carrying the
    /// mapped tuple of <I> to <f(I)>.
    basic_element relabeled(const std::map<generator_label, generator_label>& f) const {
        const auto apply = [&f](generator_label a) {
            auto it = f.find(a);
            return it == f.end() ? a : it->second;
        };
        std::set<generator_label> occurring, image;
        for (const term& t : terms_)
            for (generator_label a : t.mono.labels()) occurring.insert(a);
        for (generator_label a : occurring) image.insert(apply(a));
        if (image.size() != occurring.size())
            throw not_injective();

        std::vector<std::pair<monomial, C>> out;
        out.reserve(terms_.size());
        for (const term& t : terms_) {
            if (t.mono.empty()) {
                out.emplace_back(t.mono, t.coeff);
                continue;
            }
            std::vector<generator_label> mapped;
            mapped.reserve(t.mono.size());
            for (generator_label a : t.mono.labels()) mapped.push_back(apply(a));
            monomial target(mapped);
            std::vector<generator_label> mapped_tuple;
            mapped_tuple.reserve(t.mono.size());
            for (generator_label a : ord_.order(t.mono)) mapped_tuple.push_back(apply(a));
            const int sign = permutation_parity_sign(mapped_tuple, ord_.order(target));
            out.emplace_back(std::move(target), sign > 0 ? t.coeff : -t.coeff);
        }
        return from_terms(desc_, ord_, out);
    }

    /// Transports the element to another ordering function: e_I picks up
    /// the parity of <I>_from -> <I>_to, and the result multiplies
    /// consistently under the target ordering.
    basic_element reordered(const ordering_function& ord_to) const {
        std::vector<term> out;
        out.reserve(terms_.size());
        for (const term& t : terms_) {
            if (t.mono.empty()) {
                out.push_back(t);
                continue;
            }
            const int sign = permutation_parity_sign(ord_.order(t.mono), ord_to.order(t.mono));
            out.push_back({t.mono, sign > 0 ? t.coeff : -t.coeff});
        }
        return basic_element(desc_, ord_to, std::move(out));
    }

    /// Drops terms whose coefficient norm is below eps.
    basic_element pruned(double eps) const {
        std::vector<term> out;
        out.reserve(terms_.size());
        for (const term& t : terms_)
            if (t.coeff.norm() >= eps) out.push_back(t);
        return basic_element(desc_, ord_, std::move(out));
    }

private:
    basic_element(const descriptor_type& d, ordering_function ord, std::vector<term> terms)
        : desc_(d), ord_(std::move(ord)), terms_(std::move(terms)) {}

    void require_compatible(const basic_element& other) const {
        if (!(desc_ == other.desc_))
            throw descriptor_mismatch();
        if (!(ord_ == other.ord_))
            throw descriptor_mismatch("operands use different ordering functions");
    }

    bool all_labels_below(generator_label bound) const {
        for (const term& t : terms_)
            if (!t.mono.all_below(bound)) return false;
        return true;
    }

    template <typename Key, typename Hash, typename MakeContribution>
    static void accumulate_pairs(std::unordered_map<Key, C, Hash>& acc, bool a_outer,
                                 const std::vector<term>& a_terms, const std::vector<term>& b_terms,
                                 const MakeContribution& contribute) {
        // Outer loop over the smaller support; contribution roles stay (a,b).
        if (a_outer) {
            for (const term& ta : a_terms)
                for (const term& tb : b_terms) contribute(acc, ta, tb);
        } else {
            for (const term& tb : b_terms)
                for (const term& ta : a_terms) contribute(acc, ta, tb);
        }
    }

    template <typename Key, typename Hash>
    static void accumulate(std::unordered_map<Key, C, Hash>& acc, const Key& key, C value) {
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, std::move(value));
        else
            it->second = it->second + value;
    }

    /// Fast path: canonical ordering with all labels below 64, monomials as
    /// bitmasks and the sign by a popcount inversion count.
    static basic_element mul_masked(const basic_element& a, const basic_element& b) {
        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
        std::vector<std::pair<std::uint64_t, const C*>> am, bm;
        am.reserve(a.terms_.size());
        bm.reserve(b.terms_.size());
        for (const term& t : a.terms_) am.emplace_back(t.mono.mask(), &t.coeff);
        for (const term& t : b.terms_) bm.emplace_back(t.mono.mask(), &t.coeff);

        const auto contribute = [&acc](const std::pair<std::uint64_t, const C*>& x,
                                       const std::pair<std::uint64_t, const C*>& y) {
            if ((x.first & y.first) != 0) return;
            C prod = *x.second * *y.second;
            if (detail::mask_inversions(x.first, y.first) % 2 != 0) prod = -prod;
            accumulate(acc, x.first | y.first, std::move(prod));
        };
        if (am.size() <= bm.size()) {
            for (const auto& x : am)
                for (const auto& y : bm) contribute(x, y);
        } else {
            for (const auto& y : bm)
                for (const auto& x : am) contribute(x, y);
        }

        std::vector<term> out;
        out.reserve(acc.size());
        for (auto& [mask, coeff] : acc)
            if (!coeff.is_zero()) out.push_back({monomial::from_mask(mask), std::move(coeff)});
        std::sort(out.begin(), out.end(),
                  [](const term& x, const term& y) { return x.mono < y.mono; });
        return basic_element(a.desc_, a.ord_, std::move(out));
    }

    static basic_element mul_general(const basic_element& a, const basic_element& b) {
        std::unordered_map<monomial, C, monomial_hash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
        const ordering_function& ord = a.ord_;

        const auto contribute = [&acc, &ord](const term& ta, const term& tb) {
            const int sign = epsilon_sign(ta.mono, tb.mono, ord);
            if (sign == 0) return;
            C prod = ta.coeff * tb.coeff;
            if (sign < 0) prod = -prod;
            accumulate(acc, ta.mono.disjoint_union(tb.mono), std::move(prod));
        };
        if (a.terms_.size() <= b.terms_.size()) {
            for (const term& ta : a.terms_)
                for (const term& tb : b.terms_) contribute(ta, tb);
        } else {
            for (const term& tb : b.terms_)
                for (const term& ta : a.terms_) contribute(ta, tb);
        }

        std::vector<term> out;
        out.reserve(acc.size());
        for (auto& [mono, coeff] : acc)
            if (!coeff.is_zero()) out.push_back({mono, std::move(coeff)});
        std::sort(out.begin(), out.end(),
                  [](const term& x, const term& y) { return x.mono < y.mono; });
        return basic_element(a.desc_, a.ord_, std::move(out));
    }

    descriptor_type desc_;
    ordering_function ord_;
    std::vector<term> terms_;
};

enum class norm_mode : std::uint8_t { l1, linf };

/// A handle fixing the coefficient descriptor, the ordering function, and
/// the Banach norm of one Grassmann algebra. The sup-norm algebra exists
/// only over non-Archimedean coefficients and is rejected otherwise.
template <coefficient_ring C>
class basic_algebra {
public:
    using element = basic_element<C>;
    using descriptor_type = typename C::descriptor_type;

    basic_algebra(descriptor_type d, norm_mode mode,
                  ordering_function ord = ordering_function::canonical())
        : desc_(std::move(d)), ord_(std::move(ord)), mode_(mode) {
        if (mode_ == norm_mode::linf && !desc_.is_ultrametric()) throw not_ultrametric();
    }

    const descriptor_type& descriptor() const noexcept { return desc_; }
    const ordering_function& ordering() const noexcept { return ord_; }
    norm_mode mode() const noexcept { return mode_; }

    element zero() const { return element::zero(desc_, ord_); }
    element unit() const { return element::unit(desc_, ord_); }
    element generator(generator_label a) const { return element::generator(desc_, a, ord_); }

    element make(const std::vector<std::pair<monomial, C>>& terms) const {
        return element::from_terms(desc_, ord_, terms);
    }

    double norm(const element& a) const {
        return mode_ == norm_mode::l1 ? a.norm_l1() : a.norm_linf();
    }

private:
    descriptor_type desc_;
    ordering_function ord_;
    norm_mode mode_;
};

using grassmann_element = basic_element<scalar>;
using grassmann_algebra = basic_algebra<scalar>;

}  // namespace grassbanach
