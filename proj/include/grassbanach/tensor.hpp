#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "ordering.hpp"

namespace grassbanach {

/// A finitely supported coordinate vector in l1(M,K) or linf(M,K), the
/// space whose tensor algebra the quotient construction starts from.
class vector_element {
public:
    vector_element(field_descriptor d, norm_mode mode) : desc_(std::move(d)), mode_(mode) {
        if (mode_ == norm_mode::linf && !desc_.is_ultrametric()) throw not_ultrametric();
    }

    static vector_element from_coefficients(const field_descriptor& d, norm_mode mode,
                                            const std::vector<std::pair<generator_label, scalar>>& cs) {
        vector_element v(d, mode);
        for (const auto& [label, c] : cs) {
            if (!(c.descriptor() == d)) throw descriptor_mismatch();
            auto it = v.coeffs_.find(label);
            if (it == v.coeffs_.end())
                v.coeffs_.emplace(label, c);
            else
                it->second = it->second + c;
        }
        std::erase_if(v.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
        return v;
    }

    const field_descriptor& descriptor() const noexcept { return desc_; }
    norm_mode mode() const noexcept { return mode_; }
    const std::map<generator_label, scalar>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    double norm() const {
        double r = 0;
        for (const auto& [label, c] : coeffs_) {
            const double n = c.norm();
            r = mode_ == norm_mode::l1 ? r + n : std::max(r, n);
        }
        return r;
    }

private:
    field_descriptor desc_;
    norm_mode mode_;
    std::map<generator_label, scalar> coeffs_;
};

/// A word is a finite label tuple; repeats are allowed (tensors carry no
/// antisymmetry). The empty word spans the grade-zero component K.
using word = std::vector<generator_label>;

/// Graded lexicographic word order: by length, then componentwise.
struct word_less {
    bool operator()(const word& a, const word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

enum class tensor_mode : std::uint8_t { projective, injective };

/// A finitely supported element of the tensor algebra over l1(M,K)
/// (projective mode) or linf(M,K) (injective mode): a map from words to
/// nonzero coefficients. The injective variant exists only over
/// non-Archimedean fields.
class tensor_element {
public:
    using word_map = std::map<word, scalar, word_less>;

    tensor_element(field_descriptor d, tensor_mode mode) : desc_(std::move(d)), mode_(mode) {
        if (mode_ == tensor_mode::injective && !desc_.is_ultrametric()) throw not_ultrametric();
    }

    static tensor_element zero(const field_descriptor& d, tensor_mode mode) {
        return tensor_element(d, mode);
    }

    /// The unit: the empty word with coefficient 1.
    static tensor_element unit(const field_descriptor& d, tensor_mode mode) {
        tensor_element x(d, mode);
        x.words_.emplace(word{}, scalar::one(d));
        return x;
    }

    static tensor_element from_words(const field_descriptor& d, tensor_mode mode,
                                     const std::vector<std::pair<word, scalar>>& entries) {
        tensor_element x(d, mode);
        for (const auto& [w, c] : entries) {
            if (!(c.descriptor() == d)) throw descriptor_mismatch();
            x.accumulate(w, c);
        }
        x.drop_zeros();
        return x;
    }

    /// Embeds a coordinate vector as the grade-one component.
    static tensor_element from_vector(const vector_element& v) {
        tensor_element x(v.descriptor(), v.mode() == norm_mode::l1 ? tensor_mode::projective
                                                                   : tensor_mode::injective);
        for (const auto& [label, c] : v.coefficients()) x.words_.emplace(word{label}, c);
        return x;
    }

    const field_descriptor& descriptor() const noexcept { return desc_; }
    tensor_mode mode() const noexcept { return mode_; }
    const word_map& words() const noexcept { return words_; }
    bool is_zero() const noexcept { return words_.empty(); }

    scalar coefficient(const word& w) const {
        auto it = words_.find(w);
        return it == words_.end() ? scalar::zero(desc_) : it->second;
    }

    friend tensor_element operator+(const tensor_element& a, const tensor_element& b) {
        a.require_compatible(b);
        tensor_element r = a;
        for (const auto& [w, c] : b.words_) r.accumulate(w, c);
        r.drop_zeros();
        return r;
    }

    tensor_element operator-() const {
        tensor_element r = *this;
        for (auto& [w, c] : r.words_) c = -c;
        return r;
    }

    friend tensor_element operator-(const tensor_element& a, const tensor_element& b) {
        return a + (-b);
    }

    tensor_element scaled(const scalar& c) const {
        if (!(c.descriptor() == desc_)) throw descriptor_mismatch();
        tensor_element r(desc_, mode_);
        for (const auto& [w, x] : words_) {
            scalar prod = c * x;
            if (!prod.is_zero()) r.words_.emplace(w, std::move(prod));
        }
        return r;
    }

    /// Word-concatenation convolution: the coefficient of w accumulates
    /// x(u)*y(v) over all splittings w = u.v.
    friend tensor_element operator*(const tensor_element& a, const tensor_element& b) {
        a.require_compatible(b);
        tensor_element r(a.desc_, a.mode_);
        for (const auto& [u, cu] : a.words_) {
            for (const auto& [v, cv] : b.words_) {
                word w = u;
                w.insert(w.end(), v.begin(), v.end());
                r.accumulate(w, cu * cv);
            }
        }
        r.drop_zeros();
        return r;
    }

    friend bool operator==(const tensor_element& a, const tensor_element& b) {
        return a.desc_ == b.desc_ && a.mode_ == b.mode_ && a.words_ == b.words_;
    }

    /// Eq-style graded norm: sum of coefficient norms across all words in
    /// projective mode, their supremum in injective mode.
    double norm() const {
        double r = 0;
        for (const auto& [w, c] : words_) {
            const double n = c.norm();
            r = mode_ == tensor_mode::projective ? r + n : std::max(r, n);
        }
        return r;
    }

private:
    void require_compatible(const tensor_element& other) const {
        if (!(desc_ == other.desc_)) throw descriptor_mismatch();
        if (mode_ != other.mode_) throw mode_mismatch();
    }

    void accumulate(const word& w, const scalar& c) {
        auto it = words_.find(w);
        if (it == words_.end())
            words_.emplace(w, c);
        else
            it->second = it->second + c;
    }

    void drop_zeros() {
        std::erase_if(words_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    field_descriptor desc_;
    tensor_mode mode_;
    word_map words_;
};

/// The quotient homomorphism onto the Grassmann algebra: each word
/// (a1,...,ak) maps to the product e_a1 * ... * e_ak, so words with a
/// repeated label die and the rest become signed monomials. Unital,
/// multiplicative, and norm-nonincreasing onto the matching-norm algebra.
inline grassmann_element quotient_map(const tensor_element& x, const ordering_function& ord) {
    std::vector<std::pair<monomial, scalar>> terms;
    terms.reserve(x.words().size());
    for (const auto& [w, c] : x.words()) {
        if (w.empty()) {
            terms.emplace_back(monomial::unit(), c);
            continue;
        }
        std::vector<generator_label> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        monomial target(sorted);
        const int sign = permutation_parity_sign(w, ord.order(target));
        terms.emplace_back(std::move(target), sign > 0 ? c : -c);
    }
    return grassmann_element::from_terms(x.descriptor(), ord, terms);
}

/// A section of quotient_map: each monomial I becomes the single word <I>.
/// quotient_map(monomial_lift(a), a.ordering()) == a, and the projective
/// tensor norm of the lift equals the l1 norm of a.
inline tensor_element monomial_lift(const grassmann_element& a,
                                    tensor_mode mode = tensor_mode::projective) {
    std::vector<std::pair<word, scalar>> entries;
    entries.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
        if (t.mono.empty())
            entries.emplace_back(word{}, t.coeff);
        else
            entries.emplace_back(a.ordering().order(t.mono), t.coeff);
    }
    return tensor_element::from_words(a.descriptor(), mode, entries);
}

}  // namespace grassbanach
