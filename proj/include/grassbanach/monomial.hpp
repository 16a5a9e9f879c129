#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace grassbanach {

using generator_label = std::uint64_t;

/// A finite set of generator labels, stored sorted ascending. The empty
/// monomial is the basis index of the body (unit) component.
class monomial {
public:
    monomial() = default;

    monomial(std::initializer_list<generator_label> labels)
        : monomial(std::vector<generator_label>(labels)) {}

    explicit monomial(std::vector<generator_label> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw invalid_descriptor("monomial labels must be distinct");
    }

    static monomial unit() { return monomial(); }

    static monomial single(generator_label a) { return monomial({a}); }

    /// Set {b : bit b of m is set}; usable when every label is below 64.
    static monomial from_mask(std::uint64_t m) {
        std::vector<generator_label> labels;
        labels.reserve(static_cast<std::size_t>(std::popcount(m)));
        while (m != 0) {
            labels.push_back(static_cast<generator_label>(std::countr_zero(m)));
            m &= m - 1;
        }
        monomial r;
        r.labels_ = std::move(labels);
        return r;
    }

    const std::vector<generator_label>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    bool contains(generator_label a) const {
        return std::binary_search(labels_.begin(), labels_.end(), a);
    }

    bool intersects(const monomial& other) const {
        auto i = labels_.begin();
        auto j = other.labels_.begin();
        while (i != labels_.end() && j != other.labels_.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else
                return true;
        }
        return false;
    }

    /// Union of disjoint monomials by linear merge. Callers must check
    /// disjointness first; overlapping inputs throw.
    monomial disjoint_union(const monomial& other) const {
        monomial r;
        r.labels_.reserve(labels_.size() + other.labels_.size());
        std::merge(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(r.labels_));
        if (std::adjacent_find(r.labels_.begin(), r.labels_.end()) != r.labels_.end())
            throw internal_error("disjoint_union called on overlapping monomials");
        return r;
    }

    bool all_below(generator_label bound) const {
        return labels_.empty() || labels_.back() < bound;
    }

    /// Bitmask with bit a set for each label a; requires all_below(64).
    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (generator_label a : labels_) m |= std::uint64_t{1} << a;
        return m;
    }

    bool operator==(const monomial&) const = default;

    /// Graded lexicographic order: shorter monomials first, ties by label
    /// sequence. This is the canonical term order for rendered elements.
    bool operator<(const monomial& other) const {
        if (labels_.size() != other.labels_.size()) return labels_.size() < other.labels_.size();
        return labels_ < other.labels_;
    }

    std::string to_string() const {
        if (labels_.empty()) return "{}";
        std::string s = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(labels_[i]);
        }
        s += "}";
        return s;
    }

private:
    std::vector<generator_label> labels_;
};

struct monomial_hash {
    std::size_t operator()(const monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (generator_label a : m.labels()) {
            h ^= std::hash<generator_label>{}(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace grassbanach
