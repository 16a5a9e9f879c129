#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace grassbanach {

namespace detail {

/// Counts inversions of an integer sequence by merge sort, O(k log k).
/// Consumes `v` as scratch space.
inline std::uint64_t merge_count_inversions(std::vector<std::size_t>& v) {
    std::vector<std::size_t> buf(v.size());
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < v.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, v.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (v[i] <= v[j]) {
                    buf[k++] = v[i++];
                } else {
                    inversions += mid - i;
                    buf[k++] = v[j++];
                }
            }
            while (i < mid) buf[k++] = v[i++];
            while (j < hi) buf[k++] = v[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      v.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inversions;
}

}  // namespace detail

/// Sign (+1 or -1) of the permutation carrying `perm` to `reference`.
/// Both must list the same distinct labels.
inline int permutation_parity_sign(const std::vector<generator_label>& perm,
                                   const std::vector<generator_label>& reference) {
    if (perm.size() != reference.size())
        throw label_mismatch("permutation and reference have different lengths");
    std::unordered_map<generator_label, std::size_t> position;
    position.reserve(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (!position.emplace(reference[i], i).second)
            throw label_mismatch("reference sequence repeats a label");
    }
    std::vector<std::size_t> indices;
    indices.reserve(perm.size());
    std::vector<bool> seen(reference.size(), false);
    for (generator_label a : perm) {
        auto it = position.find(a);
        if (it == position.end()) throw label_mismatch("sequences contain different labels");
        if (seen[it->second]) throw label_mismatch("permutation sequence repeats a label");
        seen[it->second] = true;
        indices.push_back(it->second);
    }
    return detail::merge_count_inversions(indices) % 2 == 0 ? 1 : -1;
}

/// The map I -> <I> assigning each nonempty finite label set an ordered
/// tuple. The canonical kind orders ascending; the table kind overrides
/// finitely many sets and falls back to canonical elsewhere.
class ordering_function {
public:
    using table_type = std::map<monomial, std::vector<generator_label>>;

    static ordering_function canonical() { return ordering_function(); }

    static ordering_function with_table(table_type table) {
        for (const auto& [key, tuple] : table) {
            if (key.empty()) throw invalid_ordering("ordering table may not contain the empty set");
            std::vector<generator_label> sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != key.labels())
                throw invalid_ordering("ordering table entry for " + key.to_string() +
                                       " is not a permutation of its labels");
        }
        ordering_function r;
        if (!table.empty()) r.table_ = std::make_shared<const table_type>(std::move(table));
        return r;
    }

    bool is_canonical() const noexcept { return table_ == nullptr; }

    /// The tuple <I>; ascending unless the table overrides I.
    std::vector<generator_label> order(const monomial& I) const {
        if (I.empty()) throw empty_set("the ordering function is undefined on the empty set");
        if (table_) {
            auto it = table_->find(I);
            if (it != table_->end()) return it->second;
        }
        return I.labels();
    }

    friend bool operator==(const ordering_function& a, const ordering_function& b) {
        if (a.table_ == b.table_) return true;
        if (!a.table_ || !b.table_) return false;
        return *a.table_ == *b.table_;
    }

private:
    ordering_function() = default;

    std::shared_ptr<const table_type> table_;
};

namespace detail {

/// Inversion count between two disjoint ascending masks: pairs (a,b) with
/// a in m1, b in m2, a > b.
inline std::uint64_t mask_inversions(std::uint64_t m1, std::uint64_t m2) {
    std::uint64_t inversions = 0;
    while (m2 != 0) {
        const int b = std::countr_zero(m2);
        m2 &= m2 - 1;
        // Labels of m1 strictly above b; b == 63 leaves nothing above.
        if (b < 63) inversions += static_cast<std::uint64_t>(std::popcount(m1 >> (b + 1)));
    }
    return inversions;
}

/// Inversion count between disjoint ascending sequences by linear merge.
inline std::uint64_t merge_inversions(const std::vector<generator_label>& a,
                                      const std::vector<generator_label>& b) {
    std::uint64_t inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else {
            // Every remaining element of a exceeds b[j].
            inversions += a.size() - i;
            ++j;
        }
    }
    return inversions;
}

}  // namespace detail

/// The sign factor of e_{I1} * e_{I2}: 0 when the sets overlap, +1 when
/// either is empty, otherwise the parity of (<I1>,<I2>) -> <I1 u I2>.
inline int epsilon_sign(const monomial& I1, const monomial& I2, const ordering_function& ord) {
    if (I1.intersects(I2)) return 0;
    if (I1.empty() || I2.empty()) return 1;
    if (ord.is_canonical()) {
        return detail::merge_inversions(I1.labels(), I2.labels()) % 2 == 0 ? 1 : -1;
    }
    std::vector<generator_label> concat = ord.order(I1);
    const std::vector<generator_label> right = ord.order(I2);
    concat.insert(concat.end(), right.begin(), right.end());
    return permutation_parity_sign(concat, ord.order(I1.disjoint_union(I2)));
}

/// epsilon_sign lifted into the field: 0_K, 1_K, or -1_K.
inline scalar epsilon(const monomial& I1, const monomial& I2, const ordering_function& ord,
                      const field_descriptor& d) {
    const int s = epsilon_sign(I1, I2, ord);
    if (s == 0) return scalar::zero(d);
    if (s > 0) return scalar::one(d);
    return -scalar::one(d);
}

}  // namespace grassbanach
