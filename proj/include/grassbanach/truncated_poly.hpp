#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace grassbanach {

enum class algebra_kind : std::uint8_t { field, truncated_poly };
enum class poly_norm : std::uint8_t { l1, sup };

/// Identifies a commutative coefficient algebra B over a base field: the
/// base field itself, or the truncated polynomials K[t]/(t^N) with the sum
/// norm (any base) or the sup norm (non-Archimedean base only, where it is
/// itself non-Archimedean).
class algebra_descriptor {
public:
    static algebra_descriptor field(field_descriptor base) {
        return algebra_descriptor(algebra_kind::field, std::move(base), 1, poly_norm::l1);
    }

    static algebra_descriptor truncated_poly(field_descriptor base, int degree_bound,
                                             poly_norm norm = poly_norm::l1) {
        if (degree_bound < 1)
            throw invalid_descriptor("degree bound must be at least 1");
        if (norm == poly_norm::sup && !base.is_ultrametric()) throw not_ultrametric();
        return algebra_descriptor(algebra_kind::truncated_poly, std::move(base), degree_bound, norm);
    }

    algebra_kind kind() const noexcept { return kind_; }
    const field_descriptor& base() const noexcept { return base_; }
    poly_norm norm_kind() const noexcept { return norm_; }

    /// Number of stored polynomial coefficients: 1 for a bare field, N for
    /// K[t]/(t^N).
    int degree_bound() const noexcept { return kind_ == algebra_kind::field ? 1 : degree_bound_; }

    bool is_ultrametric() const noexcept {
        if (kind_ == algebra_kind::field) return base_.is_ultrametric();
        return norm_ == poly_norm::sup;
    }

    bool operator==(const algebra_descriptor&) const = default;

private:
    algebra_descriptor(algebra_kind k, field_descriptor base, int bound, poly_norm norm)
        : kind_(k), base_(std::move(base)), degree_bound_(bound), norm_(norm) {}

    algebra_kind kind_;
    field_descriptor base_;
    int degree_bound_;
    poly_norm norm_;
};

/// An element of the commutative coefficient algebra B: a polynomial
/// c0 + c1 t + ... truncated at the descriptor's degree bound, with
/// trailing zero coefficients trimmed away.
class bscalar {
public:
    using descriptor_type = algebra_descriptor;

    bscalar() : desc_(algebra_descriptor::field(field_descriptor::rational())) {}

    static bscalar zero(const algebra_descriptor& d) { return bscalar(d, {}); }

    static bscalar one(const algebra_descriptor& d) {
        return bscalar(d, {scalar::one(d.base())});
    }

    static bscalar constant(const algebra_descriptor& d, const scalar& c) {
        if (!(c.descriptor() == d.base()))
            throw descriptor_mismatch("constant does not belong to the base field");
        return bscalar(d, {c});
    }

    /// The monomial t^k; zero when k falls outside the degree bound.
    static bscalar t_power(const algebra_descriptor& d, int k) {
        if (k < 0) throw invalid_descriptor("t exponent must be nonnegative");
        if (k >= d.degree_bound()) return zero(d);
        std::vector<scalar> cs(static_cast<std::size_t>(k) + 1, scalar::zero(d.base()));
        cs.back() = scalar::one(d.base());
        return bscalar(d, std::move(cs));
    }

    static bscalar from_coefficients(const algebra_descriptor& d, std::vector<scalar> cs) {
        if (cs.size() > static_cast<std::size_t>(d.degree_bound()))
            throw invalid_descriptor("coefficient list exceeds the degree bound");
        for (const scalar& c : cs)
            if (!(c.descriptor() == d.base()))
                throw descriptor_mismatch("coefficient does not belong to the base field");
        return bscalar(d, std::move(cs));
    }

    const algebra_descriptor& descriptor() const noexcept { return desc_; }

    /// Trimmed coefficient vector; empty for zero.
    const std::vector<scalar>& coefficients() const noexcept { return coeffs_; }

    scalar coefficient(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return scalar::zero(desc_.base());
        return coeffs_[static_cast<std::size_t>(k)];
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Invertible exactly when the constant term is a nonzero field
    /// element; the nilpotent part is then handled by a geometric series.
    bool is_invertible() const { return !coeffs_.empty() && !coeffs_.front().is_zero(); }

    friend bscalar operator+(const bscalar& a, const bscalar& b) {
        a.require_same_descriptor(b);
        std::vector<scalar> out;
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.coefficient(static_cast<int>(i)) +
                                                          b.coefficient(static_cast<int>(i)));
        return bscalar(a.desc_, std::move(out));
    }

    friend bscalar operator-(const bscalar& a, const bscalar& b) { return a + (-b); }

    bscalar operator-() const {
        std::vector<scalar> out = coeffs_;
        for (scalar& c : out) c = -c;
        return bscalar(desc_, std::move(out));
    }

    /// Convolution product modulo t^N.
    friend bscalar operator*(const bscalar& a, const bscalar& b) {
        a.require_same_descriptor(b);
        if (a.is_zero() || b.is_zero()) return zero(a.desc_);
        const std::size_t bound = static_cast<std::size_t>(a.desc_.degree_bound());
        const std::size_t n = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, bound);
        std::vector<scalar> out(n, scalar::zero(a.desc_.base()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (i >= n) break;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return bscalar(a.desc_, std::move(out));
    }

    friend bool operator==(const bscalar& a, const bscalar& b) {
        return a.desc_ == b.desc_ && a.coeffs_ == b.coeffs_;
    }

    bscalar inverse() const {
        if (!is_invertible())
            throw division_by_zero();
        const scalar c0inv = coeffs_.front().inverse();
        const int bound = desc_.degree_bound();
        std::vector<scalar> out;
        out.reserve(static_cast<std::size_t>(bound));
        out.push_back(c0inv);
        for (int k = 1; k < bound; ++k) {
            scalar acc = scalar::zero(desc_.base());
            for (int j = 1; j <= k; ++j) acc = acc + coefficient(j) * out[static_cast<std::size_t>(k - j)];
            out.push_back(-(c0inv * acc));
        }
        return bscalar(desc_, std::move(out));
    }

    double norm() const {
        double r = 0;
        for (const scalar& c : coeffs_) {
            const double n = c.norm();
            r = desc_.norm_kind() == poly_norm::l1 ? r + n : std::max(r, n);
        }
        return r;
    }

    /// Human-readable polynomial, e.g. "1 + 3/2*t^2"; "0" for zero.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += coeffs_[i].to_string();
            } else {
                if (!coeffs_[i].is_one()) s += coeffs_[i].to_string() + "*";
                s += i == 1 ? "t" : "t^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    bscalar(const algebra_descriptor& d, std::vector<scalar> cs)
        : desc_(d), coeffs_(std::move(cs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void require_same_descriptor(const bscalar& other) const {
        if (!(desc_ == other.desc_)) throw descriptor_mismatch();
    }

    algebra_descriptor desc_;
    std::vector<scalar> coeffs_;
};

}  // namespace grassbanach
