#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "errors.hpp"

namespace grassbanach {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

enum class field_kind : std::uint8_t { real64, rational, padic };

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::string double_to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Identifies a complete normed field: binary64 reals, exact rationals, or a
/// fixed-precision p-adic field Q_p.
class field_descriptor {
public:
    static field_descriptor real64() { return field_descriptor(field_kind::real64, 0, 0); }

    static field_descriptor rational() { return field_descriptor(field_kind::rational, 0, 0); }

    /// Q_p with `precision` significant p-adic digits (default 20).
    static field_descriptor padic(std::uint64_t p, int precision = 20) {
        if (!detail::is_prime_u64(p))
            throw invalid_descriptor("p-adic prime must be a prime number, got " + std::to_string(p));
        if (precision < 1)
            throw invalid_descriptor("p-adic precision must be at least 1");
        return field_descriptor(field_kind::padic, p, precision);
    }

    field_kind kind() const noexcept { return kind_; }
    std::uint64_t prime() const noexcept { return p_; }
    int precision() const noexcept { return precision_; }

    /// True when |x+y| <= max(|x|,|y|) holds, i.e. for the p-adic fields.
    bool is_ultrametric() const noexcept { return kind_ == field_kind::padic; }

    bool operator==(const field_descriptor&) const = default;

private:
    field_descriptor(field_kind k, std::uint64_t p, int prec) : kind_(k), p_(p), precision_(prec) {}

    field_kind kind_;
    std::uint64_t p_;
    int precision_;
};

/// A field element tagged with its field descriptor.
///
/// Payloads: binary64 for real64, exact arbitrary-precision fractions for
/// rational, and (valuation, unit mod p^significance) for padic. The p-adic
/// significance starts at the descriptor's precision and shrinks when leading
/// digits cancel in addition; a sum that cancels past the last tracked digit
/// collapses to the exact zero scalar.
class scalar {
public:
    using descriptor_type = field_descriptor;

    scalar() : desc_(field_descriptor::rational()), value_(big_rational(0)) {}

    static scalar zero(const field_descriptor& d) {
        switch (d.kind()) {
            case field_kind::real64: return scalar(d, 0.0);
            case field_kind::rational: return scalar(d, big_rational(0));
            case field_kind::padic: return scalar(d, padic_payload{true, 0, d.precision(), 0});
        }
        throw internal_error("unreachable field kind");
    }

    static scalar one(const field_descriptor& d) { return from_integer(d, 1); }

    static scalar from_integer(const field_descriptor& d, long long n) {
        switch (d.kind()) {
            case field_kind::real64: return scalar(d, static_cast<double>(n));
            case field_kind::rational: return scalar(d, big_rational(n));
            case field_kind::padic: return padic_from_big(d, big_int(n));
        }
        throw internal_error("unreachable field kind");
    }

    static scalar from_double(double x) { return scalar(field_descriptor::real64(), x); }

    static scalar from_rational(big_rational r) {
        return scalar(field_descriptor::rational(), std::move(r));
    }

    /// p^valuation * unit, reduced to canonical form. unit may carry factors
    /// of p and a sign; both are normalized away.
    static scalar padic_from_parts(const field_descriptor& d, long long valuation, big_int unit) {
        if (d.kind() != field_kind::padic) throw descriptor_mismatch("padic payload for non-padic field");
        if (unit == 0) return zero(d);
        const big_int p(d.prime());
        while (unit % p == 0) {
            unit /= p;
            ++valuation;
        }
        const big_int pk = boost::multiprecision::pow(p, static_cast<unsigned>(d.precision()));
        unit %= pk;
        if (unit < 0) unit += pk;
        return scalar(d, padic_payload{false, valuation, d.precision(), std::move(unit)});
    }

    const field_descriptor& descriptor() const noexcept { return desc_; }

    bool is_zero() const {
        switch (desc_.kind()) {
            case field_kind::real64: return std::get<double>(value_) == 0.0;
            case field_kind::rational: return std::get<big_rational>(value_) == 0;
            case field_kind::padic: return std::get<padic_payload>(value_).zero;
        }
        return false;
    }

    bool is_one() const { return *this == one(desc_); }

    bool is_invertible() const { return !is_zero(); }

    scalar inverse() const {
        if (is_zero()) throw division_by_zero();
        switch (desc_.kind()) {
            case field_kind::real64: return scalar(desc_, 1.0 / std::get<double>(value_));
            case field_kind::rational: return scalar(desc_, 1 / std::get<big_rational>(value_));
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(value_);
                const big_int p(desc_.prime());
                const big_int pk = boost::multiprecision::pow(p, static_cast<unsigned>(x.significance));
                // unit is coprime to p^s, so Euler's theorem applies.
                const big_int phi = pk / p * (p - 1);
                big_int inv = boost::multiprecision::powm(x.unit, phi - 1, pk);
                return scalar(desc_, padic_payload{false, -x.valuation, x.significance, std::move(inv)});
            }
        }
        throw internal_error("unreachable field kind");
    }

    /// |x| as a nonnegative binary64 value: absolute value for real64 and
    /// rational, p^(-valuation) for padic.
    double norm() const {
        switch (desc_.kind()) {
            case field_kind::real64: return std::fabs(std::get<double>(value_));
            case field_kind::rational: {
                big_rational a = std::get<big_rational>(value_);
                if (a < 0) a = -a;
                return a.convert_to<double>();
            }
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(value_);
                if (x.zero) return 0.0;
                return std::pow(static_cast<double>(desc_.prime()), -static_cast<double>(x.valuation));
            }
        }
        return 0.0;
    }

    scalar operator-() const {
        switch (desc_.kind()) {
            case field_kind::real64: return scalar(desc_, -std::get<double>(value_));
            case field_kind::rational: return scalar(desc_, -std::get<big_rational>(value_));
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(value_);
                if (x.zero) return *this;
                const big_int pk = boost::multiprecision::pow(big_int(desc_.prime()),
                                                              static_cast<unsigned>(x.significance));
                return scalar(desc_, padic_payload{false, x.valuation, x.significance, pk - x.unit});
            }
        }
        throw internal_error("unreachable field kind");
    }

    friend scalar operator+(const scalar& a, const scalar& b) {
        a.require_same_descriptor(b);
        switch (a.desc_.kind()) {
            case field_kind::real64:
                return scalar(a.desc_, std::get<double>(a.value_) + std::get<double>(b.value_));
            case field_kind::rational:
                return scalar(a.desc_, std::get<big_rational>(a.value_) + std::get<big_rational>(b.value_));
            case field_kind::padic:
                return padic_add(a, b);
        }
        throw internal_error("unreachable field kind");
    }

    friend scalar operator-(const scalar& a, const scalar& b) { return a + (-b); }

    friend scalar operator*(const scalar& a, const scalar& b) {
        a.require_same_descriptor(b);
        switch (a.desc_.kind()) {
            case field_kind::real64:
                return scalar(a.desc_, std::get<double>(a.value_) * std::get<double>(b.value_));
            case field_kind::rational:
                return scalar(a.desc_, std::get<big_rational>(a.value_) * std::get<big_rational>(b.value_));
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(a.value_);
                const auto& y = std::get<padic_payload>(b.value_);
                if (x.zero || y.zero) return zero(a.desc_);
                const int s = std::min(x.significance, y.significance);
                const big_int pk = boost::multiprecision::pow(big_int(a.desc_.prime()),
                                                              static_cast<unsigned>(s));
                big_int u = (x.unit * y.unit) % pk;
                return scalar(a.desc_, padic_payload{false, x.valuation + y.valuation, s, std::move(u)});
            }
        }
        throw internal_error("unreachable field kind");
    }

    friend bool operator==(const scalar& a, const scalar& b) {
        if (a.desc_ != b.desc_) return false;
        switch (a.desc_.kind()) {
            case field_kind::real64:
                return std::get<double>(a.value_) == std::get<double>(b.value_);
            case field_kind::rational:
                return std::get<big_rational>(a.value_) == std::get<big_rational>(b.value_);
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(a.value_);
                const auto& y = std::get<padic_payload>(b.value_);
                if (x.zero || y.zero) return x.zero == y.zero;
                if (x.valuation != y.valuation) return false;
                // Units agree where both track digits.
                const int s = std::min(x.significance, y.significance);
                const big_int pk = boost::multiprecision::pow(big_int(a.desc_.prime()),
                                                              static_cast<unsigned>(s));
                return x.unit % pk == y.unit % pk;
            }
        }
        return false;
    }

    double real_value() const { return std::get<double>(value_); }
    const big_rational& rational_value() const { return std::get<big_rational>(value_); }
    long long padic_valuation() const { return std::get<padic_payload>(value_).valuation; }
    const big_int& padic_unit() const { return std::get<padic_payload>(value_).unit; }
    int padic_significance() const { return std::get<padic_payload>(value_).significance; }

    /// Canonical text form, re-parseable by parse(): shortest round-trip
    /// decimal for real64, "n" or "n/d" for rational, "0", "u" or "p^v*u"
    /// for padic.
    std::string to_string() const {
        switch (desc_.kind()) {
            case field_kind::real64:
                return detail::double_to_string(std::get<double>(value_));
            case field_kind::rational: {
                const auto& r = std::get<big_rational>(value_);
                if (denominator(r) == 1) return numerator(r).str();
                return numerator(r).str() + "/" + denominator(r).str();
            }
            case field_kind::padic: {
                const auto& x = std::get<padic_payload>(value_);
                if (x.zero) return "0";
                if (x.valuation == 0) return x.unit.str();
                return std::to_string(desc_.prime()) + "^" + std::to_string(x.valuation) + "*" +
                       x.unit.str();
            }
        }
        throw internal_error("unreachable field kind");
    }

    /// Parses the scalar text grammar for the given field: decimal literals
    /// (real64), integers or "a/b" fractions (rational), integers or
    /// "p^v*u" literals (padic).
    static scalar parse(std::string_view text, const field_descriptor& d);

private:
    struct padic_payload {
        bool zero;
        long long valuation;
        int significance;  // tracked digits, 1..precision (precision when zero)
        big_int unit;      // 0 <= unit < p^significance, not divisible by p unless zero

        bool operator==(const padic_payload&) const = default;
    };

    template <typename Payload>
    scalar(const field_descriptor& d, Payload&& v) : desc_(d), value_(std::forward<Payload>(v)) {}

    void require_same_descriptor(const scalar& other) const {
        if (desc_ != other.desc_) throw descriptor_mismatch();
    }

    static scalar padic_from_big(const field_descriptor& d, big_int n) {
        if (n == 0) return zero(d);
        return padic_from_parts(d, 0, std::move(n));
    }

    static scalar padic_add(const scalar& a, const scalar& b) {
        const auto& x = std::get<padic_payload>(a.value_);
        const auto& y = std::get<padic_payload>(b.value_);
        if (x.zero) return b;
        if (y.zero) return a;
        const big_int p(a.desc_.prime());
        const long long m = std::min(x.valuation, y.valuation);
        const long long abs_prec =
            std::min(x.valuation + x.significance, y.valuation + y.significance);
        const int rel = static_cast<int>(abs_prec - m);  // >= 1 since significance >= 1
        const big_int pk = boost::multiprecision::pow(p, static_cast<unsigned>(rel));
        big_int sum = x.unit * boost::multiprecision::pow(p, static_cast<unsigned>(x.valuation - m)) +
                      y.unit * boost::multiprecision::pow(p, static_cast<unsigned>(y.valuation - m));
        sum %= pk;
        if (sum == 0) {
            // Cancellation past the last tracked digit: the exact zero scalar.
            return zero(a.desc_);
        }
        long long shift = 0;
        while (sum % p == 0) {
            sum /= p;
            ++shift;
        }
        return scalar(a.desc_, padic_payload{false, m + shift, static_cast<int>(rel - shift), std::move(sum)});
    }

    field_descriptor desc_;
    std::variant<double, big_rational, padic_payload> value_;
};

namespace detail {

inline bool scan_uint(std::string_view text, std::size_t& pos, std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) return false;
    out.assign(text.substr(start, pos - start));
    return true;
}

inline bool scan_int(std::string_view text, std::size_t& pos, std::string& out) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::string digits;
    if (!scan_uint(text, pos, digits)) {
        pos = start;
        return false;
    }
    out.assign(text.substr(start, pos - start));
    return true;
}

}  // namespace detail

inline scalar scalar::parse(std::string_view text, const field_descriptor& d) {
    std::size_t pos = 0;
    switch (d.kind()) {
        case field_kind::real64: {
            double v = 0;
            auto res = std::from_chars(text.data(), text.data() + text.size(), v);
            if (res.ec != std::errc() || res.ptr != text.data() + text.size())
                throw parse_error(res.ptr - text.data(), "expected a decimal literal");
            if (!std::isfinite(v))
                throw parse_error(0, "literal is not a finite number");
            return from_double(v);
        }
        case field_kind::rational: {
            std::string num;
            if (!detail::scan_int(text, pos, num)) throw parse_error(pos, "expected an integer");
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::string den;
                std::size_t den_pos = pos;
                if (!detail::scan_uint(text, pos, den)) throw parse_error(pos, "expected a denominator");
                if (pos != text.size()) throw parse_error(pos, "trailing characters after fraction");
                big_int d_num(num), d_den(den);
                if (d_den == 0) throw parse_error(den_pos, "denominator must be nonzero");
                return from_rational(big_rational(d_num, d_den));
            }
            if (pos != text.size()) throw parse_error(pos, "trailing characters after integer");
            return from_rational(big_rational(big_int(num)));
        }
        case field_kind::padic: {
            std::string first;
            if (!detail::scan_int(text, pos, first)) throw parse_error(pos, "expected an integer");
            if (pos == text.size()) {
                big_int n(first);
                if (n == 0) return zero(d);
                return padic_from_parts(d, 0, std::move(n));
            }
            if (text[pos] != '^') throw parse_error(pos, "expected '^' in p^v*u literal");
            if (big_int(first) != big_int(d.prime()))
                throw parse_error(0, "base of p^v*u literal must be the field prime " +
                                         std::to_string(d.prime()));
            ++pos;
            std::string val;
            if (!detail::scan_int(text, pos, val)) throw parse_error(pos, "expected a valuation");
            if (pos >= text.size() || text[pos] != '*')
                throw parse_error(pos, "expected '*' in p^v*u literal");
            ++pos;
            std::string unit;
            std::size_t unit_pos = pos;
            if (!detail::scan_int(text, pos, unit)) throw parse_error(pos, "expected a unit");
            if (pos != text.size()) throw parse_error(pos, "trailing characters after p^v*u literal");
            big_int u(unit);
            if (u == 0) throw parse_error(unit_pos, "unit of p^v*u literal must be nonzero");
            return padic_from_parts(d, std::stoll(val), std::move(u));
        }
    }
    throw internal_error("unreachable field kind");
}

}  // namespace grassbanach
