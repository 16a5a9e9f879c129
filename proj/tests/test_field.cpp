#include <catch2/catch_amalgamated.hpp>

#include <grassbanach/field.hpp>

#include <random>

using namespace grassbanach;

namespace {

scalar pad(const field_descriptor& d, long long v, long long u) {
    return scalar::padic_from_parts(d, v, big_int(u));
}

}  // namespace

TEST_CASE("descriptor factories validate their arguments") {
    CHECK(field_descriptor::real64().kind() == field_kind::real64);
    CHECK(field_descriptor::rational().kind() == field_kind::rational);
    CHECK_FALSE(field_descriptor::real64().is_ultrametric());
    CHECK_FALSE(field_descriptor::rational().is_ultrametric());

    auto q5 = field_descriptor::padic(5, 4);
    CHECK(q5.prime() == 5);
    CHECK(q5.precision() == 4);
    CHECK(q5.is_ultrametric());
    CHECK(field_descriptor::padic(3).precision() == 20);

    CHECK_THROWS_AS(field_descriptor::padic(4), invalid_descriptor);
    CHECK_THROWS_AS(field_descriptor::padic(1), invalid_descriptor);
    CHECK_THROWS_AS(field_descriptor::padic(0), invalid_descriptor);
    CHECK_THROWS_AS(field_descriptor::padic(561), invalid_descriptor);  // Carmichael
    CHECK_THROWS_AS(field_descriptor::padic(5, 0), invalid_descriptor);
    CHECK_NOTHROW(field_descriptor::padic(2147483647));                 // Mersenne prime
    CHECK_THROWS_AS(field_descriptor::padic(2147483647ull * 2147483647ull), invalid_descriptor);
}

TEST_CASE("real64 arithmetic and norm") {
    auto d = field_descriptor::real64();
    scalar a = scalar::from_double(1.5);
    scalar b = scalar::from_double(-0.25);
    CHECK((a + b).real_value() == 1.25);
    CHECK((a - b).real_value() == 1.75);
    CHECK((a * b).real_value() == -0.375);
    CHECK((-b).real_value() == 0.25);
    CHECK(b.norm() == 0.25);
    CHECK(a.inverse().real_value() == Catch::Approx(2.0 / 3.0));
    CHECK(scalar::zero(d).is_zero());
    CHECK(scalar::one(d).real_value() == 1.0);
    CHECK_FALSE(scalar::zero(d).is_invertible());
    CHECK_THROWS_AS(scalar::zero(d).inverse(), division_by_zero);
}

TEST_CASE("rational arithmetic is exact") {
    auto d = field_descriptor::rational();
    scalar a = scalar::parse("3/2", d);
    scalar b = scalar::parse("-1/6", d);
    CHECK((a + b).to_string() == "4/3");
    CHECK((a * b).to_string() == "-1/4");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().to_string() == "2/3");
    CHECK(b.norm() == Catch::Approx(1.0 / 6.0));
    CHECK(scalar::from_integer(d, -7).to_string() == "-7");

    // One third has no finite binary expansion; exactness distinguishes it.
    scalar third = scalar::parse("1/3", d);
    scalar sum = third + third + third;
    CHECK(sum == scalar::one(d));
}

TEST_CASE("padic canonicalization and multiplication") {
    auto d = field_descriptor::padic(5, 4);

    scalar x = scalar::from_integer(d, 75);  // 75 = 5^2 * 3
    CHECK(x.padic_valuation() == 2);
    CHECK(x.padic_unit() == 3);
    CHECK(x.norm() == Catch::Approx(1.0 / 25.0));

    scalar y = scalar::from_integer(d, -2);  // -2 = 623 mod 625
    CHECK(y.padic_valuation() == 0);
    CHECK(y.padic_unit() == 623);
    CHECK(y.norm() == 1.0);

    scalar xy = x * y;
    CHECK(xy.padic_valuation() == 2);
    CHECK(xy.padic_unit() == big_int(623 * 3 % 625));

    CHECK(pad(d, 0, 3).inverse().padic_unit() == 417);  // 3 * 417 = 1251 = 2*625 + 1
    CHECK((pad(d, 0, 3) * pad(d, 0, 3).inverse()) == scalar::one(d));
    CHECK(pad(d, 2, 3).inverse().padic_valuation() == -2);
}

TEST_CASE("padic addition tracks significance and cancels exactly") {
    auto d3 = field_descriptor::padic(3, 5);

    // 3 + 6 = 9: units 1 and 2 at valuation 1 sum to 3^2 * 1.
    scalar s = scalar::from_integer(d3, 3) + scalar::from_integer(d3, 6);
    CHECK(s.padic_valuation() == 2);
    CHECK(s.padic_unit() == 1);
    // One leading digit cancelled, so one tracked digit is gone.
    CHECK(s.padic_significance() == 4);

    // Total cancellation collapses to the exact zero.
    scalar t = scalar::from_integer(d3, 7);
    CHECK((t + (-t)).is_zero());
    CHECK((t - t).is_zero());

    // Ultrametric inequality |x+y| <= max(|x|,|y|).
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<long long> units(1, 100000);
    for (int i = 0; i < 200; ++i) {
        scalar a = scalar::from_integer(d3, units(rng));
        scalar b = scalar::from_integer(d3, -units(rng));
        scalar c = a + b;
        CHECK(c.norm() <= std::max(a.norm(), b.norm()) * (1 + 1e-12));
    }
}

TEST_CASE("padic equality compares shared digits") {
    auto d = field_descriptor::padic(5, 4);
    scalar full = pad(d, 0, 7);

    // Force a reduced-significance value: (7 + 5^2) - 5^2 keeps v=0 digits.
    scalar reduced = (pad(d, 0, 7 + 25) + (-pad(d, 2, 1)));
    CHECK(reduced == full);
    CHECK(full == reduced);
    CHECK_FALSE(pad(d, 0, 7) == pad(d, 1, 7));
    CHECK_FALSE(pad(d, 0, 7) == pad(d, 0, 8));
    CHECK(scalar::zero(d) == scalar::zero(d));
    CHECK_FALSE(scalar::zero(d) == full);
}

TEST_CASE("scalars of different fields never mix") {
    scalar r = scalar::from_double(1.0);
    scalar q = scalar::from_rational(big_rational(1));
    CHECK_THROWS_AS(r + q, descriptor_mismatch);
    CHECK_THROWS_AS(r * q, descriptor_mismatch);
    CHECK_FALSE(r == q);
    auto d3 = field_descriptor::padic(3);
    auto d5 = field_descriptor::padic(5);
    CHECK_THROWS_AS(scalar::one(d3) + scalar::one(d5), descriptor_mismatch);
}

TEST_CASE("scalar text round-trips") {
    auto dr = field_descriptor::real64();
    for (const char* text : {"0", "1", "-1", "1.5", "-0.25", "12345.6789"}) {
        scalar v = scalar::parse(text, dr);
        CHECK(scalar::parse(v.to_string(), dr) == v);
    }
    CHECK(scalar::parse("1.5", dr).to_string() == "1.5");

    auto dq = field_descriptor::rational();
    for (const char* text : {"0", "-7", "3/2", "-22/7", "1000000000000000000000/3"}) {
        scalar v = scalar::parse(text, dq);
        CHECK(v.to_string() == (std::string(text) == "0" ? "0" : text));
    }

    auto dp = field_descriptor::padic(5, 4);
    CHECK(scalar::parse("0", dp).is_zero());
    CHECK(scalar::parse("7", dp).to_string() == "7");
    CHECK(scalar::parse("75", dp).to_string() == "5^2*3");
    CHECK(scalar::parse("5^-1*2", dp).padic_valuation() == -1);
    CHECK(scalar::parse("5^2*3", dp) == scalar::from_integer(dp, 75));
    CHECK(scalar::parse("-2", dp).padic_unit() == 623);
    // Units carrying factors of p normalize.
    CHECK(scalar::parse("5^1*10", dp).padic_valuation() == 2);
}

TEST_CASE("scalar parse rejects malformed text") {
    auto dr = field_descriptor::real64();
    auto dq = field_descriptor::rational();
    auto dp = field_descriptor::padic(5, 4);

    CHECK_THROWS_AS(scalar::parse("abc", dr), parse_error);
    CHECK_THROWS_AS(scalar::parse("", dr), parse_error);
    CHECK_THROWS_AS(scalar::parse("1/0", dq), parse_error);
    CHECK_THROWS_AS(scalar::parse("1/", dq), parse_error);
    CHECK_THROWS_AS(scalar::parse("3/2x", dq), parse_error);
    CHECK_THROWS_AS(scalar::parse("1.5", dq), parse_error);
    CHECK_THROWS_AS(scalar::parse("3^1*2", dp), parse_error);  // base must be the prime
    CHECK_THROWS_AS(scalar::parse("5^1", dp), parse_error);
    CHECK_THROWS_AS(scalar::parse("5^1*0", dp), parse_error);
    CHECK_THROWS_AS(scalar::parse("5^x*1", dp), parse_error);

    try {
        scalar::parse("3/2x", dq);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("field axioms hold under random sampling") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long long> small(-50, 50);
    std::uniform_int_distribution<long long> denom(1, 30);

    auto dq = field_descriptor::rational();
    auto dp = field_descriptor::padic(7, 6);

    for (int i = 0; i < 300; ++i) {
        scalar a = scalar::from_rational(big_rational(small(rng), denom(rng)));
        scalar b = scalar::from_rational(big_rational(small(rng), denom(rng)));
        scalar c = scalar::from_rational(big_rational(small(rng), denom(rng)));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == scalar::one(dq));
    }

    for (int i = 0; i < 300; ++i) {
        scalar a = scalar::from_integer(dp, small(rng));
        scalar b = scalar::from_integer(dp, small(rng));
        scalar c = scalar::from_integer(dp, small(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == scalar::one(dp));
        CHECK((a * b).norm() <= a.norm() * b.norm() * (1 + 1e-12));
    }
}
