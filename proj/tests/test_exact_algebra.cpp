#include <doctest.h>

#include <map>

#include "abelrank/series.hpp"
#include "abelrank/sym_laurent.hpp"
#include "test_support.hpp"

using namespace abelrank;
using testing_support::random_poly;
using testing_support::random_rational;
using testing_support::uniform;

TEST_CASE("rational parse and canonical form") {
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse("10/5").to_string() == "2");
    CHECK(Rational::parse("0/7").to_string() == "0");
    CHECK(Rational::parse("-0").to_string() == "0");
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "+-3", "2/3/4", " 1", "6/-4"}) {
        CHECK_THROWS_AS(Rational::parse(bad), UsageError);
    }
}

TEST_CASE("rational predicates") {
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 6).is_integer());
    CHECK(Rational(-1, 6).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(12).to_int64() == 12);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}

TEST_CASE("rational field axioms on seeded samples") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("factorial and generalized binomial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(10) == Rational(3628800));
    // generalized binomial against the falling-factorial definition
    for (long n = -6; n <= 8; ++n) {
        for (long k = 0; k <= 8; ++k) {
            Rational falling(1);
            for (long j = 0; j < k; ++j) falling *= Rational(n - j);
            CHECK(binomial(n, k) == falling / factorial(static_cast<unsigned>(k)));
        }
    }
    CHECK(binomial(5, -1) == Rational(0));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("polynomial basics") {
    const UniPoly zero(Var::t);
    CHECK_FALSE(zero.degree().has_value());
    CHECK(zero.is_zero());
    const UniPoly p(Var::t, {Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1u);
    CHECK(p.size() == 2);
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.evaluate(Rational(3)) == Rational(7));
    CHECK(p.to_string() == "2t + 1");
    CHECK(UniPoly(Var::t, {Rational(0), Rational(58), Rational(-342)}).to_string() == "-342t^2 + 58t");
    CHECK(zero.to_string() == "0");
    CHECK(p.shifted(2) == UniPoly(Var::t, {Rational(0), Rational(0), Rational(1), Rational(2)}));
    CHECK(p.shifted(2).divided_by_var().divided_by_var() == p);
    CHECK_THROWS_AS(p.divided_by_var(), UsageError);
    CHECK(p.padded(4).size() == 4);
}

TEST_CASE("polynomial variable tags must agree") {
    const UniPoly a(Var::t, {Rational(1)});
    const UniPoly b(Var::s, {Rational(1)});
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(poly_arith(a, b, PolyOp::mul), UsageError);
}

TEST_CASE("polynomial ring axioms and degree of products") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 200; ++k) {
        const UniPoly a = random_poly(rng, Var::s, 5), b = random_poly(rng, Var::s, 5), c = random_poly(rng, Var::s, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(poly_arith(a, b, PolyOp::sub) + b == a);
        if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
        if (a.is_zero() || b.is_zero()) CHECK((a * b).is_zero());
        // evaluation is a ring homomorphism
        const Rational x = random_rational(rng, 5);
        CHECK((a * b + c).evaluate(x) == a.evaluate(x) * b.evaluate(x) + c.evaluate(x));
    }
}

TEST_CASE("powers against repeated multiplication") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 40; ++k) {
        const UniPoly a = random_poly(rng, Var::s, 3);
        UniPoly acc = UniPoly::constant(Var::s, 1);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(poly_pow(a, n) == acc);
            CHECK(poly_pow_truncated(a, n, 4) == acc.truncated(4));
            acc *= a;
        }
    }
}

TEST_CASE("palindromy") {
    CHECK(is_palindromic(UniPoly(Var::t, {Rational(0), Rational(36), Rational(1152), Rational(4824), Rational(1152),
                                          Rational(36)}),
                         7));
    CHECK(is_palindromic(UniPoly(Var::t, {Rational(1), Rational(4), Rational(1)}), 3));
    CHECK_FALSE(is_palindromic(UniPoly(Var::t, {Rational(1), Rational(4), Rational(1)}), 4));
    CHECK(is_palindromic(UniPoly(Var::t), 5));
}

namespace {

// Dense Laurent oracle: exponent -> coefficient.
std::map<long, Rational> expand_laurent(const SymLaurent& b) {
    std::map<long, Rational> m;
    for (std::size_t n = 0; n < b.coeffs().size(); ++n) {
        const auto k = static_cast<long>(n);
        m[k] += b.coeff(n);
        if (n > 0) m[-k] += b.coeff(n);
    }
    return m;
}

}  // namespace

TEST_CASE("symmetric Laurent product agrees with full Laurent convolution") {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 100; ++k) {
        std::vector<Rational> ca(static_cast<std::size_t>(uniform(rng, 0, 4))), cb(static_cast<std::size_t>(uniform(rng, 0, 4)));
        for (auto& x : ca) x = random_rational(rng);
        for (auto& x : cb) x = random_rational(rng);
        const SymLaurent a(ca), b(cb);
        const auto ma = expand_laurent(a), mb = expand_laurent(b);
        std::map<long, Rational> prod;
        for (const auto& [i, x] : ma) {
            for (const auto& [j, y] : mb) prod[i + j] += x * y;
        }
        const SymLaurent ab = a * b;
        for (long e = -10; e <= 10; ++e) {
            const Rational want = prod.count(e) ? prod[e] : Rational(0);
            CHECK(ab.coeff_at(e) == want);
        }
        CHECK(ab.value_at_one() == a.value_at_one() * b.value_at_one());
    }
    CHECK(SymLaurent::orbit(0) == SymLaurent::constant(2));
    CHECK_FALSE(SymLaurent().breadth().has_value());
}

TEST_CASE("truncated exponential matches its defining sum") {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 20; ++k) {
        const std::size_t g = static_cast<std::size_t>(uniform(rng, 1, 4));
        BivarTrunc u(g);
        for (std::size_t i = 1; i <= g; ++i) u += BivarTrunc::term(g, i, random_poly(rng, Var::t, 2));
        BivarTrunc sum = BivarTrunc::one(g), power = BivarTrunc::one(g);
        for (unsigned j = 1; j <= g; ++j) {
            power = power * u;
            sum += power * (Rational(1) / factorial(j));
        }
        CHECK(trunc_exp(u) == sum);
        CHECK(trunc_exp(u, 3) == sum.truncated_t(3));
    }
    CHECK_THROWS_AS(trunc_exp(BivarTrunc::one(2)), UsageError);
}

TEST_CASE("binomial powers: positive exponents multiply out, negative ones invert") {
    std::mt19937_64 rng(16);
    for (int k = 0; k < 20; ++k) {
        const std::size_t g = static_cast<std::size_t>(uniform(rng, 1, 4));
        BivarTrunc u(g);
        for (std::size_t i = 1; i <= g; ++i) u += BivarTrunc::term(g, i, random_poly(rng, Var::t, 2));
        const BivarTrunc one_plus_u = BivarTrunc::one(g) + u;
        const long e = uniform(rng, 0, 5);
        BivarTrunc acc = BivarTrunc::one(g);
        for (long j = 0; j < e; ++j) acc = acc * one_plus_u;
        CHECK(trunc_binom_pow(u, e) == acc);
        CHECK(trunc_binom_pow(u, e) * trunc_binom_pow(u, -e) == BivarTrunc::one(g));
    }
}

TEST_CASE("rational series expansion inverts the pole") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 30; ++k) {
        const UniPoly num = random_poly(rng, Var::t, 4);
        const Rational base = random_rational(rng, 6);
        const auto order = static_cast<unsigned>(uniform(rng, 1, 6));
        const std::size_t N = 12;
        const auto coeffs = RationalSeries(num, base, order).expand(N);
        REQUIRE(coeffs.size() == N + 1);
        // multiply back by (1 - base t)^order and compare with the numerator
        const UniPoly pole = poly_pow(UniPoly(Var::t, {Rational(1), -base}), order);
        const UniPoly back = (UniPoly(Var::t, coeffs) * pole).truncated(N);
        CHECK(back == num.truncated(N));
    }
    CHECK(inverse_power_of_one_minus_t(2, 4) == std::vector<Rational>{1, 2, 3, 4, 5});
    CHECK(inverse_power_of_one_minus_t(-2, 4) == std::vector<Rational>{1, -2, 1, 0, 0});
    CHECK(cauchy_product({1, 1}, {1, -1}) == std::vector<Rational>{1, 0});
}
