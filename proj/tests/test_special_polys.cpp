#include <doctest.h>

#include <map>

#include "abelrank/series.hpp"
#include "abelrank/special_polys.hpp"
#include "test_support.hpp"

using namespace abelrank;
using testing_support::uniform;

namespace {

UniPoly tpoly(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return UniPoly(Var::t, v);
}

UniPoly spoly(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return UniPoly(Var::s, v);
}

// Evaluates a symmetric Laurent polynomial at a nonzero rational x.
Rational eval_laurent(const SymLaurent& b, const Rational& x) {
    Rational total(0);
    const Rational inv = Rational(1) / x;
    for (std::size_t n = 0; n < b.coeffs().size(); ++n) {
        total += b.coeff(n) * (n == 0 ? Rational(1) : pow(x, static_cast<unsigned>(n)) + pow(inv, static_cast<unsigned>(n)));
    }
    return total;
}

// (1 - x^k t)^{-a}: coefficient of t^j is binom(a + j - 1, j) x^{kj}.
using Grid = std::vector<std::map<long, Rational>>;  // t-degree -> (x-exponent -> coeff)

Grid grid_mul(const Grid& a, const Grid& b) {
    Grid out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            for (const auto& [ea, ca] : a[i]) {
                for (const auto& [eb, cb] : b[j]) out[i + j][ea + eb] += ca * cb;
            }
        }
    }
    return out;
}

Grid st_oracle(const std::map<long, long>& exps, std::size_t order) {
    Grid acc(order + 1);
    acc[0][0] = 1;
    for (const auto& [k, a] : exps) {
        Grid f(order + 1);
        for (std::size_t j = 0; j <= order; ++j) {
            f[j][k * static_cast<long>(j)] = binomial(a + static_cast<long>(j) - 1, static_cast<long>(j));
        }
        acc = grid_mul(acc, f);
    }
    return acc;
}

}  // namespace

TEST_CASE("Eulerian polynomials p1, p3, p5") {
    CHECK(eulerian(1) == tpoly({1}));
    CHECK(eulerian(3) == tpoly({1, 4, 1}));
    CHECK(eulerian(5) == tpoly({1, 26, 66, 26, 1}));
    CHECK(eulerian(2) == tpoly({1, 1}));
    CHECK_THROWS_AS(eulerian(0), UsageError);
}

TEST_CASE("Eulerian polynomials are monic, palindromic and sum to m!") {
    for (unsigned m = 1; m <= 9; ++m) {
        const UniPoly p = eulerian(m);
        CHECK(p.degree() == m - 1);
        CHECK(p.coeff(m - 1) == Rational(1));
        CHECK(is_palindromic(p, m));
        CHECK(p.evaluate(Rational(1)) == factorial(m));
    }
}

TEST_CASE("Eulerian series identity against brute-force power sums") {
    const std::size_t N = 20;
    for (unsigned m = 1; m <= 9; ++m) {
        std::vector<Rational> brute(N + 1);
        for (std::size_t r = 1; r <= N; ++r) brute[r] = pow(Rational(static_cast<long>(r)), m);
        CHECK(RationalSeries(eulerian(m).shifted(1), Rational(1), m + 1).expand(N) == brute);
    }
}

TEST_CASE("q polynomials q1, q2, q3") {
    CHECK(qpoly(1) == spoly({-1}));
    CHECK(qpoly(2) == spoly({-4, 1}));
    CHECK(qpoly(3) == spoly({-9, 6, -1}));
    CHECK_THROWS_AS(qpoly(0), UsageError);
}

TEST_CASE("iota identity for q_n") {
    for (unsigned n = 1; n <= 12; ++n) {
        const UniPoly q = qpoly(n);
        CHECK(q.degree() == n - 1);
        CHECK(q.all_integer());
        CHECK(q.coeff(0) == -Rational(static_cast<long>(n) * static_cast<long>(n)));
        CHECK(iota(q.shifted(1)) == SymLaurent::orbit(n) - SymLaurent::constant(2));
        // numeric cross-check: substitute s = 2 - x - 1/x
        for (const Rational x : {Rational(2), Rational(-3), Rational(5, 7)}) {
            const Rational s = Rational(2) - x - Rational(1) / x;
            CHECK(s * q.evaluate(s) == pow(x, n) + pow(Rational(1) / x, n) - Rational(2));
        }
    }
}

TEST_CASE("iota and its inverse") {
    CHECK(iota(spoly({0, 1})) == SymLaurent({Rational(2), Rational(-1)}));
    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, 7)));
        for (auto& x : c) x = uniform(rng, -9, 9);
        const UniPoly h(Var::s, c);
        const SymLaurent b = iota(h);
        CHECK(iota_inv(b) == h);
        CHECK(iota(iota_inv(b)) == b);
        CHECK(b.value_at_one() == h.evaluate(Rational(0)));
        for (const Rational x : {Rational(3), Rational(-1, 2)}) {
            CHECK(eval_laurent(b, x) == h.evaluate(Rational(2) - x - Rational(1) / x));
        }
    }
}

TEST_CASE("theta Betti polynomial in x") {
    // h = 24 + 5s + 2s^2 + s^3 corresponds to 66 - 28(x + 1/x) + 8(x^2 + 1/x^2) - (x^3 + 1/x^3)
    CHECK(iota(spoly({24, 5, 2, 1})) == SymLaurent({Rational(66), Rational(-28), Rational(8), Rational(-1)}));
}

TEST_CASE("Adams scaling") {
    const SymLaurent b({Rational(3), Rational(-2), Rational(1)});
    const SymLaurent scaled = adams_scale_laurent(b, 3);
    CHECK(scaled.coeff_at(0) == Rational(3));
    CHECK(scaled.coeff_at(3) == Rational(-2));
    CHECK(scaled.coeff_at(-6) == Rational(1));
    CHECK(scaled.coeff_at(1) == Rational(0));
    CHECK(adams_scale_laurent(b, 1) == b);
    CHECK(scaled.value_at_one() == b.value_at_one());
}

TEST_CASE("graded symmetric powers against a direct product oracle") {
    std::mt19937_64 rng(22);
    const std::size_t order = 5;
    for (int k = 0; k < 15; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 1, 4)));
        std::map<long, long> exps;
        for (std::size_t n = 0; n < c.size(); ++n) {
            const long a = uniform(rng, -3, 3);
            c[n] = a;
            if (a == 0) continue;
            exps[static_cast<long>(n)] += a;
            if (n > 0) exps[-static_cast<long>(n)] += a;
        }
        const auto got = st_graded(SymLaurent(c), order);
        const Grid want = st_oracle(exps, order);
        REQUIRE(got.size() == order + 1);
        for (std::size_t j = 0; j <= order; ++j) {
            for (long e = -20; e <= 20; ++e) {
                const auto it = want[j].find(e);
                CHECK(got[j].coeff_at(e) == (it == want[j].end() ? Rational(0) : it->second));
            }
        }
    }
}

TEST_CASE("graded symmetric powers at x = 1 give the Euler characteristic series") {
    const SymLaurent b({Rational(66), Rational(-28), Rational(8), Rational(-1)});
    const auto st = st_graded(b, 6);
    const auto want = inverse_power_of_one_minus_t(static_cast<long>(b.value_at_one().to_int64()), 6);
    for (std::size_t j = 0; j <= 6; ++j) CHECK(st[j].value_at_one() == want[j]);
}
