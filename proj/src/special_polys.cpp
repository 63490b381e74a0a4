#include "abelrank/special_polys.hpp"

namespace abelrank {

UniPoly eulerian(unsigned m) {
    if (m < 1) throw UsageError("eulerian: m must be >= 1");
    // Eulerian triangle A(m, k) = (k+1) A(m-1, k) + (m-k) A(m-1, k-1), A(1, 0) = 1.
    std::vector<Rational> row{Rational(1)};
    for (unsigned mm = 2; mm <= m; ++mm) {
        std::vector<Rational> next(mm);
        for (unsigned k = 0; k < mm; ++k) {
            Rational a = k < row.size() ? row[k] * Rational(k + 1) : Rational(0);
            if (k >= 1) a += row[k - 1] * Rational(mm - k);
            next[k] = a;
        }
        row = std::move(next);
    }
    return UniPoly(Var::t, std::move(row));
}

UniPoly qpoly(unsigned n) {
    if (n < 1) throw UsageError("qpoly: n must be >= 1");
    std::vector<Rational> c(n);
    for (unsigned e = 1; e <= n; ++e) {
        // binom(n+e, n-e) * 2n/(n+e) is always an integer.
        const Rational term = binomial(static_cast<long>(n + e), static_cast<long>(n - e)) *
                              Rational(static_cast<long>(2 * n), static_cast<long>(n + e));
        if (!term.is_integer()) throw ConsistencyError("qpoly: non-integral coefficient " + term.to_string());
        // -(term) * (-s)^{e-1}
        c[e - 1] = (e % 2 == 1) ? -term : term;
    }
    return UniPoly(Var::s, std::move(c));
}

SymLaurent iota(const UniPoly& h) {
    if (h.var() != Var::s) throw UsageError("iota expects a polynomial in s");
    // Horner in s = 2 - (x + x^-1).
    const SymLaurent s_image{Rational(2), Rational(-1)};
    SymLaurent acc;
    const auto& c = h.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s_image + SymLaurent::constant(*it);
    return acc;
}

UniPoly iota_inv(const SymLaurent& b) {
    UniPoly out = UniPoly::constant(Var::s, b.value_at_one());
    const auto& a = b.coeffs();
    for (std::size_t n = 1; n < a.size(); ++n) {
        if (a[n].is_zero()) continue;
        out += (qpoly(static_cast<unsigned>(n)).shifted(1)) * a[n];
    }
    return out;
}

SymLaurent adams_scale_laurent(const SymLaurent& b, unsigned n) {
    if (n < 1) throw UsageError("adams_scale_laurent: n must be >= 1");
    if (b.is_zero()) return b;
    std::vector<Rational> out((b.coeffs().size() - 1) * n + 1);
    for (std::size_t k = 0; k < b.coeffs().size(); ++k) out[k * n] = b.coeffs()[k];
    return SymLaurent(std::move(out));
}

namespace {

using LaurentSeries = std::vector<SymLaurent>;

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Coefficients of z^0..z^order in (1 - z)^{-a}.
std::vector<Rational> negative_binomial(const Rational& a, std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t k = 0; k < order; ++k) c[k + 1] = c[k] * (a + Rational(k)) / Rational(k + 1);
    return c;
}

}  // namespace

std::vector<SymLaurent> st_graded(const SymLaurent& b, std::size_t order) {
    LaurentSeries acc(order + 1);
    acc[0] = SymLaurent::constant(1);

    // x^0 factor: (1 - t)^{-a_0}.
    {
        const auto c = negative_binomial(b.coeff(0), order);
        LaurentSeries factor(order + 1);
        for (std::size_t m = 0; m <= order; ++m) factor[m] = SymLaurent::constant(c[m]);
        acc = multiply(acc, factor);
    }
    // Paired factors (1 - x^n t)^{-a_n} (1 - x^-n t)^{-a_n}; their t^m coefficient is
    // sum_j C_j C_{m-j} x^{n(2j-m)}, which is symmetric in x.
    for (std::size_t n = 1; n < b.coeffs().size(); ++n) {
        const Rational& an = b.coeffs()[n];
        if (an.is_zero()) continue;
        const auto c = negative_binomial(an, order);
        LaurentSeries factor(order + 1);
        for (std::size_t m = 0; m <= order; ++m) {
            std::vector<Rational> coeffs(n * m + 1);
            for (std::size_t j = 0; j <= m; ++j) {
                if (2 * j < m) continue;
                const Rational w = c[j] * c[m - j];
                if (2 * j == m) {
                    coeffs[0] += w;
                } else {
                    coeffs[n * (2 * j - m)] += w;
                }
            }
            factor[m] = SymLaurent(std::move(coeffs));
        }
        acc = multiply(acc, factor);
    }
    return acc;
}

}  // namespace abelrank
