#include "abelrank/series.hpp"

#include <algorithm>
#include <string>

namespace abelrank {

BivarTrunc::BivarTrunc(std::size_t order) : coeffs_(order + 1, UniPoly(Var::t)) {}

BivarTrunc::BivarTrunc(std::size_t order, std::vector<UniPoly> s_coeffs) : coeffs_(std::move(s_coeffs)) {
    if (coeffs_.size() > order + 1) coeffs_.resize(order + 1);
    coeffs_.resize(order + 1, UniPoly(Var::t));
    for (const auto& c : coeffs_) {
        if (c.var() != Var::t) throw UsageError("BivarTrunc coefficients must be polynomials in t");
    }
}

BivarTrunc BivarTrunc::term(std::size_t order, std::size_t i, UniPoly c) {
    BivarTrunc r(order);
    if (i <= order) {
        if (c.var() != Var::t) throw UsageError("BivarTrunc coefficients must be polynomials in t");
        r.coeffs_[i] = std::move(c);
    }
    return r;
}

BivarTrunc BivarTrunc::one(std::size_t order) { return term(order, 0, UniPoly::constant(Var::t, 1)); }

BivarTrunc BivarTrunc::truncated_t(std::size_t t_cap) const {
    BivarTrunc r = *this;
    for (auto& c : r.coeffs_) c = c.truncated(t_cap);
    return r;
}

void BivarTrunc::require_same_order(const BivarTrunc& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw UsageError("BivarTrunc truncation orders differ");
}

BivarTrunc& BivarTrunc::operator+=(const BivarTrunc& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BivarTrunc& BivarTrunc::operator-=(const BivarTrunc& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BivarTrunc& BivarTrunc::operator*=(const Rational& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

BivarTrunc BivarTrunc::multiply(const BivarTrunc& a, const BivarTrunc& b, std::optional<std::size_t> t_cap) {
    a.require_same_order(b);
    const std::size_t g = a.order();
    BivarTrunc r(g);
    for (std::size_t i = 0; i <= g; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= g; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            UniPoly prod = a.coeffs_[i] * b.coeffs_[j];
            if (t_cap) prod = prod.truncated(*t_cap);
            r.coeffs_[i + j] += prod;
        }
    }
    return r;
}

namespace {

void require_nilpotent(const BivarTrunc& u, const char* what) {
    if (!u.s_coeff(0).is_zero()) {
        throw UsageError(std::string(what) + ": argument has a nonzero s^0 part");
    }
}

}  // namespace

BivarTrunc trunc_exp(const BivarTrunc& u, std::optional<std::size_t> t_cap) {
    require_nilpotent(u, "trunc_exp");
    const std::size_t g = u.order();
    BivarTrunc acc = BivarTrunc::one(g);
    BivarTrunc power = BivarTrunc::one(g);
    for (std::size_t k = 1; k <= g; ++k) {
        power = BivarTrunc::multiply(power, u, t_cap) * Rational(1, static_cast<long>(k));
        acc += power;
    }
    return acc;
}

BivarTrunc trunc_binom_pow(const BivarTrunc& u, long exponent, std::optional<std::size_t> t_cap) {
    require_nilpotent(u, "trunc_binom_pow");
    const std::size_t g = u.order();
    BivarTrunc acc = BivarTrunc::one(g);
    BivarTrunc power = BivarTrunc::one(g);
    for (std::size_t k = 1; k <= g; ++k) {
        power = BivarTrunc::multiply(power, u, t_cap);
        const Rational c = binomial(exponent, static_cast<long>(k));
        if (!c.is_zero()) acc += power * c;
    }
    if (t_cap) acc = acc.truncated_t(*t_cap);
    return acc;
}

RationalSeries::RationalSeries(UniPoly numerator, Rational pole_base, unsigned pole_order)
    : numerator_(std::move(numerator)), pole_base_(std::move(pole_base)), pole_order_(pole_order) {
    if (pole_order_ < 1) throw UsageError("pole order must be at least 1");
    if (numerator_.var() != Var::t) throw UsageError("series numerator must be a polynomial in t");
}

std::vector<Rational> RationalSeries::expand(std::size_t order) const {
    // (1 - c t)^{-k} = sum_j binom(j + k - 1, k - 1) c^j t^j
    std::vector<Rational> pole(order + 1);
    Rational cpow(1);
    for (std::size_t j = 0; j <= order; ++j) {
        pole[j] = binomial(static_cast<long>(j + pole_order_ - 1), static_cast<long>(pole_order_ - 1)) * cpow;
        cpow *= pole_base_;
    }
    return cauchy_product(numerator_.padded(order + 1), pole);
}

std::vector<Rational> inverse_power_of_one_minus_t(long exponent, std::size_t order) {
    // (1 - t)^{-a} = sum_k binom(a + k - 1, k) t^k; the generalized binomial covers a <= 0.
    std::vector<Rational> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out[k] = binomial(exponent + static_cast<long>(k) - 1, static_cast<long>(k));
    return out;
}

std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace abelrank
