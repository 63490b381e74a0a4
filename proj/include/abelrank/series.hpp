#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abelrank/poly.hpp"
#include "abelrank/rational.hpp"

namespace abelrank {

/// Bivariate series sum_{i=0}^{g} c_i(t) s^i, truncated in s at order g.
///
/// The t-coefficients are exact polynomials. Products discard every
/// s-degree above g; an optional t-cap additionally discards t-degrees above
/// the cap, which turns the type into a doubly truncated power series.
class BivarTrunc {
public:
    explicit BivarTrunc(std::size_t order);
    BivarTrunc(std::size_t order, std::vector<UniPoly> s_coeffs);

    /// c(t) * s^i as a truncated series (zero if i > order).
    static BivarTrunc term(std::size_t order, std::size_t i, UniPoly c);
    static BivarTrunc one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const UniPoly& s_coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<UniPoly>& s_coeffs() const { return coeffs_; }

    BivarTrunc truncated_t(std::size_t t_cap) const;

    BivarTrunc& operator+=(const BivarTrunc& o);
    BivarTrunc& operator-=(const BivarTrunc& o);
    BivarTrunc& operator*=(const Rational& c);

    friend BivarTrunc operator+(BivarTrunc a, const BivarTrunc& b) { return a += b; }
    friend BivarTrunc operator-(BivarTrunc a, const BivarTrunc& b) { return a -= b; }
    friend BivarTrunc operator*(BivarTrunc a, const Rational& c) { return a *= c; }
    friend BivarTrunc operator*(const BivarTrunc& a, const BivarTrunc& b) { return multiply(a, b); }

    friend bool operator==(const BivarTrunc& a, const BivarTrunc& b) { return a.coeffs_ == b.coeffs_; }

    static BivarTrunc multiply(const BivarTrunc& a, const BivarTrunc& b,
                               std::optional<std::size_t> t_cap = std::nullopt);

private:
    void require_same_order(const BivarTrunc& o) const;
    std::vector<UniPoly> coeffs_;
};

/// sum_{k=0}^{g} u^k / k!, for u without an s^0 part (throws UsageError otherwise).
BivarTrunc trunc_exp(const BivarTrunc& u, std::optional<std::size_t> t_cap = std::nullopt);

/// (1 + u)^exponent via the binomial series; finite because u has no s^0 part.
BivarTrunc trunc_binom_pow(const BivarTrunc& u, long exponent,
                           std::optional<std::size_t> t_cap = std::nullopt);

/// numerator(t) / (1 - base t)^pole_order.
class RationalSeries {
public:
    RationalSeries(UniPoly numerator, Rational pole_base, unsigned pole_order);

    const UniPoly& numerator() const { return numerator_; }
    const Rational& pole_base() const { return pole_base_; }
    unsigned pole_order() const { return pole_order_; }

    /// Coefficients of t^0..t^order, exact.
    std::vector<Rational> expand(std::size_t order) const;

private:
    UniPoly numerator_;
    Rational pole_base_;
    unsigned pole_order_;
};

inline std::vector<Rational> series_expand(const RationalSeries& z, std::size_t order) { return z.expand(order); }

/// Coefficients of t^0..t^order of (1 - t)^{-exponent}; exponent may be any integer.
std::vector<Rational> inverse_power_of_one_minus_t(long exponent, std::size_t order);

/// Cauchy product of two coefficient sequences, truncated to the shorter length.
std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace abelrank
