#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "abelrank/rational.hpp"

namespace abelrank {

/// Name of the formal variable a polynomial is written in. Metadata only,
/// but mixing tags in arithmetic is rejected.
enum class Var { t, s };

const char* var_name(Var v);

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree with no trailing zero coefficient.
class UniPoly {
public:
    explicit UniPoly(Var var = Var::t) : var_(var) {}
    UniPoly(Var var, std::vector<Rational> coeffs);
    UniPoly(Var var, std::initializer_list<Rational> coeffs);

    static UniPoly constant(Var var, const Rational& c) { return UniPoly(var, {c}); }
    static UniPoly monomial(Var var, const Rational& c, std::size_t degree);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial (its degree is minus infinity).
    std::optional<std::size_t> degree() const;

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of var^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& at) const;

    /// Drops every term of degree > max_degree.
    UniPoly truncated(std::size_t max_degree) const;

    /// Multiplies by var^k.
    UniPoly shifted(std::size_t k) const;

    /// Exact division by var; throws UsageError if the constant term is nonzero.
    UniPoly divided_by_var() const;

    /// Coefficients padded with zeros (or truncated) to exactly `length` entries.
    std::vector<Rational> padded(std::size_t length) const;

    bool all_integer() const;

    /// Human-readable rendering such as "52t^5 + 1292t^4 - 3t".
    std::string to_string() const;
    /// LaTeX-style rendering such as "52t^{5} + 1292t^{4}".
    std::string to_latex() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize();
    void require_same_var(const UniPoly& o) const;

    Var var_;
    std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Exact add/sub/mul; throws UsageError if the variable tags differ.
UniPoly poly_arith(const UniPoly& a, const UniPoly& b, PolyOp op);

/// a^n, with a^0 = 1.
UniPoly poly_pow(const UniPoly& a, unsigned n);

/// a^n keeping only degrees <= max_degree (each intermediate product is truncated).
UniPoly poly_pow_truncated(const UniPoly& a, unsigned n, std::size_t max_degree);

/// True iff the coefficient vector padded to `length` reads the same backwards.
bool is_palindromic(const UniPoly& p, std::size_t length);

}  // namespace abelrank
