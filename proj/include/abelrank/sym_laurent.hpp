#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "abelrank/rational.hpp"

namespace abelrank {

/// Symmetric Laurent polynomial a_0 + sum_{n>0} a_n (x^n + x^-n).
///
/// Only the non-negative half is stored, so asymmetric data cannot be
/// represented. Entry n of `coeffs()` is a_n; trailing zeros are dropped.
class SymLaurent {
public:
    SymLaurent() = default;
    explicit SymLaurent(std::vector<Rational> coeffs);
    SymLaurent(std::initializer_list<Rational> coeffs);

    static SymLaurent constant(const Rational& c) { return SymLaurent({c}); }
    /// x^n + x^-n for n > 0, or 2 for n = 0.
    static SymLaurent orbit(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    /// Largest n with a_n != 0, or nullopt for zero.
    std::optional<std::size_t> breadth() const;

    /// a_n for n >= 0.
    Rational coeff(std::size_t n) const;
    /// Coefficient of x^k for any integer k.
    Rational coeff_at(long k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Value at x = 1, i.e. a_0 + 2 sum a_n.
    Rational value_at_one() const;

    std::string to_string() const;

    SymLaurent& operator+=(const SymLaurent& o);
    SymLaurent& operator-=(const SymLaurent& o);
    SymLaurent& operator*=(const Rational& c);

    friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
    friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
    friend SymLaurent operator*(SymLaurent a, const Rational& c) { return a *= c; }
    friend SymLaurent operator*(const Rational& c, SymLaurent a) { return a *= c; }
    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);

    friend bool operator==(const SymLaurent& a, const SymLaurent& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace abelrank
