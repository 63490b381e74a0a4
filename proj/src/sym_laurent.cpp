#include "abelrank/sym_laurent.hpp"

#include <algorithm>
#include <sstream>

namespace abelrank {

SymLaurent::SymLaurent(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

SymLaurent::SymLaurent(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

SymLaurent SymLaurent::orbit(std::size_t n) {
    if (n == 0) return constant(2);
    std::vector<Rational> v(n + 1);
    v[n] = 1;
    return SymLaurent(std::move(v));
}

std::optional<std::size_t> SymLaurent::breadth() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational SymLaurent::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

Rational SymLaurent::coeff_at(long k) const { return coeff(static_cast<std::size_t>(k < 0 ? -k : k)); }

Rational SymLaurent::value_at_one() const {
    Rational acc = coeff(0);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) acc += Rational(2) * coeffs_[n];
    return acc;
}

std::string SymLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Rational& a = coeffs_[n];
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() < 0 ? " - " : " + ");
        else if (a.sign() < 0) os << '-';
        first = false;
        const Rational mag = a.sign() < 0 ? -a : a;
        if (n == 0) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag;
            if (n == 1) os << "(x + x^-1)";
            else os << "(x^" << n << " + x^-" << n << ")";
        }
    }
    return os.str();
}

void SymLaurent::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

SymLaurent& SymLaurent::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const long da = static_cast<long>(a.coeffs_.size()) - 1;
    const long db = static_cast<long>(b.coeffs_.size()) - 1;
    // Only non-negative output degrees are needed; the product is symmetric.
    std::vector<Rational> out(static_cast<std::size_t>(da + db + 1));
    for (long i = -da; i <= da; ++i) {
        const Rational& ai = a.coeffs_[static_cast<std::size_t>(i < 0 ? -i : i)];
        if (ai.is_zero()) continue;
        const long jlo = std::max(-db, -i);
        for (long j = jlo; j <= db; ++j) {
            out[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j < 0 ? -j : j)];
        }
    }
    return SymLaurent(std::move(out));
}

}  // namespace abelrank
