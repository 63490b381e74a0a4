#include "abelrank/rational.hpp"

#include <cctype>
#include <limits>

namespace abelrank {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') {
        i = 1;
    }
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw UsageError("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) {
        throw UsageError("malformed rational '" + std::string(text) + "'");
    }
    mpq_class q;
    if (slash == std::string_view::npos) {
        q = mpq_class(mpz_class(std::string(num)));
    } else {
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(den, false)) {
            throw UsageError("malformed rational '" + std::string(text) + "'");
        }
        const mpz_class d{std::string(den)};
        if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
        q = mpq_class(mpz_class(std::string(num)), d);
    }
    return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(); }

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw UsageError("not an integer: " + to_string());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw UsageError("integer out of range: " + to_string());
    return static_cast<std::int64_t>(n.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    // Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
    Rational acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= Rational(n - i);
        acc /= Rational(i + 1);
    }
    return acc;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational acc(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1U) acc *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return acc;
}

}  // namespace abelrank
