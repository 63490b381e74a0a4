#include "abelrank/poly.hpp"

#include <algorithm>
#include <sstream>

namespace abelrank {

const char* var_name(Var v) { return v == Var::t ? "t" : "s"; }

UniPoly::UniPoly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
    normalize();
}

UniPoly::UniPoly(Var var, std::initializer_list<Rational> coeffs) : var_(var), coeffs_(coeffs) {
    normalize();
}

UniPoly UniPoly::monomial(Var var, const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(var, std::move(v));
}

std::optional<std::size_t> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::evaluate(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

UniPoly UniPoly::truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return UniPoly(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree + 1)));
}

UniPoly UniPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(var_, std::move(v));
}

UniPoly UniPoly::divided_by_var() const {
    if (is_zero()) return *this;
    if (!coeffs_[0].is_zero()) {
        throw UsageError("division by " + std::string(var_name(var_)) + " with nonzero constant term");
    }
    return UniPoly(var_, std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

std::vector<Rational> UniPoly::padded(std::size_t length) const {
    std::vector<Rational> v(length);
    for (std::size_t i = 0; i < std::min(length, coeffs_.size()); ++i) v[i] = coeffs_[i];
    return v;
}

bool UniPoly::all_integer() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

namespace {

std::string render(const UniPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        Rational mag = c[k].sign() < 0 ? -c[k] : c[k];
        if (first) {
            if (c[k].sign() < 0) os << '-';
        } else {
            os << (c[k].sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            if (latex && !mag.is_integer()) {
                os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
            } else {
                os << mag;
            }
        }
        if (k >= 1) os << var_name(p.var());
        if (k >= 2) {
            if (latex) {
                os << "^{" << k << "}";
            } else {
                os << '^' << k;
            }
        }
    }
    return os.str();
}

}  // namespace

std::string UniPoly::to_string() const { return render(*this, false); }
std::string UniPoly::to_latex() const { return render(*this, true); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same_var(const UniPoly& o) const {
    if (var_ != o.var_) {
        throw UsageError(std::string("variable mismatch: ") + var_name(var_) + " vs " + var_name(o.var_));
    }
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    require_same_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    require_same_var(o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

UniPoly poly_arith(const UniPoly& a, const UniPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw UsageError("unknown polynomial operation");
}

UniPoly poly_pow(const UniPoly& a, unsigned n) {
    UniPoly acc = UniPoly::constant(a.var(), 1);
    UniPoly base = a;
    while (n > 0) {
        if (n & 1U) acc *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return acc;
}

UniPoly poly_pow_truncated(const UniPoly& a, unsigned n, std::size_t max_degree) {
    UniPoly acc = UniPoly::constant(a.var(), 1);
    UniPoly base = a.truncated(max_degree);
    while (n > 0) {
        if (n & 1U) acc = (acc * base).truncated(max_degree);
        n >>= 1U;
        if (n > 0) base = (base * base).truncated(max_degree);
    }
    return acc;
}

bool is_palindromic(const UniPoly& p, std::size_t length) {
    if (p.size() > length) return false;
    const auto v = p.padded(length);
    return std::equal(v.begin(), v.end(), v.rbegin());
}

}  // namespace abelrank
