#include "abelrank/descriptor.hpp"

#include <sstream>

#include "abelrank/special_polys.hpp"

namespace abelrank {

UniPoly DiagonalClass::as_poly() const { return UniPoly(Var::s, coeffs_); }

DiagonalClass DiagonalClass::adams(unsigned n) const {
    std::vector<Rational> scaled = coeffs_;
    const Rational n2 = Rational(n) * Rational(n);
    Rational scale(1);
    for (auto& c : scaled) {
        c *= scale;
        scale *= n2;
    }
    return DiagonalClass(g_, std::move(scaled));
}

Rational DiagonalClass::evaluate_top(const UniPoly& p) const {
    return p.coeff(static_cast<std::size_t>(g_)) * factorial(static_cast<unsigned>(g_));
}

SymLaurent SpectrumEntry::betti() const { return iota(h); }

Rational SpectrumEntry::nu(std::size_t n) const { return -betti().coeff(n); }

Rational SheafDescriptor::generic_rank() const {
    return gamma.coeff(static_cast<std::size_t>(g)) * factorial(static_cast<unsigned>(g));
}

long SheafDescriptor::chi_int() const {
    if (!chi.is_integer()) throw UsageError("chi must be an integer, got " + chi.to_string());
    return static_cast<long>(chi.to_int64());
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].path << ": " << violations[i].message;
    }
    return os.str();
}

ValidationReport validate(const SheafDescriptor& d) {
    ValidationReport report;
    auto fail = [&](std::string code, std::string path, std::string message) {
        report.violations.push_back({std::move(code), std::move(path), std::move(message)});
    };

    if (d.g < 1) {
        fail("g_positive", "$.g", "g >= 1 violated (dimension of the abelian variety)");
        return report;
    }
    if (!d.chi.is_integer()) fail("chi_integer", "$.chi", "chi must be an integer");
    if (d.chi.sign() < 0) fail("chi_nonnegative", "$.chi", "chi >= 0 violated (Euler characteristic of a perverse sheaf)");

    const auto& c = d.gamma.coeffs();
    if (d.gamma.g() != d.g) fail("gamma_g", "$.gamma", "gamma dimension differs from g");
    if (c.size() != static_cast<std::size_t>(d.g) + 1) {
        fail("gamma_length", "$.gamma", "gamma must have exactly g+1 coefficients");
    } else {
        if (c[0] != d.chi) fail("gamma0_chi", "$.gamma[0]", "gamma_0 = chi violated");
        if (c.back().sign() < 0) {
            fail("generic_rank_nonnegative", "$.gamma[" + std::to_string(d.g) + "]",
                 "gamma_g >= 0 violated (generic rank is nonnegative)");
        }
    }

    for (std::size_t k = 0; k < d.spectrum.size(); ++k) {
        const auto& h = d.spectrum[k].h;
        const std::string path = "$.spectrum[" + std::to_string(k) + "]";
        if (h.var() != Var::s) fail("spectrum_var", path, "spectrum entry must be a polynomial in s");
        if (!h.all_integer()) fail("spectrum_integral", path, "signed Poincare polynomial must have integer coefficients");
        if (h.coeff(0) != d.chi) fail("spectrum_h0_chi", path + "[0]", "h(0) = chi violated");
        if (h.degree() && *h.degree() >= static_cast<std::size_t>(d.g)) {
            fail("spectrum_degree", path, "deg h < g violated (signed Poincare polynomial of a clean twist)");
        }
    }
    return report;
}

SheafDescriptor preset_theta(int g) {
    if (g < 1) throw UsageError("theta preset requires g >= 1");
    const auto gu = static_cast<unsigned>(g);
    std::vector<Rational> gamma(gu + 1);
    for (unsigned i = 0; i < gu; ++i) gamma[i] = factorial(gu - i) / factorial(i);
    // gamma[g] stays 0: a divisor has generic rank zero.

    // h = g! + sum_{k=1}^{g-1} Catalan(k) s^{g-k}
    std::vector<Rational> h(gu);
    h[0] = factorial(gu);
    for (unsigned k = 1; k < gu; ++k) h[gu - k] = binomial(2 * k, k) / Rational(k + 1);

    SheafDescriptor d;
    d.g = g;
    d.chi = factorial(gu);
    d.gamma = DiagonalClass(g, std::move(gamma));
    d.spectrum.push_back({UniPoly(Var::s, std::move(h))});
    return d;
}

SheafDescriptor preset_prym(int g, int m, int chi) {
    // For g = 1 the curve is A itself and h = chi + s would have degree g.
    if (g < 2) throw UsageError("prym preset requires g >= 2");
    if (m < 1) throw UsageError("prym preset requires m >= 1");
    if (chi < 0) throw UsageError("prym preset requires chi >= 0");
    std::vector<Rational> gamma(static_cast<std::size_t>(g) + 1);
    gamma[0] = chi;
    gamma[1] += m;
    SheafDescriptor d;
    d.g = g;
    d.chi = chi;
    d.gamma = DiagonalClass(g, std::move(gamma));
    d.spectrum.push_back({UniPoly(Var::s, {Rational(chi), Rational(1)})});
    return d;
}

SheafDescriptor preset_elliptic(int r, int chi) {
    if (r < 1) throw UsageError("elliptic preset requires r >= 1");
    if (chi < 1) throw UsageError("elliptic preset requires chi >= 1");
    SheafDescriptor d;
    d.g = 1;
    d.chi = chi;
    d.gamma = DiagonalClass(1, {Rational(chi), Rational(r)});
    return d;
}

}  // namespace abelrank
