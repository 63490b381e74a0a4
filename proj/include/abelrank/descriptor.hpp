#pragma once

#include <string>
#include <vector>

#include "abelrank/poly.hpp"
#include "abelrank/rational.hpp"
#include "abelrank/sym_laurent.hpp"

namespace abelrank {

/// Fourier-transformed Chern-MacPherson class gamma_s = sum_i c_i theta^i s^i,
/// living in the subring generated by the dual polarization class theta.
///
/// Since the s-degree always equals the theta-degree, the class is stored as
/// its coefficient list; top-degree evaluation uses ev(theta^g) = g!.
class DiagonalClass {
public:
    DiagonalClass() = default;
    DiagonalClass(int g, std::vector<Rational> coeffs) : g_(g), coeffs_(std::move(coeffs)) {}

    int g() const { return g_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    /// sum_i c_i s^i with theta suppressed.
    UniPoly as_poly() const;

    /// Pull-back under multiplication by n: scales c_i by n^{2i}.
    DiagonalClass adams(unsigned n) const;

    /// ev of the s^g coefficient of a theta-suppressed polynomial: [p]_{s^g} * g!.
    Rational evaluate_top(const UniPoly& p) const;

private:
    int g_ = 0;
    std::vector<Rational> coeffs_;
};

/// One character of the spectrum, carried by its signed Poincare polynomial in s.
struct SpectrumEntry {
    UniPoly h{Var::s};

    /// b_x = iota(h).
    SymLaurent betti() const;
    /// nu_n = (-1)^{n+1} h^n, read off b_x; equals minus the coefficient of x^n.
    Rational nu(std::size_t n) const;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Complete numerical input of every generating-series computation.
struct SheafDescriptor {
    int g = 0;
    Rational chi;
    DiagonalClass gamma;
    std::vector<SpectrumEntry> spectrum;

    /// Generic rank [gamma_s]_{s^g} = c_g * g!.
    Rational generic_rank() const;
    /// chi as an exact integer; throws UsageError if chi is not integral.
    long chi_int() const;
};

struct Violation {
    std::string code;     // stable identifier, e.g. "gamma0_chi"
    std::string path;     // JSON path of the offending field
    std::string message;  // names the violated invariant
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate(const SheafDescriptor& d);

/// Smooth theta divisor of a principally polarized abelian variety of dimension g.
SheafDescriptor preset_theta(int g);
/// Prym-Tjurin curve of exponent m (m = 1: Jacobian) with Euler characteristic chi.
SheafDescriptor preset_prym(int g, int m, int chi);
/// Clean perverse sheaf on an elliptic curve with generic rank r.
SheafDescriptor preset_elliptic(int r, int chi);

}  // namespace abelrank
