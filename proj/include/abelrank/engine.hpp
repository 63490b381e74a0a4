#pragma once

#include <cstddef>
#include <vector>

#include "abelrank/descriptor.hpp"
#include "abelrank/poly.hpp"
#include "abelrank/rational.hpp"
#include "abelrank/series.hpp"
#include "abelrank/symgroup.hpp"

namespace abelrank {

/// Numerators of the convolution-power series: Z = t f / (1 - chi t)^{g+1}.
struct ConvNumerators {
    UniPoly star{Var::t};
    UniPoly bullet{Var::t};
    UniPoly total{Var::t};  // star - bullet
};

/// Numerators of the symmetric-power series: Z~ = t f~ / (1 - t)^{2g + chi}.
struct SymNumerators {
    UniPoly star{Var::t};
    UniPoly bullet{Var::t};
    UniPoly total{Var::t};
};

struct TraceValues {
    Rational star;
    Rational bullet;
    Rational total;  // star - bullet
};

enum class SeriesKind { conv, sym };

// --- convolution powers -----------------------------------------------------

/// r*(n) = ev [gamma_s^n]_{s^g}, by direct power expansion.
Rational r_star_direct(const SheafDescriptor& d, unsigned n);

/// r.(n) = sum over the spectrum of [h^n]_{s^g}, by direct power expansion.
Rational r_bullet_direct(const SheafDescriptor& d, unsigned n);

/// r(n) = r*(n) - r.(n).
Rational r_direct(const SheafDescriptor& d, unsigned n);

/// Closed-form numerators f*, f., f with deg <= g-1:
/// f(t) = sum_{n=1}^{g} [(x - chi)^n]_{s^g} t^{n-1} (1 - chi t)^{g-n}.
ConvNumerators f_polynomials(const SheafDescriptor& d);

// --- symmetric powers -------------------------------------------------------

/// Closed-form numerators f~*, f~., f~ with deg <= 2g-2 (exp / binomial products
/// truncated at s^g, then divided by t).
SymNumerators ftilde_polynomials(const SheafDescriptor& d);

/// Z or Z~ as an exact rational series. `sym` requires integral chi.
RationalSeries z_series(const SheafDescriptor& d, SeriesKind kind);

/// r~*(0..order) through the Adams exponential exp(sum_r [r]^* gamma t^r / r),
/// independent of the Eulerian polynomials.
std::vector<Rational> sym_rank_series_adams(const SheafDescriptor& d, std::size_t order);

/// r~.(0..order) through the s-variable product formula and, independently,
/// through the graded symmetric-power series in x followed by iota_inv. Throws
/// ConsistencyError naming the first differing index if the routes disagree.
std::vector<Rational> sym_rank_series_betti(const SheafDescriptor& d, std::size_t order);

/// Individual routes of sym_rank_series_betti, exposed for testing.
std::vector<Rational> sym_bullet_series_product(const SheafDescriptor& d, std::size_t order);
std::vector<Rational> sym_bullet_series_graded(const SheafDescriptor& d, std::size_t order);

// --- Schur functors ---------------------------------------------------------

/// Trace of a permutation of cycle type sigma on P^{*n}.
TraceValues trace_values(const SheafDescriptor& d, const Partition& sigma);

/// Generic rank of S^alpha(P), averaged over conjugacy classes. Throws
/// ConsistencyError if the result is not an integer.
Rational schur_rank(const SheafDescriptor& d, const Partition& alpha);

/// Star and bullet parts of schur_rank (no integrality check).
TraceValues schur_rank_parts(const SheafDescriptor& d, const Partition& alpha);

struct SchurRow {
    Partition alpha;
    std::int64_t dim = 0;
    Rational rank;
};

/// schur_rank for every alpha of n in partition order; traces are computed once.
std::vector<SchurRow> schur_table(const SheafDescriptor& d, int n);

/// Throws UsageError listing the violations if `validate(d)` fails.
void require_valid(const SheafDescriptor& d);

}  // namespace abelrank
