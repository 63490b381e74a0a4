#pragma once

#include <cstddef>
#include <vector>

#include "abelrank/poly.hpp"
#include "abelrank/sym_laurent.hpp"

namespace abelrank {

/// Eulerian polynomial p_m(t), defined by sum_{r>=1} r^m t^r = t p_m(t) / (1-t)^{m+1}.
/// Monic of degree m-1. Requires m >= 1.
UniPoly eulerian(unsigned m);

/// q_n(s), defined by x^n + x^-n - 2 = iota(s q_n(s)). Degree n-1. Requires n >= 1.
UniPoly qpoly(unsigned n);

/// Substitutes s = 2 - x - x^-1 into a polynomial in s.
SymLaurent iota(const UniPoly& h);

/// Inverse of iota: a_0 + sum a_n (x^n + x^-n) maps to b(1) + sum a_n s q_n(s).
UniPoly iota_inv(const SymLaurent& b);

/// Adams operation x^k -> x^{nk}. Requires n >= 1.
SymLaurent adams_scale_laurent(const SymLaurent& b, unsigned n);

/// Coefficients of t^0..t^order of prod_{k in Z} (1 - x^k t)^{-a_k}, the
/// graded symmetric-power series of b = sum a_k x^k. Exponents must be integers.
std::vector<SymLaurent> st_graded(const SymLaurent& b, std::size_t order);

}  // namespace abelrank
