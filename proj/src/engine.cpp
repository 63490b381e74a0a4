#include "abelrank/engine.hpp"

#include "abelrank/special_polys.hpp"

namespace abelrank {

namespace {

std::size_t top(const SheafDescriptor& d) { return static_cast<std::size_t>(d.g); }

// (1 - c t)^k as a polynomial in t.
UniPoly one_minus_ct_pow(const Rational& c, unsigned k) {
    return poly_pow(UniPoly(Var::t, {Rational(1), -c}), k);
}

// sum_{n=1}^{g} coeff_n t^{n-1} (1 - chi t)^{g-n}
UniPoly assemble_conv_numerator(const std::vector<Rational>& bracket, const Rational& chi, unsigned g) {
    UniPoly f(Var::t);
    for (unsigned n = 1; n <= g; ++n) {
        if (bracket[n].is_zero()) continue;
        f += UniPoly::monomial(Var::t, bracket[n], n - 1) * one_minus_ct_pow(chi, g - n);
    }
    return f;
}

// [(u)^n]_{s^g} for n = 0..g.
std::vector<Rational> power_brackets(const UniPoly& u, std::size_t g) {
    std::vector<Rational> out(g + 1);
    UniPoly power = UniPoly::constant(Var::s, 1);
    for (std::size_t n = 0; n <= g; ++n) {
        out[n] = power.coeff(g);
        power = (power * u).truncated(g);
    }
    return out;
}

long integer_exponent(const Rational& nu) {
    if (!nu.is_integer()) throw UsageError("multiplicity exponent is not an integer: " + nu.to_string());
    return static_cast<long>(nu.to_int64());
}

// prod_{n>0} (1 - q_n((1-t)^2 s) s t)^{nu_n}, truncated at s^g.
BivarTrunc bullet_product_closed(const SpectrumEntry& e, std::size_t g) {
    const SymLaurent b = e.betti();
    BivarTrunc acc = BivarTrunc::one(g);
    const UniPoly one_minus_t_sq(Var::t, {Rational(1), Rational(-2), Rational(1)});
    for (std::size_t n = 1; n < b.coeffs().size(); ++n) {
        const long nu = integer_exponent(-b.coeff(n));
        if (nu == 0) continue;
        const UniPoly q = qpoly(static_cast<unsigned>(n));
        BivarTrunc u(g);
        UniPoly tpow = UniPoly::monomial(Var::t, 1, 1);  // t (1-t)^{2j}
        for (std::size_t j = 0; j < q.size() && j + 1 <= g; ++j) {
            u += BivarTrunc::term(g, j + 1, tpow * (-q.coeff(j)));
            tpow *= one_minus_t_sq;
        }
        acc = acc * trunc_binom_pow(u, nu);
    }
    return acc;
}

std::vector<Rational> padded_coeffs(const UniPoly& p, std::size_t order) { return p.padded(order + 1); }

}  // namespace

void require_valid(const SheafDescriptor& d) {
    const auto report = validate(d);
    if (!report.ok()) throw UsageError("invalid descriptor: " + report.to_string());
}

Rational r_star_direct(const SheafDescriptor& d, unsigned n) {
    require_valid(d);
    return d.gamma.evaluate_top(poly_pow_truncated(d.gamma.as_poly(), n, top(d)));
}

Rational r_bullet_direct(const SheafDescriptor& d, unsigned n) {
    require_valid(d);
    Rational sum(0);
    for (const auto& e : d.spectrum) sum += poly_pow_truncated(e.h, n, top(d)).coeff(top(d));
    return sum;
}

Rational r_direct(const SheafDescriptor& d, unsigned n) { return r_star_direct(d, n) - r_bullet_direct(d, n); }

ConvNumerators f_polynomials(const SheafDescriptor& d) {
    require_valid(d);
    const std::size_t g = top(d);
    const UniPoly chi_const = UniPoly::constant(Var::s, d.chi);

    auto star_brackets = power_brackets(d.gamma.as_poly() - chi_const, g);
    const Rational ev = factorial(static_cast<unsigned>(g));
    for (auto& c : star_brackets) c *= ev;

    std::vector<Rational> bullet_brackets(g + 1);
    for (const auto& e : d.spectrum) {
        const auto b = power_brackets(e.h - chi_const, g);
        for (std::size_t n = 0; n <= g; ++n) bullet_brackets[n] += b[n];
    }

    ConvNumerators out;
    out.star = assemble_conv_numerator(star_brackets, d.chi, static_cast<unsigned>(g));
    out.bullet = assemble_conv_numerator(bullet_brackets, d.chi, static_cast<unsigned>(g));
    out.total = out.star - out.bullet;
    return out;
}

SymNumerators ftilde_polynomials(const SheafDescriptor& d) {
    require_valid(d);
    const std::size_t g = top(d);

    // prod_i exp(c_i t p_{2i-1}(t) s^i) = exp(sum_i c_i t p_{2i-1}(t) s^i)
    BivarTrunc u(g);
    for (std::size_t i = 1; i <= g; ++i) {
        const Rational& c = d.gamma.coeff(i);
        if (c.is_zero()) continue;
        u += BivarTrunc::term(g, i, eulerian(static_cast<unsigned>(2 * i - 1)).shifted(1) * c);
    }
    const UniPoly star_bracket = trunc_exp(u).s_coeff(g) * factorial(static_cast<unsigned>(g));

    UniPoly bullet_bracket(Var::t);
    for (const auto& e : d.spectrum) bullet_bracket += bullet_product_closed(e, g).s_coeff(g);

    SymNumerators out;
    out.star = star_bracket.divided_by_var();
    out.bullet = bullet_bracket.divided_by_var();
    out.total = out.star - out.bullet;
    return out;
}

RationalSeries z_series(const SheafDescriptor& d, SeriesKind kind) {
    if (kind == SeriesKind::conv) {
        const auto f = f_polynomials(d);
        return RationalSeries(f.total.shifted(1), d.chi, static_cast<unsigned>(d.g + 1));
    }
    const long chi = d.chi_int();
    const auto f = ftilde_polynomials(d);
    return RationalSeries(f.total.shifted(1), Rational(1), static_cast<unsigned>(2 * d.g + chi));
}

std::vector<Rational> sym_rank_series_adams(const SheafDescriptor& d, std::size_t order) {
    require_valid(d);
    const std::size_t g = top(d);

    // sum_r [r]^*(gamma - chi) t^r / r, with [r]^* scaling degree i by r^{2i}.
    BivarTrunc exponent(g);
    for (std::size_t i = 1; i <= g; ++i) {
        const Rational& c = d.gamma.coeff(i);
        if (c.is_zero()) continue;
        std::vector<Rational> tc(order + 1);
        for (std::size_t r = 1; r <= order; ++r) tc[r] = c * pow(Rational(r), static_cast<unsigned>(2 * i - 1));
        exponent += BivarTrunc::term(g, i, UniPoly(Var::t, std::move(tc)));
    }
    const UniPoly top_part = trunc_exp(exponent, order).s_coeff(g) * factorial(static_cast<unsigned>(g));
    // The degree-0 part chi contributes exp(chi sum t^r / r) = (1 - t)^{-chi}.
    return cauchy_product(padded_coeffs(top_part, order), inverse_power_of_one_minus_t(d.chi_int(), order));
}

std::vector<Rational> sym_bullet_series_product(const SheafDescriptor& d, std::size_t order) {
    require_valid(d);
    const std::size_t g = top(d);
    std::vector<Rational> weight(order + 1);  // t / (1-t)^2 = sum k t^k
    for (std::size_t k = 1; k <= order; ++k) weight[k] = Rational(k);
    const UniPoly t_over(Var::t, weight);

    std::vector<Rational> total(order + 1);
    for (const auto& e : d.spectrum) {
        const SymLaurent b = e.betti();
        BivarTrunc acc = BivarTrunc::one(g);
        for (std::size_t n = 1; n < b.coeffs().size(); ++n) {
            const long nu = integer_exponent(-b.coeff(n));
            if (nu == 0) continue;
            const UniPoly q = qpoly(static_cast<unsigned>(n));
            BivarTrunc w(g);
            for (std::size_t j = 0; j < q.size() && j + 1 <= g; ++j) {
                w += BivarTrunc::term(g, j + 1, t_over * (-q.coeff(j)));
            }
            acc = BivarTrunc::multiply(acc, trunc_binom_pow(w, nu, order), order);
        }
        const auto series = cauchy_product(padded_coeffs(acc.s_coeff(g), order),
                                           inverse_power_of_one_minus_t(integer_exponent(e.h.coeff(0)), order));
        for (std::size_t k = 0; k <= order; ++k) total[k] += series[k];
    }
    return total;
}

std::vector<Rational> sym_bullet_series_graded(const SheafDescriptor& d, std::size_t order) {
    require_valid(d);
    const std::size_t g = top(d);
    std::vector<Rational> total(order + 1);
    for (const auto& e : d.spectrum) {
        const auto graded = st_graded(e.betti(), order);
        for (std::size_t k = 0; k <= order; ++k) total[k] += iota_inv(graded[k]).coeff(g);
    }
    return total;
}

std::vector<Rational> sym_rank_series_betti(const SheafDescriptor& d, std::size_t order) {
    auto closed = sym_bullet_series_product(d, order);
    const auto graded = sym_bullet_series_graded(d, order);
    for (std::size_t k = 0; k <= order; ++k) {
        if (closed[k] != graded[k]) {
            throw ConsistencyError("bullet symmetric ranks disagree at n = " + std::to_string(k) + ": " +
                                   closed[k].to_string() + " vs " + graded[k].to_string());
        }
    }
    return closed;
}

TraceValues trace_values(const SheafDescriptor& d, const Partition& sigma) {
    require_valid(d);
    if (sigma.empty()) throw UsageError("trace_values: empty cycle type");
    const std::size_t g = top(d);

    UniPoly star_prod = UniPoly::constant(Var::s, 1);
    for (int part : sigma.parts()) {
        star_prod = (star_prod * d.gamma.adams(static_cast<unsigned>(part)).as_poly()).truncated(g);
    }

    Rational bullet(0);
    for (const auto& e : d.spectrum) {
        const SymLaurent b = e.betti();
        SymLaurent prod = SymLaurent::constant(1);
        for (int part : sigma.parts()) prod = prod * adams_scale_laurent(b, static_cast<unsigned>(part));
        bullet += iota_inv(prod).coeff(g);
    }

    TraceValues tv;
    tv.star = d.gamma.evaluate_top(star_prod);
    tv.bullet = bullet;
    tv.total = tv.star - tv.bullet;
    return tv;
}

namespace {

struct ClassData {
    Partition sigma;
    std::int64_t size;
    TraceValues trace;
};

std::vector<ClassData> class_traces(const SheafDescriptor& d, int n) {
    std::vector<ClassData> out;
    for (auto& sigma : partitions_of(n)) {
        TraceValues tv = trace_values(d, sigma);
        const auto size = class_size(sigma);
        out.push_back({std::move(sigma), size, std::move(tv)});
    }
    return out;
}

TraceValues average(const std::vector<ClassData>& classes, const Partition& alpha) {
    TraceValues acc;
    for (const auto& c : classes) {
        const Rational w = Rational(c.size) * Rational(character(alpha, c.sigma));
        acc.star += w * c.trace.star;
        acc.bullet += w * c.trace.bullet;
    }
    const Rational nfact = factorial(static_cast<unsigned>(alpha.degree()));
    acc.star /= nfact;
    acc.bullet /= nfact;
    acc.total = acc.star - acc.bullet;
    return acc;
}

Rational checked_rank(const TraceValues& parts, const Partition& alpha) {
    if (!parts.total.is_integer()) {
        throw ConsistencyError("Schur rank for " + alpha.to_string() + " is not an integer: " + parts.total.to_string());
    }
    return parts.total;
}

}  // namespace

TraceValues schur_rank_parts(const SheafDescriptor& d, const Partition& alpha) {
    if (alpha.degree() < 1) throw UsageError("schur_rank: alpha must have degree >= 1");
    return average(class_traces(d, alpha.degree()), alpha);
}

Rational schur_rank(const SheafDescriptor& d, const Partition& alpha) {
    return checked_rank(schur_rank_parts(d, alpha), alpha);
}

std::vector<SchurRow> schur_table(const SheafDescriptor& d, int n) {
    if (n < 1) throw UsageError("schur_table: n must be >= 1");
    const auto classes = class_traces(d, n);
    std::vector<SchurRow> rows;
    for (auto& alpha : partitions_of(n)) {
        Rational rank = checked_rank(average(classes, alpha), alpha);
        const auto dim = dimension(alpha);
        rows.push_back({std::move(alpha), dim, std::move(rank)});
    }
    return rows;
}

}  // namespace abelrank
