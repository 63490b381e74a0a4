#include "abelrank/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "abelrank/engine.hpp"
#include "abelrank/special_polys.hpp"

namespace abelrank {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::functional_eq, "functional_eq"}, {Suite::schur_sum, "schur_sum"},
    {Suite::adams_routes, "adams_routes"},   {Suite::degree_bounds, "degree_bounds"},
    {Suite::closed_forms, "closed_forms"},
};

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    // Runs `body`, which returns an empty string on success or a witness on
    // failure. Exceptions are failures too.
    void run(std::string name, const std::function<std::string()>& body) {
        Check c{std::move(name), false, {}};
        try {
            c.witness = body();
            c.pass = c.witness.empty();
        } catch (const std::exception& e) {
            c.witness = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
};

std::string compare_sequences(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t from = 0) {
    for (std::size_t k = from; k < std::min(a.size(), b.size()); ++k) {
        if (a[k] != b[k]) {
            return "first difference at n=" + std::to_string(k) + ": " + a[k].to_string() + " vs " + b[k].to_string();
        }
    }
    return {};
}

std::string compare_polys(const UniPoly& got, const UniPoly& want) {
    if (got == want) return {};
    return "got " + got.to_string() + ", expected " + want.to_string();
}

void suite_functional_eq(const SheafDescriptor& d, Recorder& rec) {
    const auto f = ftilde_polynomials(d);
    const std::size_t len = static_cast<std::size_t>(2 * d.g - 1);
    auto check = [&](const char* name, const UniPoly& p) {
        rec.run(std::string("functional_eq.") + name, [&]() -> std::string {
            if (is_palindromic(p, len)) return {};
            return p.to_string() + " is not palindromic of length " + std::to_string(len);
        });
    };
    check("f_tilde_star", f.star);
    check("f_tilde_bullet", f.bullet);
    check("f_tilde", f.total);
}

void suite_degree_bounds(const SheafDescriptor& d, Recorder& rec) {
    const auto f = f_polynomials(d);
    const auto ft = ftilde_polynomials(d);
    const auto g = static_cast<std::size_t>(d.g);
    auto deg_ok = [](const UniPoly& p, std::size_t bound) { return !p.degree() || *p.degree() <= bound; };

    rec.run("degree_bounds.f", [&]() -> std::string {
        for (const auto* p : {&f.star, &f.bullet, &f.total}) {
            if (!deg_ok(*p, g - 1)) return p->to_string() + " exceeds degree g-1";
        }
        return {};
    });
    rec.run("degree_bounds.f_tilde", [&]() -> std::string {
        for (const auto* p : {&ft.star, &ft.bullet, &ft.total}) {
            if (!deg_ok(*p, 2 * g - 2)) return p->to_string() + " exceeds degree 2g-2";
        }
        return {};
    });
    rec.run("degree_bounds.integral", [&]() -> std::string {
        for (const auto* p : {&f.star, &f.bullet, &ft.star, &ft.bullet}) {
            if (!p->all_integer()) return p->to_string() + " has non-integer coefficients";
        }
        return {};
    });
    rec.run("degree_bounds.constant_term", [&]() -> std::string {
        const Rational r = d.generic_rank();
        if (f.total.coeff(0) == r && ft.total.coeff(0) == r) return {};
        return "f(0)=" + f.total.coeff(0).to_string() + ", f~(0)=" + ft.total.coeff(0).to_string() +
               ", generic rank=" + r.to_string();
    });
    rec.run("degree_bounds.full_support", [&]() -> std::string {
        if (d.generic_rank().sign() <= 0) return {};
        if (ft.total.degree() == 2 * g - 2) return {};
        return "generic rank > 0 but deg f~ != 2g-2: " + ft.total.to_string();
    });
}

void suite_schur_sum(const SheafDescriptor& d, const VerifyOptions& opt, Recorder& rec) {
    for (int n = 1; n <= opt.max_n; ++n) {
        rec.run("schur_sum.n" + std::to_string(n), [&]() -> std::string {
            Rational sum(0);
            for (const auto& row : schur_table(d, n)) sum += Rational(row.dim) * row.rank;
            const Rational r = r_direct(d, static_cast<unsigned>(n));
            if (sum == r) return {};
            return "sum dim*rank = " + sum.to_string() + ", r(n) = " + r.to_string();
        });
        rec.run("schur_sum.identity_trace.n" + std::to_string(n), [&]() -> std::string {
            const auto tv = trace_values(d, Partition::ones(n));
            const auto un = static_cast<unsigned>(n);
            const Rational rs = r_star_direct(d, un);
            const Rational rb = r_bullet_direct(d, un);
            if (tv.star == rs && tv.bullet == rb && tv.total == rs - rb) return {};
            return "trace at identity (" + tv.star.to_string() + "," + tv.bullet.to_string() + ") vs (" +
                   rs.to_string() + "," + rb.to_string() + ")";
        });
    }
}

void suite_adams_routes(const SheafDescriptor& d, const VerifyOptions& opt, Recorder& rec) {
    const std::size_t N = opt.route_order;
    const auto g = static_cast<unsigned>(d.g);

    rec.run("adams_routes.conv", [&]() -> std::string {
        const auto f = f_polynomials(d);
        const auto star = RationalSeries(f.star.shifted(1), d.chi, g + 1).expand(N);
        const auto bullet = RationalSeries(f.bullet.shifted(1), d.chi, g + 1).expand(N);
        std::vector<Rational> star_direct(N + 1), bullet_direct(N + 1);
        for (std::size_t n = 1; n <= N; ++n) {
            star_direct[n] = r_star_direct(d, static_cast<unsigned>(n));
            bullet_direct[n] = r_bullet_direct(d, static_cast<unsigned>(n));
        }
        if (auto w = compare_sequences(star, star_direct, 1); !w.empty()) return "star " + w;
        if (auto w = compare_sequences(bullet, bullet_direct, 1); !w.empty()) return "bullet " + w;
        return {};
    });

    const auto pole = static_cast<unsigned>(2 * d.g + d.chi_int());
    rec.run("adams_routes.sym_star", [&]() -> std::string {
        const auto ft = ftilde_polynomials(d);
        return compare_sequences(RationalSeries(ft.star.shifted(1), 1, pole).expand(N), sym_rank_series_adams(d, N));
    });
    rec.run("adams_routes.sym_bullet", [&]() -> std::string {
        const auto ft = ftilde_polynomials(d);
        return compare_sequences(RationalSeries(ft.bullet.shifted(1), 1, pole).expand(N), sym_rank_series_betti(d, N));
    });
    rec.run("adams_routes.schur_symmetric", [&]() -> std::string {
        const auto z = z_series(d, SeriesKind::sym).expand(static_cast<std::size_t>(opt.max_n));
        for (int n = 1; n <= opt.max_n; ++n) {
            const Rational r = schur_rank(d, Partition({n}));
            if (r != z[static_cast<std::size_t>(n)]) {
                return "n=" + std::to_string(n) + ": schur rank " + r.to_string() + " vs series " +
                       z[static_cast<std::size_t>(n)].to_string();
            }
        }
        return {};
    });
}

// gamma = chi + m s (m > 0 integer) and spectrum = { chi + s }, g >= 2.
std::optional<long> prym_exponent(const SheafDescriptor& d) {
    if (d.g < 2 || d.spectrum.size() != 1) return std::nullopt;
    if (d.spectrum[0].h != UniPoly(Var::s, {d.chi, Rational(1)})) return std::nullopt;
    const auto& c = d.gamma.coeffs();
    if (c.size() < 2 || !c[1].is_integer() || c[1].sign() <= 0) return std::nullopt;
    for (std::size_t i = 2; i < c.size(); ++i) {
        if (!c[i].is_zero()) return std::nullopt;
    }
    return static_cast<long>(c[1].to_int64());
}

void suite_closed_forms(const SheafDescriptor& d, const VerifyOptions& opt, Recorder& rec) {
    const auto g = static_cast<std::size_t>(d.g);
    rec.run("closed_forms.generic_rank", [&]() -> std::string {
        const Rational r = d.generic_rank();
        const auto f = f_polynomials(d).total.coeff(0);
        const auto ft = ftilde_polynomials(d).total.coeff(0);
        if (f == r && ft == r) return {};
        return "f(0)=" + f.to_string() + ", f~(0)=" + ft.to_string() + ", generic rank=" + r.to_string();
    });

    if (auto m = prym_exponent(d)) {
        const Rational mg = pow(Rational(*m), static_cast<unsigned>(g));
        const Rational gfact = factorial(static_cast<unsigned>(g));
        rec.run("closed_forms.prym_f", [&]() {
            return compare_polys(f_polynomials(d).total, UniPoly::monomial(Var::t, mg * gfact - Rational(1), g - 1));
        });
        rec.run("closed_forms.prym_f_tilde", [&]() {
            return compare_polys(ftilde_polynomials(d).total, UniPoly::monomial(Var::t, mg, g - 1));
        });
        rec.run("closed_forms.prym_traces", [&]() -> std::string {
            for (int n = 1; n <= opt.max_n; ++n) {
                for (const auto& sigma : partitions_of(n)) {
                    UniPoly star = UniPoly::constant(Var::s, 1);
                    UniPoly bullet = UniPoly::constant(Var::s, 1);
                    for (int part : sigma.parts()) {
                        star *= UniPoly(Var::s, {d.chi, Rational(part) * Rational(part) * Rational(*m)});
                        bullet *= UniPoly::constant(Var::s, d.chi) - qpoly(static_cast<unsigned>(part)).shifted(1);
                    }
                    const auto tv = trace_values(d, sigma);
                    const Rational want_star = gfact * star.coeff(g);
                    const Rational want_bullet = bullet.coeff(g);
                    if (tv.star != want_star || tv.bullet != want_bullet) {
                        return sigma.to_string() + ": (" + tv.star.to_string() + "," + tv.bullet.to_string() +
                               ") vs (" + want_star.to_string() + "," + want_bullet.to_string() + ")";
                    }
                }
            }
            return {};
        });
    }

    if (d.g == 1 && d.spectrum.empty()) {
        const Rational r = d.generic_rank();
        rec.run("closed_forms.elliptic_f", [&]() -> std::string {
            const UniPoly want = UniPoly::constant(Var::t, r);
            if (auto w = compare_polys(f_polynomials(d).total, want); !w.empty()) return "f: " + w;
            if (auto w = compare_polys(ftilde_polynomials(d).total, want); !w.empty()) return "f~: " + w;
            return {};
        });
        rec.run("closed_forms.elliptic_traces", [&]() -> std::string {
            for (int n = 1; n <= opt.max_n; ++n) {
                for (const auto& sigma : partitions_of(n)) {
                    long squares = 0;
                    for (int part : sigma.parts()) squares += static_cast<long>(part) * part;
                    const Rational want = r * pow(d.chi, static_cast<unsigned>(sigma.length() - 1)) * Rational(squares);
                    const auto tv = trace_values(d, sigma);
                    if (tv.star != want || !tv.bullet.is_zero() || tv.total != want) {
                        return sigma.to_string() + ": c=" + tv.total.to_string() + ", expected " + want.to_string();
                    }
                }
            }
            return {};
        });
    }
}

long draw(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

}  // namespace

std::string_view suite_name(Suite s) {
    for (const auto& [suite, name] : kSuiteNames) {
        if (suite == s) return name;
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (const auto& [suite, n] : kSuiteNames) {
        if (n == name) return suite;
    }
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (const auto& entry : kSuiteNames) out.push_back(entry.first);
    return out;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyReport verify(const SheafDescriptor& d, const std::vector<Suite>& suites, const VerifyOptions& options) {
    require_valid(d);
    VerifyReport report;
    Recorder rec(report);
    for (Suite s : suites) {
        switch (s) {
            case Suite::functional_eq: suite_functional_eq(d, rec); break;
            case Suite::schur_sum: suite_schur_sum(d, options, rec); break;
            case Suite::adams_routes: suite_adams_routes(d, options, rec); break;
            case Suite::degree_bounds: suite_degree_bounds(d, rec); break;
            case Suite::closed_forms: suite_closed_forms(d, options, rec); break;
        }
    }
    return report;
}

std::vector<SheafDescriptor> random_descriptors(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SheafDescriptor> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        SheafDescriptor d;
        d.g = static_cast<int>(draw(rng, 1, 5));
        const long chi = draw(rng, 1, 24);
        d.chi = chi;
        std::vector<Rational> gamma(static_cast<std::size_t>(d.g) + 1);
        gamma[0] = chi;
        for (int i = 1; i < d.g; ++i) gamma[static_cast<std::size_t>(i)] = draw(rng, -3, 3);
        gamma[static_cast<std::size_t>(d.g)] = draw(rng, 0, 2);
        d.gamma = DiagonalClass(d.g, std::move(gamma));
        const long entries = draw(rng, 0, 3);
        for (long e = 0; e < entries; ++e) {
            std::vector<Rational> h(static_cast<std::size_t>(d.g));
            h[0] = chi;
            for (int j = 1; j < d.g; ++j) h[static_cast<std::size_t>(j)] = draw(rng, -3, 3);
            d.spectrum.push_back({UniPoly(Var::s, std::move(h))});
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace abelrank
