#include "abelrank/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "abelrank/descriptor_json.hpp"
#include "abelrank/engine.hpp"
#include "abelrank/verify.hpp"

namespace abelrank {

namespace {

/// Raised after validate() fails; maps to exit 2.
class InvalidDescriptor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, text, latex };

struct Request {
    std::string preset;
    std::string input;
    std::optional<int> g, m, chi, r;
    std::string kind = "conv";
    std::optional<std::size_t> order;
    std::string alpha;
    std::optional<int> n;
    bool all = false;
    std::string sigma;
    std::string format = "json";
    std::string suite;
    std::string sweep;
    std::optional<std::size_t> random;
    std::uint64_t seed = 0;
};

struct Labeled {
    std::string label;
    SheafDescriptor d;
};

Format to_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "latex") return Format::latex;
    return Format::json;
}

std::size_t max_order() {
    const char* env = std::getenv("ABELRANK_MAX_ORDER");
    if (!env) return kDefaultMaxOrder;
    const std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("ABELRANK_MAX_ORDER must be a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

std::size_t resolve_order(const Request& req, std::size_t fallback) {
    const std::size_t n = req.order.value_or(fallback);
    const std::size_t cap = max_order();
    if (n > cap) {
        throw UsageError("--order " + std::to_string(n) + " exceeds the maximum " + std::to_string(cap) +
                         " (set ABELRANK_MAX_ORDER to raise it)");
    }
    return n;
}

int need(const std::optional<int>& v, const char* flag, const std::string& preset) {
    if (!v) throw UsageError(std::string("preset ") + preset + " requires " + flag);
    return *v;
}

SheafDescriptor make_preset(const std::string& name, const std::map<std::string, int>& p) {
    auto get = [&](const char* key) -> std::optional<int> {
        auto it = p.find(key);
        return it == p.end() ? std::nullopt : std::optional<int>(it->second);
    };
    if (name == "theta") return preset_theta(need(get("g"), "--g", name));
    if (name == "prym") {
        const int g = need(get("g"), "--g", name);
        return preset_prym(g, get("m").value_or(1), get("chi").value_or(2 * g - 2));
    }
    return preset_elliptic(need(get("r"), "--r", name), need(get("chi"), "--chi", name));
}

std::string preset_label(const std::string& name, const std::map<std::string, int>& p) {
    std::string out = name + "(";
    bool first = true;
    for (const auto& [k, v] : p) {
        out += (first ? "" : ",") + k + "=" + std::to_string(v);
        first = false;
    }
    return out + ")";
}

std::map<std::string, int> preset_params(const Request& req) {
    std::map<std::string, int> p;
    if (req.g) p["g"] = *req.g;
    if (req.m) p["m"] = *req.m;
    if (req.chi) p["chi"] = *req.chi;
    if (req.r) p["r"] = *req.r;
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_valid(const SheafDescriptor& d) {
    const auto report = validate(d);
    if (report.ok()) return;
    std::string msg = "invalid descriptor:";
    for (const auto& v : report.violations) msg += "\n  " + v.path + ": " + v.message + " [" + v.code + "]";
    throw InvalidDescriptor(msg);
}

// "g=2..6,m=1..3" -> ordered ranges
std::vector<std::pair<std::string, std::pair<int, int>>> parse_sweep(const std::string& text) {
    std::vector<std::pair<std::string, std::pair<int, int>>> out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("malformed --sweep '" + text + "'");
        }
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("malformed --sweep item '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string_view range = std::string_view(item).substr(eq + 1);
        const auto dots = range.find("..");
        const int lo = to_int(range.substr(0, dots));
        const int hi = dots == std::string_view::npos ? lo : to_int(range.substr(dots + 2));
        if (hi < lo) throw UsageError("empty --sweep range '" + item + "'");
        if (hi - lo > 64) throw UsageError("--sweep range too long '" + item + "'");
        for (const auto& prev : out) {
            if (prev.first == key) throw UsageError("--sweep repeats '" + key + "'");
        }
        out.push_back({key, {lo, hi}});
    }
    if (out.empty()) throw UsageError("empty --sweep");
    return out;
}

const std::vector<std::string>& preset_keys(const std::string& preset) {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"theta", {"g"}}, {"prym", {"g", "m", "chi"}}, {"elliptic", {"r", "chi"}}};
    return keys.at(preset);
}

std::vector<Labeled> load_descriptors(const Request& req) {
    const int sources = (!req.preset.empty()) + (!req.input.empty()) + (req.random.has_value());
    if (sources != 1) throw UsageError("exactly one of --preset, --input, --random is required");
    if (!req.sweep.empty() && req.preset.empty()) throw UsageError("--sweep requires --preset");

    std::vector<Labeled> out;
    if (req.random) {
        std::size_t k = 0;
        for (auto& d : random_descriptors(*req.random, req.seed)) {
            out.push_back({"random[" + std::to_string(k++) + "]", std::move(d)});
        }
    } else if (!req.input.empty()) {
        SheafDescriptor d;
        try {
            d = parse_descriptor(read_file(req.input));
        } catch (const SchemaError& e) {
            throw InvalidDescriptor(std::string("invalid descriptor: ") + e.what());
        }
        out.push_back({req.input, std::move(d)});
    } else {
        auto base = preset_params(req);
        for (const auto& [k, v] : base) {
            const auto& allowed = preset_keys(req.preset);
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
                throw UsageError("preset " + req.preset + " does not take --" + k);
            }
        }
        if (req.sweep.empty()) {
            out.push_back({preset_label(req.preset, base), make_preset(req.preset, base)});
        } else {
            const auto ranges = parse_sweep(req.sweep);
            const auto& allowed = preset_keys(req.preset);
            for (const auto& [key, range] : ranges) {
                if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                    throw UsageError("preset " + req.preset + " cannot sweep '" + key + "'");
                }
                if (base.count(key)) throw UsageError("--" + key + " is also swept");
            }
            std::vector<std::map<std::string, int>> combos{base};
            for (const auto& [key, range] : ranges) {
                std::vector<std::map<std::string, int>> next;
                for (const auto& c : combos) {
                    for (int v = range.first; v <= range.second; ++v) {
                        auto e = c;
                        e[key] = v;
                        next.push_back(std::move(e));
                    }
                }
                combos = std::move(next);
            }
            for (const auto& c : combos) out.push_back({preset_label(req.preset, c), make_preset(req.preset, c)});
        }
    }
    for (const auto& l : out) check_valid(l.d);
    return out;
}

SheafDescriptor load_single(const Request& req) {
    if (req.random || !req.sweep.empty()) throw UsageError("--random and --sweep are only accepted by verify");
    return load_descriptors(req).front().d;
}

Json ints_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string pole_text(const Rational& base, long order) {
    return "(1 - " + (base == Rational(1) ? std::string() : base.to_string()) + "t)^" + std::to_string(order);
}

std::string join(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].to_string();
    return s;
}

int cmd_series(const Request& req, std::ostream& out) {
    if (req.kind != "conv" && req.kind != "sym") throw UsageError("--kind must be conv or sym");
    const SheafDescriptor d = load_single(req);
    const std::size_t order = resolve_order(req, 10);
    const bool sym = req.kind == "sym";

    std::array<std::pair<std::string, UniPoly>, 3> numerators{
        std::pair{std::string(), UniPoly(Var::t)}, std::pair{std::string(), UniPoly(Var::t)},
        std::pair{std::string(), UniPoly(Var::t)}};
    if (sym) {
        const auto f = ftilde_polynomials(d);
        numerators = {std::pair{std::string("f_tilde_star"), f.star}, std::pair{std::string("f_tilde_bullet"), f.bullet},
                      std::pair{std::string("f_tilde"), f.total}};
    } else {
        const auto f = f_polynomials(d);
        numerators = {std::pair{std::string("f_star"), f.star}, std::pair{std::string("f_bullet"), f.bullet},
                      std::pair{std::string("f"), f.total}};
    }
    const RationalSeries z = z_series(d, sym ? SeriesKind::sym : SeriesKind::conv);
    const auto coeffs = z.expand(order);

    switch (to_format(req.format)) {
        case Format::json: {
            Json doc;
            doc["descriptor"] = descriptor_to_json(d);
            doc["kind"] = req.kind;
            for (const auto& [name, p] : numerators) doc[name] = poly_to_json(p);
            doc["pole"] = {{"base", z.pole_base().to_string()}, {"order", z.pole_order()}};
            doc["coefficients"] = rationals_to_json(coeffs);
            emit(out, doc);
            break;
        }
        case Format::text:
            for (const auto& [name, p] : numerators) out << name << " = " << p.to_string() << '\n';
            out << "pole = " << pole_text(z.pole_base(), static_cast<long>(z.pole_order())) << '\n';
            out << "coefficients = " << join(coeffs) << '\n';
            break;
        case Format::latex: {
            const char* names[] = {sym ? "\\tilde f^{*}(t)" : "f^{*}(t)", sym ? "\\tilde f^{\\bullet}(t)" : "f^{\\bullet}(t)",
                                   sym ? "\\tilde f(t)" : "f(t)"};
            for (std::size_t i = 0; i < 3; ++i) out << names[i] << " = " << numerators[i].second.to_latex() << '\n';
            out << (sym ? "\\tilde Z(t)" : "Z(t)") << " = \\frac{t\\," << (sym ? "\\tilde f" : "f") << "(t)}{"
                << pole_text(z.pole_base(), static_cast<long>(z.pole_order())) << "}\n";
            break;
        }
    }
    return exit_ok;
}

Partition parse_partition(const std::string& text, const char* flag) {
    Partition p = Partition::parse(text);
    if (p.empty()) throw UsageError(std::string(flag) + " must be a non-empty partition such as 2,1");
    if (p.degree() > kMaxSymmetricDegree) {
        throw UsageError(std::string(flag) + " has degree above " + std::to_string(kMaxSymmetricDegree));
    }
    return p;
}

int cmd_schur(const Request& req, std::ostream& out) {
    std::optional<Partition> alpha;
    if (!req.alpha.empty()) alpha = parse_partition(req.alpha, "--alpha");
    if (!alpha && !req.all) throw UsageError("schur requires --alpha or --all");
    int n = alpha ? alpha->degree() : req.n.value_or(0);
    if (req.n && alpha && *req.n != alpha->degree()) throw UsageError("--n differs from the degree of --alpha");
    if (req.all && (n < 1 || n > kMaxSymmetricDegree)) {
        throw UsageError("--all needs --n in 1.." + std::to_string(kMaxSymmetricDegree));
    }
    const SheafDescriptor d = load_single(req);

    std::vector<SchurRow> table;
    Rational weighted(0), r_n(0);
    if (req.all) {
        table = schur_table(d, n);
        for (const auto& row : table) weighted += Rational(row.dim) * row.rank;
        r_n = r_direct(d, static_cast<unsigned>(n));
    }
    std::optional<Rational> rank;
    if (alpha) {
        rank = schur_rank(d, *alpha);
    }

    switch (to_format(req.format)) {
        case Format::json: {
            Json doc;
            doc["descriptor"] = descriptor_to_json(d);
            if (alpha) {
                doc["alpha"] = ints_to_json(*alpha);
                doc["rank"] = rank->to_string();
            }
            if (req.all) {
                doc["n"] = n;
                Json rows = Json::array();
                for (const auto& row : table) {
                    rows.push_back({{"alpha", ints_to_json(row.alpha)}, {"dim", row.dim}, {"rank", row.rank.to_string()}});
                }
                doc["schur_table"] = rows;
                doc["schur_sum"] = weighted.to_string();
                doc["r"] = r_n.to_string();
            }
            emit(out, doc);
            break;
        }
        case Format::text:
        case Format::latex: {
            const bool tex = to_format(req.format) == Format::latex;
            if (alpha) out << (tex ? "\\tilde r" : "rank") << alpha->to_string() << " = " << *rank << '\n';
            for (const auto& row : table) {
                out << (tex ? "\\tilde r" : "rank") << row.alpha.to_string() << " = " << row.rank << "  (dim " << row.dim
                    << ")\n";
            }
            if (req.all) out << "sum dim*rank = " << weighted << ", r(" << n << ") = " << r_n << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_trace(const Request& req, std::ostream& out) {
    if (req.sigma.empty()) throw UsageError("trace requires --sigma");
    const Partition sigma = parse_partition(req.sigma, "--sigma");
    const SheafDescriptor d = load_single(req);
    const auto tv = trace_values(d, sigma);
    switch (to_format(req.format)) {
        case Format::json: {
            Json doc;
            doc["descriptor"] = descriptor_to_json(d);
            doc["sigma"] = ints_to_json(sigma);
            doc["c_star"] = tv.star.to_string();
            doc["c_bullet"] = tv.bullet.to_string();
            doc["c"] = tv.total.to_string();
            emit(out, doc);
            break;
        }
        case Format::text:
            out << "c* = " << tv.star << "\nc. = " << tv.bullet << "\nc = " << tv.total << '\n';
            break;
        case Format::latex:
            out << "c^{*}_{" << sigma.to_string() << "} = " << tv.star << "\nc^{\\bullet}_{" << sigma.to_string()
                << "} = " << tv.bullet << "\nc_{" << sigma.to_string() << "} = " << tv.total << '\n';
            break;
    }
    return exit_ok;
}

std::vector<Suite> parse_suites(const std::string& text) {
    if (text.empty()) return all_suites();
    std::vector<Suite> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto s = parse_suite(item);
        if (!s) throw UsageError("unknown suite '" + item + "'");
        out.push_back(*s);
    }
    return out;
}

int cmd_verify(const Request& req, std::ostream& out) {
    const auto suites = parse_suites(req.suite);
    VerifyOptions opt;
    opt.route_order = resolve_order(req, opt.route_order);
    if (req.n) {
        if (*req.n < 1 || *req.n > kMaxSymmetricDegree) throw UsageError("--n out of range");
        opt.max_n = *req.n;
    }
    const auto descriptors = load_descriptors(req);
    const bool many = descriptors.size() > 1 || req.random || !req.sweep.empty();

    std::vector<Check> checks;
    for (const auto& l : descriptors) {
        for (auto& c : verify(l.d, suites, opt).checks) {
            if (many) c.name = l.label + "/" + c.name;
            checks.push_back(std::move(c));
        }
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });

    if (to_format(req.format) == Format::json) {
        Json doc;
        if (many) {
            Json list = Json::array();
            for (const auto& l : descriptors) list.push_back({{"label", l.label}, {"descriptor", descriptor_to_json(l.d)}});
            doc["descriptors"] = list;
        } else {
            doc["descriptor"] = descriptor_to_json(descriptors.front().d);
        }
        Json arr = Json::array();
        for (const auto& c : checks) {
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.pass ? Json(nullptr) : Json(c.witness)}});
        }
        doc["checks"] = arr;
        doc["pass"] = failed == 0;
        emit(out, doc);
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.pass) out << ": " << c.witness;
            out << '\n';
        }
        out << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? exit_ok : exit_verification_failed;
}

int cmd_preset(const Request& req, std::ostream& out) {
    if (req.preset.empty()) throw UsageError("preset requires --preset");
    const SheafDescriptor d = load_single(req);
    if (to_format(req.format) == Format::json) {
        emit(out, descriptor_to_json(d));
    } else {
        out << "g = " << d.g << "\nchi = " << d.chi << "\ngamma = " << d.gamma.as_poly().to_string() << '\n';
        for (std::size_t k = 0; k < d.spectrum.size(); ++k) {
            out << "spectrum[" << k << "] = " << d.spectrum[k].h.to_string() << '\n';
        }
        out << "generic rank = " << d.generic_rank() << '\n';
    }
    return exit_ok;
}

void add_source_options(CLI::App* sub, Request& req) {
    sub->add_option("--preset", req.preset, "theta, prym or elliptic")->check(CLI::IsMember({"theta", "prym", "elliptic"}));
    sub->add_option("--input", req.input, "descriptor JSON file");
    sub->add_option("--g", req.g, "dimension (theta, prym)");
    sub->add_option("--m", req.m, "exponent of the Prym-Tjurin curve (default 1)");
    sub->add_option("--chi", req.chi, "Euler characteristic (prym default 2g-2)");
    sub->add_option("--r", req.r, "generic rank (elliptic)");
    sub->add_option("--format", req.format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request req;
    CLI::App app{"Exact generic ranks of convolution and symmetric powers of perverse sheaves", "abelrank"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "numerators, pole and coefficients of the rank series");
    add_source_options(series, req);
    series->add_option("--kind", req.kind, "conv or sym");
    series->add_option("--order", req.order, "number of coefficients past t^0 (default 10)");

    auto* schur = app.add_subcommand("schur", "generic rank of a Schur functor");
    add_source_options(schur, req);
    schur->add_option("--alpha", req.alpha, "partition, e.g. 2,1");
    schur->add_flag("--all", req.all, "table over every partition of n");
    schur->add_option("--n", req.n, "degree for --all");

    auto* trace = app.add_subcommand("trace", "trace of a permutation on the n-th convolution power");
    add_source_options(trace, req);
    trace->add_option("--sigma", req.sigma, "cycle type, e.g. 2,1");

    auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
    add_source_options(verify_cmd, req);
    verify_cmd->add_option("--suite", req.suite, "comma list of suites (default all)");
    verify_cmd->add_option("--sweep", req.sweep, "parameter ranges, e.g. g=2..6,m=1..3");
    verify_cmd->add_option("--random", req.random, "number of random descriptors");
    verify_cmd->add_option("--seed", req.seed, "seed for --random");
    verify_cmd->add_option("--order", req.order, "series route order (default 8)");
    verify_cmd->add_option("--n", req.n, "largest n for Schur and trace checks (default 5)");

    auto* preset = app.add_subcommand("preset", "print a preset descriptor");
    add_source_options(preset, req);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (series->parsed()) return cmd_series(req, out);
        if (schur->parsed()) return cmd_schur(req, out);
        if (trace->parsed()) return cmd_trace(req, out);
        if (verify_cmd->parsed()) return cmd_verify(req, out);
        return cmd_preset(req, out);
    } catch (const InvalidDescriptor& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_descriptor;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConsistencyError& e) {
        err << "error: internal consistency check failed: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

}  // namespace abelrank
