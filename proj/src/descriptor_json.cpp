#include "abelrank/descriptor_json.hpp"

namespace abelrank {

Rational rational_from_json(const Json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const UsageError& e) {
            throw SchemaError(path, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw SchemaError(path, "expected a rational string such as \"3\" or \"1/6\"");
}

UniPoly poly_from_json(const Json& arr, Var var, const std::string& path) {
    if (!arr.is_array()) throw SchemaError(path, "expected an array of rationals");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) c.push_back(rational_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
    return UniPoly(var, std::move(c));
}

Json rationals_to_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    return arr;
}

Json poly_to_json(const UniPoly& p) { return rationals_to_json(p.coeffs()); }

SheafDescriptor descriptor_from_json(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    for (const char* key : {"g", "chi", "gamma", "spectrum"}) {
        if (!doc.contains(key)) throw SchemaError(std::string("$.") + key, "missing field");
    }
    for (const auto& item : doc.items()) {
        const auto& k = item.key();
        if (k != "g" && k != "chi" && k != "gamma" && k != "spectrum") throw SchemaError("$." + k, "unknown field");
    }

    const Json& gj = doc["g"];
    if (!gj.is_number_integer()) throw SchemaError("$.g", "expected an integer");
    const long g = gj.get<long>();
    if (g < 1 || g > 64) throw SchemaError("$.g", "g must be in [1, 64]");

    SheafDescriptor d;
    d.g = static_cast<int>(g);
    d.chi = rational_from_json(doc["chi"], "$.chi");

    const Json& gamma = doc["gamma"];
    if (!gamma.is_array()) throw SchemaError("$.gamma", "expected an array of rationals");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < gamma.size(); ++i) c.push_back(rational_from_json(gamma[i], "$.gamma[" + std::to_string(i) + "]"));
    d.gamma = DiagonalClass(d.g, std::move(c));

    const Json& entries = doc["spectrum"];
    if (!entries.is_array()) throw SchemaError("$.spectrum", "expected an array of coefficient arrays");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        d.spectrum.push_back({poly_from_json(entries[k], Var::s, "$.spectrum[" + std::to_string(k) + "]")});
    }
    return d;
}

SheafDescriptor parse_descriptor(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return descriptor_from_json(doc);
}

Json descriptor_to_json(const SheafDescriptor& d) {
    Json doc;
    doc["g"] = d.g;
    doc["chi"] = d.chi.to_string();
    doc["gamma"] = rationals_to_json(d.gamma.coeffs());
    Json entries = Json::array();
    for (const auto& e : d.spectrum) entries.push_back(poly_to_json(e.h));
    doc["spectrum"] = std::move(entries);
    return doc;
}

std::string serialize_descriptor(const SheafDescriptor& d) { return descriptor_to_json(d).dump(); }

}  // namespace abelrank
