#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abelrank/descriptor.hpp"

namespace abelrank {

using Json = nlohmann::ordered_json;

/// Malformed JSON text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed JSON that does not match the descriptor schema.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Reads {"g": 4, "chi": "24", "gamma": [...], "spectrum": [[...], ...]}.
/// Rationals are strings ("7", "-1/6"); plain JSON integers are also accepted.
SheafDescriptor parse_descriptor(std::string_view text);
SheafDescriptor descriptor_from_json(const Json& doc);

Json descriptor_to_json(const SheafDescriptor& d);
/// Compact, deterministic serialization (keys in schema order, normalized rationals).
std::string serialize_descriptor(const SheafDescriptor& d);

/// Ascending coefficient array of rational strings; the zero polynomial is [].
Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& arr, Var var, const std::string& path);

Json rationals_to_json(const std::vector<Rational>& values);
Rational rational_from_json(const Json& v, const std::string& path);

}  // namespace abelrank
