#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelrank/descriptor.hpp"

namespace abelrank {

/// Named identity families checked by `verify`.
enum class Suite { functional_eq, schur_sum, adams_routes, degree_bounds, closed_forms };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on success; the disagreeing values on failure
};

struct VerifyReport {
    std::vector<Check> checks;
    bool ok() const;
};

struct VerifyOptions {
    int max_n = 5;                 // Schur sums and trace closed forms run over n <= max_n
    std::size_t route_order = 8;   // series routes are compared on t^0..t^route_order
};

VerifyReport verify(const SheafDescriptor& d, const std::vector<Suite>& suites, const VerifyOptions& options = {});

/// Reproducible random descriptor: g in [1,5], chi in [1,24], small integer gamma
/// coefficients with gamma_g >= 0, and up to three spectrum entries with h(0) = chi.
std::vector<SheafDescriptor> random_descriptors(std::size_t count, std::uint64_t seed);

}  // namespace abelrank
