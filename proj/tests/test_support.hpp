#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abelrank/poly.hpp"
#include "abelrank/rational.hpp"

namespace testing_support {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline abelrank::Rational random_rational(std::mt19937_64& rng, long bound = 20) {
    return abelrank::Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

inline abelrank::UniPoly random_poly(std::mt19937_64& rng, abelrank::Var v, long max_degree) {
    std::vector<abelrank::Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree + 1)));
    for (auto& x : c) x = random_rational(rng);
    return abelrank::UniPoly(v, std::move(c));
}

}  // namespace testing_support
