#include "abelrank/symgroup.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <utility>

#include "abelrank/rational.hpp"

namespace abelrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
        degree_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last) {
            throw UsageError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void require_degree(int n) {
    if (n < 0 || n > kMaxSymmetricDegree) {
        throw UsageError("symmetric group degree out of range [0, " + std::to_string(kMaxSymmetricDegree) + "]");
    }
}

void enumerate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate(remaining - part, part, current, out);
        current.pop_back();
    }
}

// Beta-set (first-column hook lengths) of a partition padded to `length` rows.
std::vector<int> beta_set(const std::vector<int>& parts) {
    const int l = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (l - 1 - i);
    return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

using CacheKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterCache {
    std::mutex mutex;
    std::map<CacheKey, std::int64_t> values;
};

CharacterCache& cache() {
    static CharacterCache instance;
    return instance;
}

// Murnaghan-Nakayama: strip a rim hook of length sigma[0] from alpha in every
// possible way; a rim hook corresponds to moving one bead of the beta-set down
// by that length into an empty slot, with sign (-1)^{beads jumped over}.
std::int64_t mn_recursive(const std::vector<int>& alpha, const std::vector<int>& sigma, bool use_cache) {
    if (sigma.empty()) return alpha.empty() ? 1 : 0;
    if (alpha.size() == 1 && sigma.size() >= 1) {
        // Trivial representation of S_n.
        return 1;
    }
    CacheKey key{alpha, sigma};
    if (use_cache) {
        std::lock_guard lock(cache().mutex);
        if (auto it = cache().values.find(key); it != cache().values.end()) return it->second;
    }

    const int k = sigma.front();
    const std::vector<int> rest(sigma.begin() + 1, sigma.end());
    const std::vector<int> beta = beta_set(alpha);
    const std::set<int> occupied(beta.begin(), beta.end());

    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from - k;
        if (to < 0 || occupied.count(to)) continue;
        int jumped = 0;
        for (int b : beta) {
            if (b > to && b < from) ++jumped;
        }
        std::vector<int> moved = beta;
        moved[i] = to;
        const std::int64_t sub = mn_recursive(from_beta_set(std::move(moved)), rest, use_cache);
        total += (jumped % 2 == 0) ? sub : -sub;
    }

    if (use_cache) {
        std::lock_guard lock(cache().mutex);
        cache().values.emplace(std::move(key), total);
    }
    return total;
}

std::int64_t checked_character(const Partition& alpha, const Partition& sigma, bool use_cache) {
    if (alpha.degree() != sigma.degree()) {
        throw UsageError("character: degree mismatch " + alpha.to_string() + " vs " + sigma.to_string());
    }
    require_degree(alpha.degree());
    return mn_recursive(alpha.parts(), sigma.parts(), use_cache);
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    require_degree(n);
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(n, n, current, out);
    return out;
}

std::int64_t factorial_i64(int n) {
    require_degree(n);
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t centralizer_order(const Partition& sigma) {
    require_degree(sigma.degree());
    std::map<int, int> multiplicity;
    for (int p : sigma.parts()) ++multiplicity[p];
    std::int64_t z = 1;
    for (auto [part, m] : multiplicity) {
        for (int j = 0; j < m; ++j) z *= part;
        z *= factorial_i64(m);
    }
    return z;
}

std::int64_t class_size(const Partition& sigma) { return factorial_i64(sigma.degree()) / centralizer_order(sigma); }

std::int64_t character(const Partition& alpha, const Partition& sigma) { return checked_character(alpha, sigma, true); }

std::int64_t character_uncached(const Partition& alpha, const Partition& sigma) {
    return checked_character(alpha, sigma, false);
}

std::int64_t dimension(const Partition& alpha) {
    require_degree(alpha.degree());
    const auto& rows = alpha.parts();
    std::int64_t hooks = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            int below = 0;
            for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++below;
            hooks *= (rows[i] - j - 1) + below + 1;
        }
    }
    return factorial_i64(alpha.degree()) / hooks;
}

}  // namespace abelrank
