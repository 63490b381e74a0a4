#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abelrank {

/// Integer partition sigma_1 >= sigma_2 >= ... >= sigma_l > 0.
///
/// Used both for irreducible representations of S_n (alpha) and for
/// conjugacy classes given by cycle type (sigma).
class Partition {
public:
    Partition() = default;
    /// Throws UsageError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Parses "3,1,1". The empty string is the empty partition.
    static Partition parse(std::string_view text);
    /// The partition (1^n), i.e. the cycle type of the identity.
    static Partition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// Largest n accepted by the symmetric-group routines (n! must fit in 64 bits).
inline constexpr int kMaxSymmetricDegree = 20;

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// n! / z_sigma, the number of permutations with cycle type sigma.
std::int64_t class_size(const Partition& sigma);

/// z_sigma = prod_i i^{m_i} m_i!.
std::int64_t centralizer_order(const Partition& sigma);

/// Irreducible character chi_alpha evaluated on the class of cycle type sigma
/// (Murnaghan-Nakayama). Results are memoized; the cache is thread-safe.
std::int64_t character(const Partition& alpha, const Partition& sigma);

/// Same value as `character`, computed without touching the cache.
std::int64_t character_uncached(const Partition& alpha, const Partition& sigma);

/// Dimension of the irreducible representation, via the hook length formula.
std::int64_t dimension(const Partition& alpha);

std::int64_t factorial_i64(int n);

}  // namespace abelrank
