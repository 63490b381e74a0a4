#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "abelrank/rational.hpp"
#include "abelrank/symgroup.hpp"

using namespace abelrank;

namespace {

using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, long>;

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    }
    return out;
}

// Frobenius formula: chi_alpha(sigma) = [x^{alpha + delta}] a_delta * p_sigma.
long frobenius_character(const Partition& alpha, const Partition& sigma) {
    const std::size_t L = static_cast<std::size_t>(alpha.length());
    MPoly vandermonde;
    std::vector<int> perm(L);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t j = i + 1; j < L; ++j) inversions += perm[i] > perm[j];
        }
        Monomial m(L);
        for (std::size_t i = 0; i < L; ++i) m[i] = static_cast<int>(L - 1) - perm[i];
        vandermonde[m] += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    MPoly acc = vandermonde;
    for (int k : sigma.parts()) {
        MPoly power_sum;
        for (std::size_t i = 0; i < L; ++i) {
            Monomial m(L, 0);
            m[i] = k;
            power_sum[m] += 1;
        }
        acc = mul(acc, power_sum);
    }
    Monomial target(L);
    for (std::size_t i = 0; i < L; ++i) target[i] = alpha[i] + static_cast<int>(L - 1 - i);
    auto it = acc.find(target);
    return it == acc.end() ? 0 : it->second;
}

// Number of standard Young tableaux by removing corners recursively.
long count_syt(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner) continue;
        auto smaller = shape;
        --smaller[i];
        total += count_syt(smaller);
    }
    return total;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("").empty());
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
    CHECK(Partition::ones(3) == Partition({1, 1, 1}));
    for (const char* bad : {"1,2", "0", "2,,1", "a", "2,-1", "2,1,"}) CHECK_THROWS_AS(Partition::parse(bad), UsageError);
}

TEST_CASE("partition counts and reverse lexicographic order") {
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 1; n <= 12; ++n) {
        const auto parts = partitions_of(n);
        CHECK(static_cast<long>(parts.size()) == p[n]);
        for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i] < parts[i - 1]);
        for (const auto& q : parts) CHECK(q.degree() == n);
    }
    const auto four = partitions_of(4);
    const std::vector<Partition> want{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                      Partition({1, 1, 1, 1})};
    CHECK(four == want);
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 1; n <= 12; ++n) {
        std::int64_t total = 0;
        for (const auto& s : partitions_of(n)) {
            total += class_size(s);
            CHECK(class_size(s) * centralizer_order(s) == factorial_i64(n));
        }
        CHECK(total == factorial_i64(n));
    }
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(centralizer_order(Partition({2, 2})) == 8);
}

TEST_CASE("hook lengths agree with standard tableaux counts and sum of squares") {
    for (int n = 1; n <= 9; ++n) {
        std::int64_t squares = 0;
        for (const auto& a : partitions_of(n)) {
            CHECK(dimension(a) == count_syt(a.parts()));
            CHECK(character(a, Partition::ones(n)) == dimension(a));
            squares += dimension(a) * dimension(a);
        }
        CHECK(squares == factorial_i64(n));
    }
}

TEST_CASE("row and column orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                std::int64_t inner = 0;
                for (const auto& s : parts) inner += class_size(s) * character(a, s) * character(b, s);
                CHECK(inner == (a == b ? factorial_i64(n) : 0));
            }
        }
        for (const auto& s : parts) {
            for (const auto& t : parts) {
                std::int64_t inner = 0;
                for (const auto& a : parts) inner += character(a, s) * character(a, t);
                CHECK(inner == (s == t ? centralizer_order(s) : 0));
            }
        }
    }
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : partitions_of(n)) {
            for (const auto& s : partitions_of(n)) CHECK(character(a, s) == frobenius_character(a, s));
        }
    }
}

TEST_CASE("trivial, sign and small values") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& s : partitions_of(n)) {
            CHECK(character(Partition({n}), s) == 1);
            const int sign = (n - s.length()) % 2 == 0 ? 1 : -1;
            CHECK(character(Partition::ones(n), s) == sign);
        }
    }
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK_THROWS(character(Partition({2, 1}), Partition({2})));
}

TEST_CASE("cached and uncached characters agree across threads") {
    std::vector<std::thread> threads;
    std::vector<int> mismatches(4, 0);
    for (int w = 0; w < 4; ++w) {
        threads.emplace_back([w, &mismatches] {
            for (int n = 1; n <= 8; ++n) {
                for (const auto& a : partitions_of(n)) {
                    for (const auto& s : partitions_of(n)) {
                        if (character(a, s) != character_uncached(a, s)) ++mismatches[static_cast<std::size_t>(w)];
                    }
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    CHECK(std::accumulate(mismatches.begin(), mismatches.end(), 0) == 0);
}

TEST_CASE("degree limits") {
    CHECK(factorial_i64(20) == 2432902008176640000LL);
    CHECK_THROWS(partitions_of(kMaxSymmetricDegree + 1));
}
