#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "traceforms/errors.hpp"

namespace tf {

// An arbitrary subset of F_p, stored as a strictly sorted array of residues.
struct SubsetFp {
    std::int64_t p = 0;
    std::vector<std::int64_t> elems;

    std::size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }

    bool contains(std::int64_t x) const {
        return std::binary_search(elems.begin(), elems.end(), x);
    }

    static SubsetFp from_elements(std::int64_t p, std::vector<std::int64_t> xs) {
        for (auto& x : xs) {
            x %= p;
            if (x < 0) x += p;
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return SubsetFp{p, std::move(xs)};
    }

    // {1, ..., p-1}
    static SubsetFp units(std::int64_t p) {
        std::vector<std::int64_t> xs(static_cast<std::size_t>(p - 1));
        for (std::int64_t i = 1; i < p; ++i) xs[static_cast<std::size_t>(i - 1)] = i;
        return SubsetFp{p, std::move(xs)};
    }

    static SubsetFp full(std::int64_t p) {
        std::vector<std::int64_t> xs(static_cast<std::size_t>(p));
        for (std::int64_t i = 0; i < p; ++i) xs[static_cast<std::size_t>(i)] = i;
        return SubsetFp{p, std::move(xs)};
    }
};

inline void require_same_field(const SubsetFp& a, const SubsetFp& b) {
    if (a.p != b.p) fail(errc::field_mismatch, "subsets live in different fields");
}

// Bounded draw with a fully specified algorithm (rejection sampling), so that
// seeded runs reproduce across standard libraries.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// Seeded size-`n` subset of {0,...,p-1}: the prefix of a Fisher-Yates shuffle.
inline SubsetFp random_subset(std::int64_t p, std::int64_t n, std::uint64_t seed,
                              bool exclude_zero = false) {
    const std::int64_t universe = exclude_zero ? p - 1 : p;
    if (n > universe) n = universe;
    std::vector<std::int64_t> pool(static_cast<std::size_t>(universe));
    for (std::int64_t i = 0; i < universe; ++i)
        pool[static_cast<std::size_t>(i)] = exclude_zero ? i + 1 : i;
    std::mt19937_64 rng(seed);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto j = i + static_cast<std::int64_t>(
                               bounded_rand(rng, static_cast<std::uint64_t>(universe - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(n));
    std::sort(pool.begin(), pool.end());
    return SubsetFp{p, std::move(pool)};
}

}  // namespace tf
