#pragma once

// Per-bit sweeps over the subset lattice, O(n * 2^n). Shared by the
// capacity constructors and the Moebius module; the naive definitional
// forms live only in the test-support oracles.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tbm/errors.hpp"

namespace tbm::detail {

inline std::size_t atom_count_for(const std::vector<double>& values) {
    const std::size_t size = values.size();
    if (size < 2 || (size & (size - 1)) != 0) {
        throw Error("subset vector length must be a power of two >= 2");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    return n;
}

/// In place: values[A] becomes the sum of values[B] over all B subseteq A.
inline void zeta_inplace(std::vector<double>& values) {
    const std::size_t n = atom_count_for(values);
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t mask = 0; mask < values.size(); ++mask) {
            if (mask & bit) values[mask] += values[mask ^ bit];
        }
    }
}

/// Inverse of zeta_inplace (alternating-sign subset sums).
inline void moebius_inplace(std::vector<double>& values) {
    const std::size_t n = atom_count_for(values);
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t mask = 0; mask < values.size(); ++mask) {
            if (mask & bit) values[mask] -= values[mask ^ bit];
        }
    }
}

}  // namespace tbm::detail
