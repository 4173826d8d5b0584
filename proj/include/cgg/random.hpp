#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cgg {

using Rng = std::mt19937_64;

// Counter-based stream splitting: the seed for a sub-stream depends only on
// the parent seed and the path of indices, never on scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

inline Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    return Rng{derive_seed(master, path)};
}

}  // namespace cgg
