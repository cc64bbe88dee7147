#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cpell/numeric.hpp"

// Brute-force ground truth. Nothing here touches Z[sqrt(10)] or the
// recurrence.
namespace cpell::oracle {

using Pair = std::pair<BigInt, BigInt>;

/// All (x, y) with x > y, 1 <= y <= y_max and x(x+1) = 10 y(y+1), found by
/// solving for x with an integer square root at each y. Sorted by y.
std::vector<Pair> brute_solutions(std::uint64_t y_max);

/// All 1 <= y < x <= x_max satisfying the concatenation identity, sorted.
///
/// For fixed x the identity cross-multiplies to
///   10^(r+1) y(y+1) = 10^(s+1) x(x+1),
/// r and s being floor(log10) of x+1 and y+1. So each (x, s) admits at most
/// one y, solved with an integer square root; every candidate is then
/// re-checked against the literal cross-multiplied identity.
std::vector<Pair> brute_concat_identities(std::uint64_t x_max);

/// The same set by testing every pair 1 <= y < x <= x_max directly.
/// Quadratic in x_max; meant for small ranges.
std::vector<Pair> brute_concat_identities_pairwise(std::uint64_t x_max);

} // namespace cpell::oracle
