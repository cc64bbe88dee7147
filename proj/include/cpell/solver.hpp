#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cpell/numeric.hpp"

namespace cpell {

/// Term n (1-based) of the increasing sequence of positive solutions of
/// x(x+1) = 10 y(y+1), x > y >= 1. Strand k = ((n-1) mod 3) + 1.
struct SolutionPair {
  std::uint64_t index = 0;
  int strand = 0;
  BigInt x{0};
  BigInt y{0};

  BigInt a() const { return 2 * x + 1; }
  BigInt b() const { return 2 * y + 1; }

  friend bool operator==(const SolutionPair &, const SolutionPair &) = default;
};

inline int strand_of(std::uint64_t index) {
  return static_cast<int>((index - 1) % 3) + 1;
}

/// x(x+1) = 10 y(y+1), x > y >= 1, and (2x+1)^2 - 10 (2y+1)^2 = -9.
bool satisfies_invariants(const SolutionPair &p);

/// The three seed terms (4,1), (20,6), (39,12).
const std::array<SolutionPair, 3> &initial_terms();

/// Given terms n-2, n-1, n, returns term n+1 via
///   x' = 19x + 60y + 39,  y' = 6x + 19y + 12
/// applied to term n-2.
SolutionPair next_triple(std::span<const SolutionPair, 3> window);

/// Random-access evaluation through the floor formula over Z[sqrt(10)].
SolutionPair term_closed_form(std::uint64_t n);

/// Incremental generator over the sequence; keeps a three-term window.
class SolutionStream {
public:
  SolutionStream();

  /// Returns the next term (the first call yields term 1).
  const SolutionPair &next();
  std::uint64_t produced() const { return produced_; }

private:
  std::array<SolutionPair, 3> window_;
  std::uint64_t produced_ = 0;
};

std::vector<SolutionPair> stream(std::uint64_t count);

/// First `count` odd positive solutions (a, b) of a^2 - 10 b^2 = -9, via
/// (a,b) -> (19a + 60b, 6a + 19b) on each strand.
std::vector<std::pair<BigInt, BigInt>> ab_stream(std::uint64_t count);

} // namespace cpell
