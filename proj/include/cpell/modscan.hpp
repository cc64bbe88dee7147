#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpell/numeric.hpp"

namespace cpell {

using ResiduePair = std::pair<std::uint64_t, std::uint64_t>;

/// Thrown when an orbit does not close within the state budget.
class OrbitCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The solution sequence reduced mod m. `terms` holds 3 * period entries,
/// terms[i] being term i+1.
struct ResidueOrbit {
  std::uint64_t modulus = 0;
  std::vector<ResiduePair> terms;
  std::uint64_t period = 0;

  /// One full period starting at term 1.
  std::span<const ResiduePair> one_period() const {
    return std::span<const ResiduePair>(terms).first(period);
  }

  /// 1-based term indices n <= period at which `pair` occurs.
  std::vector<std::uint64_t> positions_of(const ResiduePair &pair) const;
};

inline constexpr std::size_t kMaxOrbitStates = 1'000'000;
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// Runs the affine recurrence mod m from the seeds and detects the least
/// period of the three-term state. Requires 2 <= m <= 2^32.
ResidueOrbit residue_orbit(std::uint64_t m,
                           std::size_t max_states = kMaxOrbitStates);

/// Orbits for several moduli computed concurrently; result order follows
/// `moduli`.
std::vector<ResidueOrbit> scan_periods(std::span<const std::uint64_t> moduli);

/// Values 2y(y+1) mod 8 for y = 0..7.
std::vector<std::uint64_t> mod8_products();

/// True iff 2y(y+1) = 2 (mod 8) has no solution, i.e. x = 7 (mod 8)
/// is impossible for a solution.
bool mod8_obstruction();

/// True iff n = g (mod m1), n = h (mod m2) is solvable.
bool crt_compatible(std::int64_t g, std::uint64_t m1, std::int64_t h,
                    std::uint64_t m2);

/// n == 10^beta for some beta >= 1.
bool is_power_of_ten(const BigInt &n);

/// Neither x+1 nor y+1 is a power of ten over the first `count` terms.
bool power10_exclusion(std::uint64_t count);

} // namespace cpell
