#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpell/numeric.hpp"
#include "cpell/solver.hpp"

namespace cpell {

/// Thrown when a generated term contradicts a proven structural property.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ClassifiedTerm {
  SolutionPair pair;
  bool in_C = false;
  std::size_t delta_x = 0;
  std::size_t delta_y = 0;
  BigRational ratio; ///< (y+1)/(x+1), reduced
};

/// Membership in the concatenation subset is delta_x == delta_y + 1.
/// Throws InvariantViolation if x+1 or y+1 changes digit count or if the
/// digit counts differ by anything other than 0 or 1.
ClassifiedTerm classify_term(const SolutionPair &p);

std::vector<ClassifiedTerm> classify_all(std::span<const SolutionPair> terms);

/// x_n y_{n+1} - x_{n+1} y_n, with `terms` holding the sequence from term 1.
BigInt gamma(std::uint64_t n, std::span<const SolutionPair> terms);

struct ConvergenceRecord {
  std::uint64_t index = 0;
  BigRational ratio;          ///< (y_n+1)/(x_n+1)
  int ratio_step_sign = 0;    ///< sign of ratio_{n+1} - ratio_n
  int slope_step_sign = 0;    ///< sign of y_{n+1}/x_{n+1} - y_n/x_n
  bool above_limit = false;   ///< 10 (y_n+1)^2 > (x_n+1)^2
  BigRational limit_gap;      ///< |10 (y_n+1)^2 - (x_n+1)^2| / (x_n+1)^2
};

/// One record per n in [1, count-1]; all comparisons are exact.
std::vector<ConvergenceRecord> convergence_report(std::uint64_t count);
std::vector<ConvergenceRecord>
convergence_report(std::span<const SolutionPair> terms);

struct GapRuns {
  /// Maximal runs of consecutive non-members, per strand (index 0 = strand 1).
  std::array<std::vector<std::size_t>, 3> runs;

  std::size_t max_run(int strand) const;
  std::size_t max_run() const;
};

GapRuns gap_runs(std::uint64_t count);
GapRuns gap_runs(std::span<const ClassifiedTerm> terms);

/// Number of members among `terms`.
std::size_t count_members(std::span<const ClassifiedTerm> terms);

} // namespace cpell
