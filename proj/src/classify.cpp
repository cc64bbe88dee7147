#include "cpell/classify.hpp"

#include <algorithm>
#include <string>

namespace cpell {

ClassifiedTerm classify_term(const SolutionPair &p) {
  ClassifiedTerm t;
  t.pair = p;
  t.delta_x = digit_count(p.x);
  t.delta_y = digit_count(p.y);
  const auto where = " at term " + std::to_string(p.index);
  if (digit_count(p.x + 1) != t.delta_x || digit_count(p.y + 1) != t.delta_y)
    throw InvariantViolation("x+1 or y+1 is a power of ten" + where);
  if (t.delta_x != t.delta_y && t.delta_x != t.delta_y + 1)
    throw InvariantViolation("digit counts of x and y differ by more than one" +
                             where);
  t.in_C = t.delta_x == t.delta_y + 1;
  t.ratio = BigRational(p.y + 1, p.x + 1);
  return t;
}

std::vector<ClassifiedTerm> classify_all(std::span<const SolutionPair> terms) {
  std::vector<ClassifiedTerm> out;
  out.reserve(terms.size());
  for (const auto &p : terms)
    out.push_back(classify_term(p));
  return out;
}

BigInt gamma(std::uint64_t n, std::span<const SolutionPair> terms) {
  if (n == 0 || n >= terms.size())
    throw UsageError("gamma: terms n and n+1 are not both available");
  const auto &cur = terms[n - 1];
  const auto &nxt = terms[n];
  return cur.x * nxt.y - nxt.x * cur.y;
}

std::vector<ConvergenceRecord>
convergence_report(std::span<const SolutionPair> terms) {
  std::vector<ConvergenceRecord> out;
  if (terms.size() < 2)
    return out;
  out.reserve(terms.size() - 1);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const auto &cur = terms[i];
    const auto &nxt = terms[i + 1];
    const BigInt x1 = cur.x + 1, y1 = cur.y + 1;
    const BigInt nx1 = nxt.x + 1, ny1 = nxt.y + 1;

    ConvergenceRecord r;
    r.index = cur.index;
    r.ratio = BigRational(y1, x1);
    r.ratio_step_sign = sgn(BigInt(ny1 * x1 - y1 * nx1));
    r.slope_step_sign = sgn(gamma(i + 1, terms));
    const BigInt lhs = 10 * y1 * y1;
    const BigInt rhs = x1 * x1;
    r.above_limit = lhs > rhs;
    r.limit_gap = BigRational(abs(lhs - rhs), rhs);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ConvergenceRecord> convergence_report(std::uint64_t count) {
  if (count < 2)
    throw DomainError("convergence_report: need at least two terms");
  const auto terms = stream(count);
  return convergence_report(std::span<const SolutionPair>(terms));
}

std::size_t GapRuns::max_run(int strand) const {
  const auto &r = runs.at(static_cast<std::size_t>(strand - 1));
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

std::size_t GapRuns::max_run() const {
  return std::max({max_run(1), max_run(2), max_run(3)});
}

GapRuns gap_runs(std::span<const ClassifiedTerm> terms) {
  GapRuns g;
  std::array<std::size_t, 3> open{};
  for (const auto &t : terms) {
    const auto k = static_cast<std::size_t>(t.pair.strand - 1);
    if (!t.in_C) {
      ++open[k];
    } else if (open[k] != 0) {
      g.runs[k].push_back(open[k]);
      open[k] = 0;
    }
  }
  for (std::size_t k = 0; k < 3; ++k)
    if (open[k] != 0)
      g.runs[k].push_back(open[k]);
  return g;
}

GapRuns gap_runs(std::uint64_t count) {
  if (count == 0)
    throw DomainError("gap_runs: count must be positive");
  const auto terms = stream(count);
  const auto classified = classify_all(terms);
  return gap_runs(std::span<const ClassifiedTerm>(classified));
}

std::size_t count_members(std::span<const ClassifiedTerm> terms) {
  return static_cast<std::size_t>(std::count_if(
      terms.begin(), terms.end(), [](const auto &t) { return t.in_C; }));
}

} // namespace cpell
