#include "cpell/modscan.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

#include "cpell/solver.hpp"

namespace cpell {

namespace {

ResiduePair step_mod(const ResiduePair &p, std::uint64_t m) {
  return {(19 * p.first + 60 * p.second + 39) % m,
          (6 * p.first + 19 * p.second + 12) % m};
}

} // namespace

std::vector<std::uint64_t>
ResidueOrbit::positions_of(const ResiduePair &pair) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < period; ++i)
    if (terms[i] == pair)
      out.push_back(i + 1);
  return out;
}

ResidueOrbit residue_orbit(std::uint64_t m, std::size_t max_states) {
  if (m < 2)
    throw DomainError("residue_orbit: modulus must be at least 2");
  if (m > kMaxModulus)
    throw DomainError("residue_orbit: modulus exceeds 2^32");

  ResidueOrbit orbit;
  orbit.modulus = m;
  auto &t = orbit.terms;
  for (const auto &s : initial_terms())
    t.emplace_back(s.x.get_ui() % m, s.y.get_ui() % m);

  // State at n is (t[n], t[n+1], t[n+2]); the linear part has determinant 1,
  // so the orbit is purely periodic and returns to the initial state.
  std::uint64_t period = 0;
  for (std::size_t n = 1; n <= max_states; ++n) {
    t.push_back(step_mod(t[t.size() - 3], m));
    if (t[n] == t[0] && t[n + 1] == t[1] && t[n + 2] == t[2]) {
      period = n;
      break;
    }
  }
  if (period == 0)
    throw OrbitCapExceeded("residue_orbit: no period within " +
                           std::to_string(max_states) + " states for m=" +
                           std::to_string(m));

  while (t.size() < 3 * period)
    t.push_back(step_mod(t[t.size() - 3], m));
  t.resize(3 * period);
  for (std::size_t n = 0; n + period < t.size(); ++n)
    if (t[n] != t[n + period])
      throw std::logic_error("residue_orbit: materialized orbit is not periodic");
  orbit.period = period;
  return orbit;
}

std::vector<ResidueOrbit> scan_periods(std::span<const std::uint64_t> moduli) {
  std::vector<std::future<ResidueOrbit>> jobs;
  jobs.reserve(moduli.size());
  for (auto m : moduli)
    jobs.push_back(std::async(std::launch::async, [m] { return residue_orbit(m); }));
  std::vector<ResidueOrbit> out;
  out.reserve(jobs.size());
  for (auto &j : jobs)
    out.push_back(j.get());
  return out;
}

std::vector<std::uint64_t> mod8_products() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < 8; ++y)
    out.push_back(2 * y * (y + 1) % 8);
  return out;
}

bool mod8_obstruction() {
  const auto r = mod8_products();
  return std::find(r.begin(), r.end(), 2u) == r.end();
}

bool crt_compatible(std::int64_t g, std::uint64_t m1, std::int64_t h,
                    std::uint64_t m2) {
  if (m1 == 0 || m2 == 0)
    throw DomainError("crt_compatible: moduli must be positive");
  const auto d = static_cast<std::int64_t>(std::gcd(m1, m2));
  return ((g - h) % d + d) % d == 0;
}

bool is_power_of_ten(const BigInt &n) {
  if (n < 10)
    return false;
  const std::string s = n.get_str(10);
  return s.front() == '1' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return c == '0'; });
}

bool power10_exclusion(std::uint64_t count) {
  if (count == 0)
    throw DomainError("power10_exclusion: count must be positive");
  SolutionStream gen;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto &p = gen.next();
    if (is_power_of_ten(p.x + 1) || is_power_of_ten(p.y + 1))
      return false;
  }
  return true;
}

} // namespace cpell
