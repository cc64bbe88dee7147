#include "cpell/oracle.hpp"

#include <algorithm>

#include "cpell/concat.hpp"

namespace cpell::oracle {

std::vector<Pair> brute_solutions(std::uint64_t y_max) {
  if (y_max == 0)
    throw DomainError("brute_solutions: y_max must be positive");
  std::vector<Pair> out;
  BigInt y, d, s;
  for (std::uint64_t yi = 1; yi <= y_max; ++yi) {
    y = yi;
    // x(x+1) = N  <=>  (2x+1)^2 = 4N + 1
    d = 40 * y * (y + 1) + 1;
    s = integer_sqrt(d);
    if (s * s != d)
      continue;
    BigInt x = (s - 1) / 2;
    if (x > y)
      out.emplace_back(std::move(x), y);
  }
  return out;
}

std::vector<Pair> brute_concat_identities(std::uint64_t x_max) {
  if (x_max < 2)
    throw DomainError("brute_concat_identities: x_max must be at least 2");
  std::vector<Pair> out;
  BigInt x, target, d, root;
  for (std::uint64_t xi = 2; xi <= x_max; ++xi) {
    x = xi;
    const std::size_t r = digit_count(x + 1);
    const BigInt xx = x * (x + 1);
    for (std::size_t s = 0; s <= r; ++s) {
      const BigInt scale = pow10(r - s);
      if (xx % scale != 0)
        continue;
      target = xx / scale;
      d = 4 * target + 1;
      root = integer_sqrt(d);
      if (root * root != d)
        continue;
      BigInt y = (root - 1) / 2;
      if (y < 1 || y >= x || digit_count(y + 1) != s)
        continue;
      if (identity_holds(x, y))
        out.emplace_back(x, std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> brute_concat_identities_pairwise(std::uint64_t x_max) {
  if (x_max < 2)
    throw DomainError("brute_concat_identities: x_max must be at least 2");
  std::vector<Pair> out;
  for (std::uint64_t xi = 2; xi <= x_max; ++xi)
    for (std::uint64_t yi = 1; yi < xi; ++yi)
      if (identity_holds(BigInt(xi), BigInt(yi)))
        out.emplace_back(BigInt(xi), BigInt(yi));
  return out;
}

} // namespace cpell::oracle
