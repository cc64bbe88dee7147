#include "cpell/concat.hpp"

namespace cpell {

namespace {

void require_ordered_pair(const BigInt &x, const BigInt &y) {
  if (y < 1)
    throw DomainError("degenerate pair: y must be at least 1");
  if (x <= y)
    throw DomainError("degenerate pair: x must exceed y");
}

} // namespace

BigInt concatenate(const BigInt &a, const BigInt &b) {
  if (sgn(a) <= 0 || sgn(b) <= 0)
    throw DomainError("concatenate: operands must be positive");
  return pow10(digit_count(b) + 1) * a + b;
}

bool identity_holds(const BigInt &x, const BigInt &y) {
  require_ordered_pair(x, y);
  const BigInt x1 = x + 1, y1 = y + 1;
  return y1 * concatenate(y, x1) == x1 * concatenate(x, y1);
}

bool lemma1_check(const BigInt &x, const BigInt &y) {
  require_ordered_pair(x, y);
  return x * (x + 1) == 10 * y * (y + 1) &&
         digit_count(x + 1) == digit_count(y + 1) + 1;
}

} // namespace cpell
