#pragma once

#include "cpell/numeric.hpp"

namespace cpell {

/// Decimal concatenation a∘b = 10^(digit_count(b)+1) * a + b.
BigInt concatenate(const BigInt &a, const BigInt &b);

/// (y+1)/(x+1) == (x∘(y+1)) / (y∘(x+1)), checked by cross-multiplication.
/// Rejects the degenerate cases y < 1 and x <= y with DomainError.
bool identity_holds(const BigInt &x, const BigInt &y);

/// x(x+1) = 10 y(y+1) and x+1 has exactly one more digit than y+1.
/// Equivalent to identity_holds on its whole domain.
bool lemma1_check(const BigInt &x, const BigInt &y);

} // namespace cpell
