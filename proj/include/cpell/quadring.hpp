#pragma once

#include <cstdint>
#include <ostream>

#include "cpell/numeric.hpp"

namespace cpell {

/// a + b*sqrt(10) in Z[sqrt(10)].
struct QuadInt {
  BigInt a{0};
  BigInt b{0};

  QuadInt() = default;
  QuadInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  QuadInt(long a_, long b_) : a(a_), b(b_) {}

  static QuadInt one() { return {1, 0}; }

  QuadInt operator-() const { return {-a, -b}; }

  friend bool operator==(const QuadInt &l, const QuadInt &r) {
    return l.a == r.a && l.b == r.b;
  }
};

QuadInt operator+(const QuadInt &l, const QuadInt &r);
QuadInt operator-(const QuadInt &l, const QuadInt &r);
QuadInt operator*(const QuadInt &l, const QuadInt &r);
QuadInt operator*(const BigInt &s, const QuadInt &z);

std::ostream &operator<<(std::ostream &os, const QuadInt &z);

/// The fundamental unit 3 + sqrt(10), norm -1.
inline QuadInt epsilon() { return {3, 1}; }
/// epsilon^2 = 19 + 6 sqrt(10), norm +1.
inline QuadInt phi() { return {19, 6}; }
/// sqrt(10) itself.
inline QuadInt root10() { return {0, 1}; }

QuadInt quad_mul(const QuadInt &l, const QuadInt &r);
QuadInt conj(const QuadInt &z);
BigInt quad_norm(const QuadInt &z);
QuadInt quad_pow(QuadInt z, std::uint64_t n);

/// Exact sign of the real number a + b*sqrt(10): -1, 0 or +1.
int quad_sign(const QuadInt &z);

/// The real number (p + q*sqrt(10)) / 40.
struct ScaledQuad {
  static constexpr long denominator = 40;

  BigInt p{0};
  BigInt q{0};

  ScaledQuad() = default;
  ScaledQuad(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {}
  /// z / 40.
  explicit ScaledQuad(const QuadInt &z) : p(z.a), q(z.b) {}

  QuadInt numerator() const { return {p, q}; }
};

/// floor((p + q sqrt(10)) / 40) for q >= 0, without floating point.
BigInt floor_value(const ScaledQuad &s);

} // namespace cpell
