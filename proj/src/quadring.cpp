#include "cpell/quadring.hpp"

namespace cpell {

QuadInt operator+(const QuadInt &l, const QuadInt &r) {
  return {l.a + r.a, l.b + r.b};
}

QuadInt operator-(const QuadInt &l, const QuadInt &r) {
  return {l.a - r.a, l.b - r.b};
}

QuadInt operator*(const QuadInt &l, const QuadInt &r) { return quad_mul(l, r); }

QuadInt operator*(const BigInt &s, const QuadInt &z) {
  return {s * z.a, s * z.b};
}

std::ostream &operator<<(std::ostream &os, const QuadInt &z) {
  return os << z.a.get_str() << (sgn(z.b) < 0 ? "-" : "+")
            << BigInt(abs(z.b)).get_str() << "*sqrt(10)";
}

QuadInt quad_mul(const QuadInt &l, const QuadInt &r) {
  return {l.a * r.a + 10 * l.b * r.b, l.a * r.b + l.b * r.a};
}

QuadInt conj(const QuadInt &z) { return {z.a, -z.b}; }

BigInt quad_norm(const QuadInt &z) { return z.a * z.a - 10 * z.b * z.b; }

QuadInt quad_pow(QuadInt z, std::uint64_t n) {
  QuadInt acc = QuadInt::one();
  while (n) {
    if (n & 1)
      acc = quad_mul(acc, z);
    n >>= 1;
    if (n)
      z = quad_mul(z, z);
  }
  return acc;
}

int quad_sign(const QuadInt &z) {
  const int sa = sgn(z.a);
  const int sb = sgn(z.b);
  if (sa == sb)
    return sa;
  if (sa == 0)
    return sb;
  if (sb == 0)
    return sa;
  // Opposite signs: the larger of a^2 and 10 b^2 wins.
  const int c = cmp(BigInt(z.a * z.a), BigInt(10 * z.b * z.b));
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

BigInt floor_value(const ScaledQuad &s) {
  if (sgn(s.q) < 0)
    throw DomainError("floor_value: negative sqrt(10) coordinate");
  // floor(q sqrt 10) = isqrt(10 q^2); the dropped fraction lies in [0,1)
  // and is zero only when q = 0, so it never carries past a multiple of 40.
  BigInt t = s.p + integer_sqrt(BigInt(10 * s.q * s.q));
  BigInt r;
  mpz_fdiv_q_ui(r.get_mpz_t(), t.get_mpz_t(), ScaledQuad::denominator);
  return r;
}

} // namespace cpell
