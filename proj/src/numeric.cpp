#include "cpell/numeric.hpp"

#include <utility>

namespace cpell {

BigInt integer_sqrt(const BigInt &n) {
  if (sgn(n) < 0)
    throw DomainError("integer_sqrt: negative argument");
  if (n < 2)
    return n;

  // 2^ceil(bits/2) is never below sqrt(n), so the iteration descends.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = 1;
  x <<= (bits + 1) / 2;
  for (;;) {
    BigInt next = (x + n / x) >> 1;
    if (next >= x)
      break;
    x = std::move(next);
  }
  while (x * x > n)
    --x;
  while ((x + 1) * (x + 1) <= n)
    ++x;
  return x;
}

std::size_t digit_count(const BigInt &n) {
  if (sgn(n) <= 0)
    throw DomainError("digit_count: argument must be positive");
  return n.get_str(10).size() - 1;
}

BigInt pow10(std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

std::string to_string(const BigInt &n) { return n.get_str(10); }

BigRational::BigRational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0)
    throw DomainError("BigRational: zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

BigRational operator+(const BigRational &l, const BigRational &r) {
  return {l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_};
}

BigRational operator-(const BigRational &l, const BigRational &r) {
  return {l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_};
}

BigRational operator*(const BigRational &l, const BigRational &r) {
  return {l.num_ * r.num_, l.den_ * r.den_};
}

BigRational operator/(const BigRational &l, const BigRational &r) {
  if (sgn(r.num_) == 0)
    throw DomainError("BigRational: division by zero");
  return {l.num_ * r.den_, l.den_ * r.num_};
}

std::strong_ordering operator<=>(const BigRational &l, const BigRational &r) {
  return rational_cmp(l, r);
}

std::string BigRational::str() const {
  return num_.get_str(10) + "/" + den_.get_str(10);
}

std::ostream &operator<<(std::ostream &os, const BigRational &r) {
  return os << r.str();
}

std::strong_ordering rational_cmp(const BigRational &l, const BigRational &r) {
  const int s = sgn(BigInt(l.num() * r.den() - r.num() * l.den()));
  if (s < 0)
    return std::strong_ordering::less;
  if (s > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string decimal_expand(const BigRational &r, std::size_t digits) {
  if (digits == 0)
    throw DomainError("decimal_expand: need at least one digit");
  if (sgn(r.num()) <= 0 || r.num() >= r.den())
    throw DomainError("decimal_expand: value must lie in (0,1)");

  std::string out = "0.";
  out.reserve(digits + 2);
  BigInt rem = r.num();
  BigInt d;
  for (std::size_t i = 0; i < digits; ++i) {
    rem *= 10;
    mpz_fdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(),
                r.den().get_mpz_t());
    out.push_back(static_cast<char>('0' + d.get_ui()));
  }
  return out;
}

} // namespace cpell
