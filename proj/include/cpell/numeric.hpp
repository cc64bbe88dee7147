#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cpell {

using BigInt = mpz_class;

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a caller violates an operation's calling contract
/// (malformed windows, bad flags).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Largest r with r*r <= n. Newton iteration from an over-estimate.
BigInt integer_sqrt(const BigInt &n);

/// floor(log10(n)) for n >= 1, taken from the decimal length.
std::size_t digit_count(const BigInt &n);

/// 10^e.
BigInt pow10(std::size_t e);

std::string to_string(const BigInt &n);

/// Exact fraction num/den, always in lowest terms with den > 0.
class BigRational {
public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt num, BigInt den);
  BigRational(const BigInt &n) : num_(n), den_(1) {} // NOLINT(implicit)

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  BigRational operator-() const;
  friend BigRational operator+(const BigRational &l, const BigRational &r);
  friend BigRational operator-(const BigRational &l, const BigRational &r);
  friend BigRational operator*(const BigRational &l, const BigRational &r);
  friend BigRational operator/(const BigRational &l, const BigRational &r);

  friend bool operator==(const BigRational &l, const BigRational &r) {
    return l.num_ == r.num_ && l.den_ == r.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational &l,
                                          const BigRational &r);

  std::string str() const;

private:
  BigInt num_;
  BigInt den_;
};

std::ostream &operator<<(std::ostream &os, const BigRational &r);

/// Sign of l - r by cross-multiplication.
std::strong_ordering rational_cmp(const BigRational &l, const BigRational &r);

/// "0." followed by `digits` digits of the truncated expansion of r, 0 < r < 1.
std::string decimal_expand(const BigRational &r, std::size_t digits);

} // namespace cpell
