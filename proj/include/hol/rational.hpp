#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hol {

/// Exact scalar. gmpxx keeps values canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Reduced "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// int64 with overflow detection. Used where samples are integer valued and
/// the hot loop cannot afford GMP; overflow throws instead of wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
    return CheckedInt(r);
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
    return CheckedInt(r);
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
    return CheckedInt(r);
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }

 private:
  [[noreturn]] static void overflow() { throw std::overflow_error("CheckedInt overflow"); }
  std::int64_t v_ = 0;
};

inline bool is_zero(CheckedInt x) { return x.value() == 0; }

}  // namespace hol
