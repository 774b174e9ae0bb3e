#pragma once

#include <optional>
#include <string>

#include "padicverify/bigint.hpp"
#include "padicverify/errors.hpp"

namespace pv {

// A Q_p value with exact valuation and a tracked count of trusted base-p
// digits.  Three states:
//   ExactZero        -- the honest zero (infinite absolute precision),
//   ZeroAtPrecision  -- every trusted digit vanished; carries only the
//                       floor valuation "true value has valuation >= floor",
//   Value            -- p^valuation * unit, with `unit` known modulo
//                       p^trusted and unit % p != 0.
//
// All operations are pure; digit counts propagate pessimistically, so a
// digit that is declared trusted survives recomputation at any higher
// working precision.
class PadicScalar {
 public:
  enum class State { ExactZero, ZeroAtPrecision, Value };

  PadicScalar() = default;

  static PadicScalar exact_zero(long p);
  static PadicScalar zero_at(long p, long floor);
  // Raw constructor; reduces unit mod p^trusted and normalizes.
  static PadicScalar from_unit(long p, long valuation, BigInt unit, long trusted);
  static PadicScalar from_integer(long p, const BigInt& n, long trusted);
  static PadicScalar from_integer(long p, long n, long trusted);
  static PadicScalar from_rational(long p, const BigRat& q, long trusted);
  static PadicScalar one(long p, long trusted);

  long prime() const { return prime_; }
  State state() const { return state_; }
  bool is_exact_zero() const { return state_ == State::ExactZero; }
  bool is_zero_at_precision() const { return state_ == State::ZeroAtPrecision; }
  // Indistinguishable from zero (either zero state).
  bool is_zero() const { return state_ != State::Value; }

  // Value state only.
  long valuation() const;
  const BigInt& unit_digits() const;
  long trusted() const;

  // ZeroAtPrecision state only.
  long floor() const;

  // One-past-the-last known digit position: valuation + trusted for a value,
  // the floor for a zero-at-precision, nullopt (infinite) for the exact zero.
  std::optional<long> abs_precision() const;

  // Digits of p^valuation * unit at positions [0, k), as an integer mod p^k.
  // Requires the window to be known (abs_precision >= k) and valuation >= 0
  // unless the value is zero there.
  BigInt residue(long k) const;

  // Keep at most `digits` trusted digits (values only; zero states pass
  // through).  digits >= 1.
  PadicScalar truncated(long digits) const;

  // Weaken by an unknown error of valuation >= abs_floor.  Used to account
  // for series truncation.
  PadicScalar with_abs_floor(long abs_floor) const;

  PadicScalar neg() const;

  // Canonical text: "p^v * u :: t"; zero-at-precision "p^f * 0 :: 0";
  // exact zero "0".
  std::string str() const;
  static PadicScalar parse(const std::string& text, long p);

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

 private:
  long prime_ = 0;
  State state_ = State::ExactZero;
  long val_ = 0;       // valuation (Value) or floor (ZeroAtPrecision)
  long trusted_ = 0;   // >= 1 for Value, 0 otherwise
  BigInt unit_ = 0;    // 0 < unit < p^trusted, unit % p != 0 (Value only)

  static void check_same_prime(const PadicScalar& a, const PadicScalar& b);
};

PadicScalar operator*(long a, const PadicScalar& b);
PadicScalar pow_ui(const PadicScalar& a, unsigned long e);
PadicScalar inverse(const PadicScalar& a);

// Exact multiplication by p^k (valuation shift, no digit loss).
PadicScalar shift(const PadicScalar& a, long k);

// True when a - b is indistinguishable from zero.
bool indistinguishable(const PadicScalar& a, const PadicScalar& b);

}  // namespace pv
