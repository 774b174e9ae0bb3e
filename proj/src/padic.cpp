#include "padicverify/padic.hpp"

#include <algorithm>
#include <cctype>

namespace pv {

namespace {

// x mod m in [0, m).
BigInt mod_reduce(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

PadicScalar PadicScalar::exact_zero(long p) {
  PadicScalar s;
  s.prime_ = p;
  s.state_ = State::ExactZero;
  return s;
}

PadicScalar PadicScalar::zero_at(long p, long floor) {
  PadicScalar s;
  s.prime_ = p;
  s.state_ = State::ZeroAtPrecision;
  s.val_ = floor;
  return s;
}

PadicScalar PadicScalar::from_unit(long p, long valuation, BigInt unit, long trusted) {
  if (trusted < 1) throw PrecisionExhaustedError("from_unit: trusted < 1");
  PadicScalar s;
  s.prime_ = p;
  s.state_ = State::Value;
  s.val_ = valuation;
  s.trusted_ = trusted;
  s.unit_ = mod_reduce(unit, p_pow(p, trusted));
  if (s.unit_ % p == 0) throw DomainError("from_unit: unit part divisible by p");
  return s;
}

PadicScalar PadicScalar::from_integer(long p, const BigInt& n, long trusted) {
  if (n == 0) return exact_zero(p);
  long v = int_valuation(n, p);
  BigInt u = n / p_pow(p, v);
  return from_unit(p, v, u, trusted);
}

PadicScalar PadicScalar::from_integer(long p, long n, long trusted) {
  return from_integer(p, BigInt(n), trusted);
}

PadicScalar PadicScalar::from_rational(long p, const BigRat& q, long trusted) {
  if (q == 0) return exact_zero(p);
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  long vn = int_valuation(num, p);
  long vd = int_valuation(den, p);
  const BigInt& m = p_pow(p, trusted);
  BigInt nu = mod_reduce(num / p_pow(p, vn), m);
  BigInt du = mod_reduce(den / p_pow(p, vd), m);
  BigInt u = mod_reduce(nu * mod_inverse(du, m), m);
  return from_unit(p, vn - vd, u, trusted);
}

PadicScalar PadicScalar::one(long p, long trusted) {
  return from_unit(p, 0, BigInt(1), trusted);
}

long PadicScalar::valuation() const {
  if (state_ != State::Value) throw DomainError("valuation: not a resolved value");
  return val_;
}

const BigInt& PadicScalar::unit_digits() const {
  if (state_ != State::Value) throw DomainError("unit_digits: not a resolved value");
  return unit_;
}

long PadicScalar::trusted() const {
  if (state_ != State::Value) throw DomainError("trusted: not a resolved value");
  return trusted_;
}

long PadicScalar::floor() const {
  if (state_ != State::ZeroAtPrecision) {
    throw DomainError("floor: not a zero-at-precision state");
  }
  return val_;
}

std::optional<long> PadicScalar::abs_precision() const {
  switch (state_) {
    case State::ExactZero:
      return std::nullopt;
    case State::ZeroAtPrecision:
      return val_;
    case State::Value:
      return val_ + trusted_;
  }
  return std::nullopt;
}

BigInt PadicScalar::residue(long k) const {
  if (k <= 0) return BigInt(0);
  switch (state_) {
    case State::ExactZero:
      return BigInt(0);
    case State::ZeroAtPrecision:
      if (val_ < k) {
        throw PrecisionExhaustedError("residue: window exceeds zero floor");
      }
      return BigInt(0);
    case State::Value: {
      if (val_ >= k) return BigInt(0);
      if (val_ < 0) throw DomainError("residue: negative valuation");
      if (val_ + trusted_ < k) {
        throw PrecisionExhaustedError("residue: window exceeds trusted digits");
      }
      return mod_reduce(unit_ * p_pow(prime_, val_), p_pow(prime_, k));
    }
  }
  return BigInt(0);
}

PadicScalar PadicScalar::truncated(long digits) const {
  if (state_ != State::Value) return *this;
  if (digits < 1) throw PrecisionExhaustedError("truncated: digits < 1");
  if (digits >= trusted_) return *this;
  return from_unit(prime_, val_, unit_, digits);
}

PadicScalar PadicScalar::with_abs_floor(long abs_floor) const {
  switch (state_) {
    case State::ExactZero:
      return zero_at(prime_, abs_floor);
    case State::ZeroAtPrecision:
      return zero_at(prime_, std::min(val_, abs_floor));
    case State::Value: {
      if (val_ >= abs_floor) return zero_at(prime_, abs_floor);
      if (val_ + trusted_ <= abs_floor) return *this;
      return from_unit(prime_, val_, unit_, abs_floor - val_);
    }
  }
  return *this;
}

PadicScalar PadicScalar::neg() const {
  if (state_ != State::Value) return *this;
  return from_unit(prime_, val_, p_pow(prime_, trusted_) - unit_, trusted_);
}

void PadicScalar::check_same_prime(const PadicScalar& a, const PadicScalar& b) {
  if (a.prime_ != b.prime_) {
    throw PrimeMismatchError("operands over different primes: " +
                             std::to_string(a.prime_) + " vs " + std::to_string(b.prime_));
  }
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  PadicScalar::check_same_prime(a, b);
  using State = PadicScalar::State;
  const long p = a.prime_;

  if (a.state_ == State::ExactZero) return b;
  if (b.state_ == State::ExactZero) return a;
  if (a.state_ == State::ZeroAtPrecision && b.state_ == State::ZeroAtPrecision) {
    return PadicScalar::zero_at(p, std::min(a.val_, b.val_));
  }
  if (a.state_ == State::ZeroAtPrecision || b.state_ == State::ZeroAtPrecision) {
    const PadicScalar& z = (a.state_ == State::ZeroAtPrecision) ? a : b;
    const PadicScalar& v = (a.state_ == State::ZeroAtPrecision) ? b : a;
    long abs = std::min(z.val_, v.val_ + v.trusted_);
    if (v.val_ >= abs) return PadicScalar::zero_at(p, abs);
    return PadicScalar::from_unit(p, v.val_, v.unit_, abs - v.val_);
  }

  long abs = std::min(a.val_ + a.trusted_, b.val_ + b.trusted_);
  long vmin = std::min(a.val_, b.val_);
  long m = abs - vmin;  // >= 1
  const BigInt& mod = p_pow(p, m);
  BigInt s = a.unit_ * p_pow(p, a.val_ - vmin) + b.unit_ * p_pow(p, b.val_ - vmin);
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  if (s == 0) return PadicScalar::zero_at(p, abs);
  long e = int_valuation(s, p);
  return PadicScalar::from_unit(p, vmin + e, s / p_pow(p, e), m - e);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) {
  return a + b.neg();
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  PadicScalar::check_same_prime(a, b);
  using State = PadicScalar::State;
  const long p = a.prime_;

  if (a.state_ == State::ExactZero || b.state_ == State::ExactZero) {
    return PadicScalar::exact_zero(p);
  }
  if (a.state_ == State::ZeroAtPrecision || b.state_ == State::ZeroAtPrecision) {
    return PadicScalar::zero_at(p, a.val_ + b.val_);
  }
  long t = std::min(a.trusted_, b.trusted_);
  return PadicScalar::from_unit(p, a.val_ + b.val_, a.unit_ * b.unit_, t);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  PadicScalar::check_same_prime(a, b);
  using State = PadicScalar::State;
  const long p = a.prime_;

  if (b.state_ == State::ExactZero) {
    throw DivisionByZeroError("division by exact zero");
  }
  if (b.state_ == State::ZeroAtPrecision) {
    throw DivisionByZeroError("division by value indistinguishable from zero");
  }
  if (a.state_ == State::ExactZero) return a;
  if (a.state_ == State::ZeroAtPrecision) {
    return PadicScalar::zero_at(p, a.val_ - b.val_);
  }
  long t = std::min(a.trusted_, b.trusted_);
  const BigInt& mod = p_pow(p, t);
  BigInt u = a.unit_ * mod_inverse(b.unit_, mod);
  return PadicScalar::from_unit(p, a.val_ - b.val_, u, t);
}

PadicScalar operator*(long a, const PadicScalar& b) {
  // Exact small-integer scale: keep b's digit budget.
  if (b.is_exact_zero()) return b;
  long t = b.is_zero_at_precision() ? 1 : b.trusted();
  return PadicScalar::from_integer(b.prime(), a, t) * b;
}

PadicScalar pow_ui(const PadicScalar& a, unsigned long e) {
  if (e == 0) {
    if (a.is_zero()) throw DomainError("pow_ui: 0^0");
    return PadicScalar::one(a.prime(), a.trusted());
  }
  PadicScalar acc = a;
  unsigned long mask = 1;
  while ((mask << 1) != 0 && (mask << 1) <= e) mask <<= 1;
  mask >>= 1;
  for (; mask != 0; mask >>= 1) {
    acc = acc * acc;
    if (e & mask) acc = acc * a;
  }
  return acc;
}

PadicScalar inverse(const PadicScalar& a) {
  if (a.is_exact_zero()) throw DivisionByZeroError("inverse of exact zero");
  if (a.is_zero_at_precision()) {
    throw DivisionByZeroError("inverse of value indistinguishable from zero");
  }
  const BigInt& mod = p_pow(a.prime(), a.trusted());
  return PadicScalar::from_unit(a.prime(), -a.valuation(),
                                mod_inverse(a.unit_digits(), mod), a.trusted());
}

PadicScalar shift(const PadicScalar& a, long k) {
  if (a.is_exact_zero()) return a;
  if (a.is_zero_at_precision()) return PadicScalar::zero_at(a.prime(), a.floor() + k);
  return PadicScalar::from_unit(a.prime(), a.valuation() + k, a.unit_digits(), a.trusted());
}

bool indistinguishable(const PadicScalar& a, const PadicScalar& b) {
  return (a - b).is_zero();
}

std::string PadicScalar::str() const {
  switch (state_) {
    case State::ExactZero:
      return "0";
    case State::ZeroAtPrecision:
      return std::to_string(prime_) + "^" + std::to_string(val_) + " * 0 :: 0";
    case State::Value:
      return std::to_string(prime_) + "^" + std::to_string(val_) + " * " +
             unit_.get_str() + " :: " + std::to_string(trusted_);
  }
  return "0";
}

PadicScalar PadicScalar::parse(const std::string& text, long p) {
  auto fail = [&]() -> PadicScalar {
    throw ParseError("cannot parse p-adic scalar: '" + text + "'");
  };
  // strip spaces
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "0") return exact_zero(p);
  auto caret = s.find('^');
  auto star = s.find('*');
  auto colons = s.find("::");
  if (caret == std::string::npos || star == std::string::npos ||
      colons == std::string::npos || !(caret < star && star < colons)) {
    return fail();
  }
  try {
    long base = std::stol(s.substr(0, caret));
    if (base != p) {
      throw PrimeMismatchError("scalar text has prime " + std::to_string(base) +
                               ", expected " + std::to_string(p));
    }
    long v = std::stol(s.substr(caret + 1, star - caret - 1));
    BigInt u(s.substr(star + 1, colons - star - 1));
    long t = std::stol(s.substr(colons + 2));
    if (u == 0 && t == 0) return zero_at(p, v);
    return from_unit(p, v, u, t);
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::out_of_range&) {
    return fail();
  }
}

}  // namespace pv
