#include "padicverify/cyclo.hpp"

#include <algorithm>
#include <utility>

#include "padicverify/errors.hpp"

namespace pv {

namespace {

BigInt mod_reduce(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Multiply by an exact nonzero integer without clamping the digit budget.
PadicScalar scale_exact(const PadicScalar& x, const BigInt& c) {
  if (x.is_exact_zero()) return x;
  const long p = x.prime();
  long vc = int_valuation(c, p);
  if (x.is_zero_at_precision()) {
    return PadicScalar::zero_at(p, x.floor() + vc);
  }
  BigInt u = c / p_pow(p, vc);
  return PadicScalar::from_unit(p, x.valuation() + vc, u * x.unit_digits(),
                                x.trusted());
}

long reduce_mod_p(long k, long p) {
  long e = k % p;
  return e < 0 ? e + p : e;
}

}  // namespace

CycloElement::CycloElement(long p, std::vector<PadicScalar> coords)
    : prime_(p), coords_(std::move(coords)) {
  if (p < 3) throw DomainError("CycloElement: prime must be >= 3");
  if (static_cast<long>(coords_.size()) != p - 1) {
    throw DomainError("CycloElement: expected p-1 coordinates");
  }
  for (const auto& c : coords_) {
    if (c.prime() != p) {
      throw PrimeMismatchError("CycloElement: coordinate over wrong prime");
    }
  }
}

CycloElement CycloElement::zero(long p) {
  return CycloElement(
      p, std::vector<PadicScalar>(static_cast<size_t>(p - 1),
                                  PadicScalar::exact_zero(p)));
}

CycloElement CycloElement::one(long p, long trusted) {
  CycloElement x = zero(p);
  x.coords_[0] = PadicScalar::one(p, trusted);
  return x;
}

CycloElement CycloElement::from_scalar(const PadicScalar& c0) {
  CycloElement x = zero(c0.prime());
  x.coords_[0] = c0;
  return x;
}

CycloElement CycloElement::zeta_power(long p, long k, long trusted) {
  CycloElement x = zero(p);
  long e = reduce_mod_p(k, p);
  if (e <= p - 2) {
    x.coords_[static_cast<size_t>(e)] = PadicScalar::one(p, trusted);
  } else {
    for (auto& c : x.coords_) c = PadicScalar::from_integer(p, -1L, trusted);
  }
  return x;
}

bool CycloElement::is_exact_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const PadicScalar& c) { return c.is_exact_zero(); });
}

bool CycloElement::is_zero_at_precision() const {
  bool any_floor = false;
  for (const auto& c : coords_) {
    if (c.state() == PadicScalar::State::Value) return false;
    if (c.is_zero_at_precision()) any_floor = true;
  }
  return any_floor;
}

CycloElement CycloElement::neg() const {
  std::vector<PadicScalar> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.neg());
  return CycloElement(prime_, std::move(out));
}

CycloElement CycloElement::mul_zeta_pow(long k) const {
  const long p = prime_;
  std::vector<PadicScalar> out(coords_.size(), PadicScalar::exact_zero(p));
  PadicScalar wrap = PadicScalar::exact_zero(p);
  for (long i = 0; i <= p - 2; ++i) {
    long e = reduce_mod_p(i + k, p);
    if (e <= p - 2) {
      out[static_cast<size_t>(e)] = coords_[static_cast<size_t>(i)];
    } else {
      wrap = coords_[static_cast<size_t>(i)];
    }
  }
  if (!wrap.is_exact_zero()) {
    for (auto& c : out) c = c - wrap;
  }
  return CycloElement(p, std::move(out));
}

CycloElement CycloElement::galois_apply(long c) const {
  const long p = prime_;
  if (reduce_mod_p(c, p) == 0) {
    throw DomainError("galois_apply: exponent divisible by p");
  }
  std::vector<PadicScalar> out(coords_.size(), PadicScalar::exact_zero(p));
  PadicScalar wrap = PadicScalar::exact_zero(p);
  for (long i = 0; i <= p - 2; ++i) {
    long e = reduce_mod_p(c * i, p);
    if (e <= p - 2) {
      out[static_cast<size_t>(e)] = coords_[static_cast<size_t>(i)];
    } else {
      wrap = coords_[static_cast<size_t>(i)];
    }
  }
  if (!wrap.is_exact_zero()) {
    for (auto& x : out) x = x - wrap;
  }
  return CycloElement(p, std::move(out));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  if (a.prime_ != b.prime_) {
    throw PrimeMismatchError("CycloElement addition over different primes");
  }
  std::vector<PadicScalar> out;
  out.reserve(a.coords_.size());
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    out.push_back(a.coords_[i] + b.coords_[i]);
  }
  return CycloElement(a.prime_, std::move(out));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
  return a + b.neg();
}

CycloFixedPoint to_fixed_point(const CycloElement& x) {
  const long p = x.prime();
  CycloFixedPoint f;
  f.prime = p;

  bool has_value = false;
  bool has_abs = false;
  long abs = 0;
  long cv = 0;
  for (const auto& c : x.coords()) {
    if (auto a = c.abs_precision()) {
      abs = has_abs ? std::min(abs, *a) : *a;
      has_abs = true;
    }
    if (c.state() == PadicScalar::State::Value) {
      cv = has_value ? std::min(cv, c.valuation()) : c.valuation();
      has_value = true;
    }
  }
  if (!has_abs) {
    throw DomainError("to_fixed_point: exact zero has no finite precision");
  }
  if (!has_value || abs - cv < 1) {
    f.offset = abs;
    f.digits = 0;
    return f;
  }
  f.offset = cv;
  f.digits = abs - cv;
  f.coords.assign(x.coords().size(), BigInt(0));
  const BigInt& m = p_pow(p, f.digits);
  for (size_t i = 0; i < x.coords().size(); ++i) {
    const PadicScalar& c = x.coords()[i];
    if (c.state() != PadicScalar::State::Value) continue;
    long sh = c.valuation() - cv;
    if (sh >= f.digits) continue;
    f.coords[i] = mod_reduce(c.unit_digits() * p_pow(p, sh), m);
  }
  return f;
}

CycloElement from_fixed_point(const CycloFixedPoint& f) {
  const long p = f.prime;
  if (f.digits == 0) {
    return CycloElement(
        p, std::vector<PadicScalar>(static_cast<size_t>(p - 1),
                                    PadicScalar::zero_at(p, f.offset)));
  }
  std::vector<PadicScalar> out;
  out.reserve(f.coords.size());
  for (const auto& c : f.coords) {
    if (c == 0) {
      out.push_back(PadicScalar::zero_at(p, f.offset + f.digits));
    } else {
      long e = int_valuation(c, p);
      out.push_back(PadicScalar::from_unit(p, f.offset + e, c / p_pow(p, e),
                                           f.digits - e));
    }
  }
  return CycloElement(p, std::move(out));
}

std::vector<BigInt> convolve_mod(const std::vector<BigInt>& a,
                                 const std::vector<BigInt>& b, long p,
                                 long digits) {
  const BigInt& m = p_pow(p, digits);
  std::vector<BigInt> bins(static_cast<size_t>(p), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      bins[(i + j) % static_cast<size_t>(p)] += a[i] * b[j];
    }
  }
  std::vector<BigInt> out(static_cast<size_t>(p - 1));
  for (size_t i = 0; i + 1 < bins.size(); ++i) {
    out[i] = mod_reduce(bins[i] - bins.back(), m);
  }
  return out;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.prime_ != b.prime_) {
    throw PrimeMismatchError("CycloElement multiplication over different primes");
  }
  const long p = a.prime_;
  if (a.is_exact_zero() || b.is_exact_zero()) return CycloElement::zero(p);

  CycloFixedPoint fa = to_fixed_point(a);
  CycloFixedPoint fb = to_fixed_point(b);
  if (fa.digits == 0 || fb.digits == 0) {
    CycloFixedPoint fr;
    fr.prime = p;
    fr.offset = fa.offset + fb.offset;
    fr.digits = 0;
    return from_fixed_point(fr);
  }
  long m = std::min(fa.digits, fb.digits);
  if (fa.digits != m) {
    const BigInt& mm = p_pow(p, m);
    for (auto& c : fa.coords) c = mod_reduce(c, mm);
  }
  if (fb.digits != m) {
    const BigInt& mm = p_pow(p, m);
    for (auto& c : fb.coords) c = mod_reduce(c, mm);
  }
  CycloFixedPoint fr;
  fr.prime = p;
  fr.offset = fa.offset + fb.offset;
  fr.digits = m;
  fr.coords = convolve_mod(fa.coords, fb.coords, p, m);
  return from_fixed_point(fr);
}

CycloElement operator*(const PadicScalar& c, const CycloElement& x) {
  std::vector<PadicScalar> out;
  out.reserve(x.coords().size());
  for (const auto& xi : x.coords()) out.push_back(c * xi);
  return CycloElement(x.prime(), std::move(out));
}

CycloElement pow_ui(const CycloElement& x, unsigned long e) {
  if (e == 0) {
    if (x.is_exact_zero() || x.is_zero_at_precision()) {
      throw DomainError("pow_ui: 0^0");
    }
    long t = 1;
    for (const auto& c : x.coords()) {
      if (c.state() == PadicScalar::State::Value) t = std::max(t, c.trusted());
    }
    return CycloElement::one(x.prime(), t);
  }
  CycloElement acc = x;
  unsigned long mask = 1;
  while ((mask << 1) != 0 && (mask << 1) <= e) mask <<= 1;
  mask >>= 1;
  for (; mask != 0; mask >>= 1) {
    acc = acc * acc;
    if (e & mask) acc = acc * x;
  }
  return acc;
}

CycloElement inverse(const CycloElement& x) {
  const long p = x.prime();
  const long n = p - 1;
  if (x.is_exact_zero()) throw DivisionByZeroError("inverse of exact zero");
  if (x.is_zero_at_precision()) {
    throw DivisionByZeroError("inverse of element indistinguishable from zero");
  }

  // Columns of the multiplication-by-x matrix in the zeta-power basis.
  std::vector<std::vector<PadicScalar>> mat(
      static_cast<size_t>(n),
      std::vector<PadicScalar>(static_cast<size_t>(n), PadicScalar::exact_zero(p)));
  CycloElement col = x;
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < n; ++i) {
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          col.coord(i);
    }
    if (j + 1 < n) col = col.mul_zeta_pow(1);
  }

  long t = 1;
  for (const auto& c : x.coords()) {
    if (c.state() == PadicScalar::State::Value) t = std::max(t, c.trusted());
  }
  std::vector<PadicScalar> rhs(static_cast<size_t>(n), PadicScalar::exact_zero(p));
  rhs[0] = PadicScalar::one(p, t);

  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    long best_val = 0;
    for (long r = k; r < n; ++r) {
      const PadicScalar& e = mat[static_cast<size_t>(r)][static_cast<size_t>(k)];
      if (e.state() != PadicScalar::State::Value) continue;
      if (pivot < 0 || e.valuation() < best_val) {
        pivot = r;
        best_val = e.valuation();
      }
    }
    if (pivot < 0) {
      throw SingularSystemError(
          "inverse: no resolved pivot at working precision");
    }
    std::swap(mat[static_cast<size_t>(k)], mat[static_cast<size_t>(pivot)]);
    std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(pivot)]);
    const PadicScalar& piv = mat[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (long r = k + 1; r < n; ++r) {
      const PadicScalar& lead = mat[static_cast<size_t>(r)][static_cast<size_t>(k)];
      if (lead.is_exact_zero()) continue;
      PadicScalar f = lead / piv;
      for (long j = k; j < n; ++j) {
        mat[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            mat[static_cast<size_t>(r)][static_cast<size_t>(j)] -
            f * mat[static_cast<size_t>(k)][static_cast<size_t>(j)];
      }
      rhs[static_cast<size_t>(r)] =
          rhs[static_cast<size_t>(r)] - f * rhs[static_cast<size_t>(k)];
    }
  }

  std::vector<PadicScalar> sol(static_cast<size_t>(n), PadicScalar::exact_zero(p));
  for (long k = n - 1; k >= 0; --k) {
    PadicScalar acc = rhs[static_cast<size_t>(k)];
    for (long j = k + 1; j < n; ++j) {
      acc = acc - mat[static_cast<size_t>(k)][static_cast<size_t>(j)] *
                      sol[static_cast<size_t>(j)];
    }
    sol[static_cast<size_t>(k)] =
        acc / mat[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return CycloElement(p, std::move(sol));
}

CycloValuation CycloElement::valuation() const {
  const long p = prime_;
  const long n = p - 1;

  bool has_resolved = false;
  bool has_floor = false;
  Rat64 rmin{0, 1};
  Rat64 fmin{0, 1};
  for (long j = 0; j < n; ++j) {
    PadicScalar bj = PadicScalar::exact_zero(p);
    for (long i = j; i < n; ++i) {
      bj = bj + scale_exact(coords_[static_cast<size_t>(i)],
                            binomial(static_cast<unsigned long>(i),
                                     static_cast<unsigned long>(j)));
    }
    if (bj.is_exact_zero()) continue;
    if (bj.state() == PadicScalar::State::Value) {
      Rat64 v = Rat64::make(bj.valuation() * n + j, n);
      if (!has_resolved || v < rmin) rmin = v;
      has_resolved = true;
    } else {
      Rat64 v = Rat64::make(bj.floor() * n + j, n);
      if (!has_floor || v < fmin) fmin = v;
      has_floor = true;
    }
  }

  CycloValuation out;
  if (!has_resolved && !has_floor) {
    out.kind = CycloValuation::Kind::ExactZero;
  } else if (!has_resolved) {
    out.kind = CycloValuation::Kind::Floor;
    out.v = fmin;
  } else if (!has_floor || rmin <= fmin) {
    out.kind = CycloValuation::Kind::Exact;
    out.v = rmin;
  } else {
    out.kind = CycloValuation::Kind::NonzeroBound;
    out.v = fmin;
  }
  return out;
}

Rat64 cyclo_valuation(const CycloElement& x) {
  CycloValuation v = x.valuation();
  switch (v.kind) {
    case CycloValuation::Kind::Exact:
      return v.v;
    case CycloValuation::Kind::ExactZero:
      throw DomainError("cyclo_valuation: exact zero has no valuation");
    case CycloValuation::Kind::Floor:
      throw PrecisionExhaustedError(
          "cyclo_valuation: all coordinates zero at precision (floor " +
          v.v.str() + ")");
    case CycloValuation::Kind::NonzeroBound:
      throw PrecisionExhaustedError(
          "cyclo_valuation: minimum shadowed by an unresolved coordinate "
          "(bound " + v.v.str() + ")");
  }
  throw DomainError("cyclo_valuation: unreachable");
}

FloorInfo cyclo_floor(const CycloElement& x) {
  CycloValuation v = x.valuation();
  FloorInfo info;
  switch (v.kind) {
    case CycloValuation::Kind::ExactZero:
      info.status = FloorInfo::Status::ExactZero;
      break;
    case CycloValuation::Kind::Floor:
      info.status = FloorInfo::Status::ZeroAtPrecision;
      info.bound = v.v;
      break;
    case CycloValuation::Kind::Exact:
      info.status = FloorInfo::Status::Nonzero;
      info.bound = v.v;
      info.exact = true;
      break;
    case CycloValuation::Kind::NonzeroBound:
      info.status = FloorInfo::Status::Nonzero;
      info.bound = v.v;
      info.exact = false;
      break;
  }
  return info;
}

RationalProjection rational_projection(const CycloElement& x) {
  RationalProjection out{x.coord(0), FloorInfo{}};
  for (long i = 1; i <= x.prime() - 2; ++i) {
    out.nonconstant = combine_min(out.nonconstant, floor_of(x.coord(i)));
  }
  return out;
}

std::string CycloElement::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) s += ", ";
    s += coords_[i].str();
  }
  s += "]";
  return s;
}

CycloElement CycloElement::parse(const std::string& text, long p) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ParseError("cannot parse cyclotomic element: '" + text + "'");
  }
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<PadicScalar> out;
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    std::string piece = (comma == std::string::npos)
                            ? body.substr(start)
                            : body.substr(start, comma - start);
    out.push_back(PadicScalar::parse(piece, p));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return CycloElement(p, std::move(out));
}

}  // namespace pv
