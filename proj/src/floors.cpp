#include "padicverify/floors.hpp"

namespace pv {

std::string FloorInfo::str() const {
  switch (status) {
    case Status::ExactZero:
      return "exact_zero";
    case Status::ZeroAtPrecision:
      return "zero_at_precision(>= " + bound.str() + ")";
    case Status::Nonzero:
      return exact ? "nonzero(v = " + bound.str() + ")"
                   : "nonzero(v >= " + bound.str() + ")";
  }
  return "";
}

bool FloorInfo::at_least(const Rat64& threshold) const {
  if (status == Status::ExactZero) return true;
  return threshold <= bound || threshold == bound;
}

FloorInfo floor_of(const PadicScalar& x) {
  FloorInfo info;
  switch (x.state()) {
    case PadicScalar::State::ExactZero:
      info.status = FloorInfo::Status::ExactZero;
      break;
    case PadicScalar::State::ZeroAtPrecision:
      info.status = FloorInfo::Status::ZeroAtPrecision;
      info.bound = Rat64::integer(x.floor());
      break;
    case PadicScalar::State::Value:
      info.status = FloorInfo::Status::Nonzero;
      info.bound = Rat64::integer(x.valuation());
      info.exact = true;
      break;
  }
  return info;
}

FloorInfo combine_min(const FloorInfo& a, const FloorInfo& b) {
  if (a.status == FloorInfo::Status::ExactZero) return b;
  if (b.status == FloorInfo::Status::ExactZero) return a;
  FloorInfo out;
  const bool a_low = a.bound <= b.bound;
  const FloorInfo& low = a_low ? a : b;
  if (a.status == FloorInfo::Status::Nonzero ||
      b.status == FloorInfo::Status::Nonzero) {
    out.status = FloorInfo::Status::Nonzero;
    out.bound = low.bound;
    // A nonzero piece wins outright only when nothing unresolved sits below
    // it; otherwise the bound survives but exactness does not.
    if (low.status == FloorInfo::Status::Nonzero) {
      const FloorInfo& other = a_low ? b : a;
      out.exact = low.exact && (other.status == FloorInfo::Status::Nonzero ||
                                low.bound < other.bound);
    } else {
      out.exact = false;
    }
  } else {
    out.status = FloorInfo::Status::ZeroAtPrecision;
    out.bound = low.bound;
  }
  return out;
}

}  // namespace pv
