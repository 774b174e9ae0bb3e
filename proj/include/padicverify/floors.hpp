#pragma once

#include <string>

#include "padicverify/bigint.hpp"
#include "padicverify/padic.hpp"

namespace pv {

// Evidence attached to a computed difference: either it is the exact zero,
// or every trusted digit vanished (true valuation >= bound), or it resolved
// as nonzero (bound is the exact valuation when `exact`, else a guaranteed
// lower bound).
struct FloorInfo {
  enum class Status { ExactZero, ZeroAtPrecision, Nonzero };

  Status status = Status::ExactZero;
  Rat64 bound{0, 1};
  bool exact = false;

  bool is_zero_evidence() const { return status != Status::Nonzero; }

  // The guaranteed lower bound as a statement ">= bound"; for the exact zero
  // there is no finite bound.
  std::string str() const;

  // floor >= threshold, with ExactZero counting as infinite.
  bool at_least(const Rat64& threshold) const;
};

FloorInfo floor_of(const PadicScalar& x);

// Floor of the minimum over several independent pieces of evidence.
FloorInfo combine_min(const FloorInfo& a, const FloorInfo& b);

}  // namespace pv
