#pragma once

#include "padicverify/jet.hpp"
#include "padicverify/padic.hpp"

namespace pv {

// Number of leading terms of exp (indices 0..K) that must be summed so the
// discarded tail has valuation >= abs_target, given argument valuation v >= 1.
long exp_series_terms(long p, long v, long abs_target);

// Same for log(1+t), term indices 1..K, argument valuation v >= 1.
long log_series_terms(long p, long v, long abs_target);

// exp(x) for v(x) >= 1 (convergence domain for odd p).  The result carries
// the argument's absolute precision; an exact-zero argument yields 1 with a
// single trusted digit.
PadicScalar exp_scalar(const PadicScalar& x);

// log(1+t) for v(t) >= 1.
PadicScalar log1p_scalar(const PadicScalar& t);

// Iwasawa-branch logarithm on nonzero scalars: log p = 0 and log of a
// Teichmuller root is 0, computed as log1p((x/p^{v(x)})^{p-1} - 1) / (p-1).
PadicScalar iwasawa_log_scalar(const PadicScalar& x);

Jet jet_exp(const Jet& a);
Jet jet_log(const Jet& a);

}  // namespace pv
