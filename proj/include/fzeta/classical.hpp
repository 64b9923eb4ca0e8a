#pragma once

#include "fzeta/fmzv.hpp"
#include "fzeta/indices.hpp"

namespace fzeta {

// A real value with a rigorous absolute error bound:
// |value - true value| <= error_bound.
struct ApproxValue {
    long double value;
    long double error_bound;
};

// Truncated multiple zeta(-star) value: nested sum with the outermost
// variable <= terms, plus a tail bound of the form C * terms^-(k_r - 1)
// where C comes from the partial sums of the inner layers. The index must
// be admissible (last part >= 2).
ApproxValue mzv_truncated(const Index& k, ZetaMode mode, long terms);

struct OhnoClassicalResult {
    long double lhs;          // sum over bumps of k
    long double rhs;          // sum over bumps of the dual index
    long double error_bound;  // sum of the per-term rigorous bounds
    bool pass;                // |lhs - rhs| <= error_bound + tolerance
};

// Desk-scale check that the bump sums of k and of its classical dual
// agree: sum_{|e|=m} zeta(k (+) e) vs the same over dual(k).
OhnoClassicalResult verify_ohno_classical(const Index& k, int m, long terms,
                                          long double tolerance = 1e-6L);

}  // namespace fzeta
