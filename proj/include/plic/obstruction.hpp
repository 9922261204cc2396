#pragma once

#include "plic/incidence.hpp"

namespace plic {

// Verdict of the counting inequality
//   P''(1) + 2P'(1) - L(1)^2 + L(1) - 6P(1) + 6 <= 0,
// necessary for a topological incidence structure with the given signature.
// A positive left-hand side certifies non-existence; <= 0 certifies nothing.
struct ObstructionVerdict {
  long long lhs_value = 0;
  bool satisfiable = true;
};

ObstructionVerdict euler_obstruction(const Signature& sig);

// Smallest b >= 0 with -(a+b)^2 + 7a + 15b + 6 <= 0, i.e. the smallest b for
// which a topological structure with signature (a x^3 + b x^4, a y^3 + b y^4)
// is not excluded.
long long b_min(long long a);

// Upper bound min(4n, floor((n^2+17n-6)/8)) on the incidences of an
// (n_{3|4}) configuration.
long long max_incidences(long long n);

// True when no topological (n_{3|4}) configuration exists for this n by the
// small-case analysis: for n <= 7 the incidence count 3n already exceeds
// max_incidences(n); for n = 8 only the 3-regular case survives the bound
// and the unique combinatorial (8_3) is known not to be topological.
bool infeasible_small_n34(long long n);

}  // namespace plic
