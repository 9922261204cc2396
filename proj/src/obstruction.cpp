#include "plic/obstruction.hpp"

namespace plic {

ObstructionVerdict euler_obstruction(const Signature& sig) {
  long long pp = sig.p_second_derivative();
  long long pi = sig.point_incidences();
  long long l1 = sig.lines_total();
  long long p1 = sig.points_total();
  long long lhs = pp + 2 * pi - l1 * l1 + l1 - 6 * p1 + 6;
  return ObstructionVerdict{lhs, lhs <= 0};
}

long long b_min(long long a) {
  if (a < 0) fail(Errc::ValidationError, "b_min needs a >= 0");
  for (long long b = 0;; ++b) {
    long long n = a + b;
    if (-n * n + 7 * a + 15 * b + 6 <= 0) return b;
  }
}

long long max_incidences(long long n) {
  if (n < 1) fail(Errc::ValidationError, "max_incidences needs n >= 1");
  long long cap = 4 * n;
  long long num = n * n + 17 * n - 6;
  long long fl = num >= 0 ? num / 8 : -((-num + 7) / 8);
  return cap < fl ? cap : fl;
}

bool infeasible_small_n34(long long n) {
  if (n < 1) fail(Errc::ValidationError, "infeasible_small_n34 needs n >= 1");
  if (n <= 7) return 3 * n > max_incidences(n);
  // n = 8: the bound leaves only the 3-regular signature, and the unique
  // combinatorial (8_3) admits no topological realization (cross-checked
  // against the enumerator's uniqueness count in the test suite).
  if (n == 8) return true;
  return false;
}

}  // namespace plic
