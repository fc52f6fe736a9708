#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerdenom/numeric.hpp"

namespace eulerdenom {

struct SweepResult {
  std::string name;
  std::string range;
  long checks = 0;
  long failures = 0;
  std::string first_failure;  // diagnostic for the earliest violation
  bool passed() const { return failures == 0; }
};

/// (-1)^n E_n(-x) = 2 x^n - E_n(x) at random rational points.
SweepResult sweep_reflection(long max_n, int points_per_n = 20,
                             std::uint64_t seed = 0x0e11e7);

/// E_n(0) closed form = constant term = -E_n(1) for 1 <= n <= max_n.
SweepResult sweep_endpoints(long max_n);

/// E_n'(x) = n E_{n-1}(x), coefficientwise.
SweepResult sweep_derivative(long max_n);

/// e_k(n) = n/(n-k) e_k(n-1) for odd k < n.
SweepResult sweep_ratio_recurrence(long max_n);

/// Coefficient of x^{n-k} vanishes for even k >= 2.
SweepResult sweep_even_coeff_vanishing(long max_n);

/// sign(e_k(n)) = (-1)^((k+1)/2) and e_k(n) != 0 for odd k <= n.
SweepResult sweep_coeff_sign(long max_n);

/// carries_base2(n, k) = v2(C(n, k)) for all 0 <= k <= n <= max_n, with the
/// binomials produced row by row independently of the carry count.
SweepResult sweep_kummer(long max_n);

/// vsc_decompose(m) is integral and denominator(B_{2m}) is exactly the
/// product of the primes p with (p-1) | 2m, for 1 <= m <= max_m.
SweepResult sweep_von_staudt_clausen(long max_m);

/// The bundle behind `identities --max-n N`.  Polynomial identities sweep to
/// max_n, the Kummer sweep to max_n, and von Staudt-Clausen to max_n / 2.
std::vector<SweepResult> run_identity_sweeps(long max_n);

}  // namespace eulerdenom
