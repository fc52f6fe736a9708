#pragma once

#include <string>
#include <vector>

#include "eulerdenom/euler.hpp"
#include "eulerdenom/numeric.hpp"

namespace eulerdenom {

/// Denominator of the reduced form; 1 for zero.
Int rational_denominator(const Rat& x);

/// Least d >= 1 with d*p integral: the lcm of the reduced coefficient
/// denominators.  1 for the zero polynomial.
Int poly_denominator(const Polynomial& p);

/// Denominator of e_k(n) for odd k: 2^(v2(k+1) - v2(C(n,k))), with the
/// exponent clamped at 0.  The unclamped exponent can go negative (n = 4,
/// k = 1 gives -1 while e_1(4) = -2 is integral), in which case the
/// coefficient is an even integer and the true denominator is 1.
Int coeff_denom_formula(long n, long k);

/// Denominator of the corresponding coefficient of E*_n(x) for odd k:
/// 2^(v2(n+1) - v2(C(n+1,k+1)) - delta), clamped at 0, where delta = 1
/// exactly when k = n.  Uses the identity
/// v2(k+1) - v2(C(n,k)) = v2(n+1) - v2(C(n+1,k+1)).
Int shifted_coeff_denom_formula(long n, long k);

/// Closed form for the denominator of E*_n(x): 2^(v2(n+1) - g(n)).
Int shifted_poly_denom_closed(long n);

/// Same value through the carry form
/// 2^(v2(n+1) - min over odd k in [1,n] of (t(n+1,k+1) + delta)), clamped
/// at 0, with t counting base-2 carries.
Int shifted_poly_denom_carry_form(long n);

/// Table n -> 2^(v2(n+1) - g(n)) for 0 <= n <= max_n (OEIS A135517).
SequenceTable luschny_sequence(long max_n);

/// One theorem check: the lcm-of-denominators oracle against the closed form.
struct DenomRecord {
  long n = 0;
  Int direct;          // poly_denominator(E*_n)
  Int closed;          // 2^exponent
  long exponent = 0;   // v2(n+1) - g(n)
  bool pass = false;   // direct == closed
  std::string coeff_dump;  // filled on failure only
};

struct VerificationReport {
  long max_n = 0;
  PolyRoute route = PolyRoute::explicit_form;
  std::vector<DenomRecord> records;  // sorted by n
  long pass_count = 0;
  long fail_count = 0;
  double elapsed_seconds = 0.0;
};

/// Checks poly_denominator(shifted_euler(n)) == shifted_poly_denom_closed(n)
/// for every 0 <= n <= max_n.  Mismatches become failing records carrying a
/// full coefficient dump; nothing is thrown.
VerificationReport verify_theorem(long max_n,
                                  PolyRoute route = PolyRoute::explicit_form);

}  // namespace eulerdenom
