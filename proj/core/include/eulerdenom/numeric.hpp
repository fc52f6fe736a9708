#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerdenom {

/// Arbitrary-precision signed integer.  Zero is canonical (no negative zero).
using Int = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

/// Integer sequence indexed by n (computed denominator tables, parsed b-files).
using SequenceTable = std::map<std::int64_t, Int>;

/// num/den as a canonical rational.  Throws std::domain_error when den = 0.
Rat make_rational(Int num, Int den);

/// x^e for e >= 0, exact.
Rat rat_pow(const Rat& x, long e);

/// 2-adic order of n: the largest e with 2^e | n.
/// Throws std::domain_error for n = 0 (the valuation of zero is left undefined).
long v2(const Int& n);

/// p-adic order of n for prime p.  Throws std::domain_error when p is not
/// prime or n = 0.
long vp(const Int& p, const Int& n);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

/// Number of carries when adding k and n-k in base 2 (requires 0 <= k <= n).
/// By Kummer's theorem this equals v2(binomial(n, k)); the two are computed
/// by unrelated routes and cross-checked in the test suite.
long carries_base2(const Int& n, const Int& k);

/// Number of binary digits of n >= 1.
long bit_length(const Int& n);

/// Characteristic function of {2^m - 1 : m >= 1}: 1 when n + 1 is a power of
/// two and n >= 1, else 0.
int g(const Int& n);

/// Deterministic below 2^64 (fixed Miller-Rabin witness set), probabilistic
/// with fixed pseudorandom bases above.
bool is_prime(const Int& n);

}  // namespace eulerdenom
