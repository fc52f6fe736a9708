#pragma once

#include <vector>

#include "eulerdenom/numeric.hpp"

namespace eulerdenom {

/// Grow-only triangular table of Stirling numbers of the second kind,
/// S(n, k) = k S(n-1, k) + S(n-1, k-1) with S(0, 0) = 1.
/// Instances are not synchronized; the shared table behind stirling2() is.
class StirlingTable {
 public:
  /// S(n, k) for n >= 0; zero when k < 0 or k > n.
  Int value(long n, long k);

  /// Reference into the table, valid until the next growth.
  /// Requires 0 <= k <= n.
  const Int& at(long n, long k);

  long rows() const { return static_cast<long>(rows_.size()); }

 private:
  void grow(long n);
  std::vector<std::vector<Int>> rows_;
};

/// Grow-only cache of Bernoulli numbers computed from the Stirling-number
/// formula
///
///   B_n = n / (2 (2^n - 1)) * sum_{j=0}^{n-1} (-1)^j S(n, j+1) j! / 2^j .
///
/// Under this formula B_1 = +1/2.  That convention never reaches the Euler
/// coefficients, which consume only even-index values B_{k+1} for odd k.
class BernoulliCache {
 public:
  Rat at(long n);  // B_n for n >= 1

 private:
  StirlingTable stirling_;
  std::map<long, Rat> values_;
};

/// S(n, k) from a process-wide synchronized table.
Int stirling2(long n, long k);

/// B_n for n >= 1 from a process-wide synchronized cache.
Rat bernoulli(long n);

/// Von Staudt-Clausen: B_{2n} + sum 1/p over primes p with (p-1) | 2n is an
/// integer.
struct VscDecomposition {
  Int integer_part;         // I_n = B_{2n} + sum 1/p
  std::vector<Int> primes;  // ascending; always contains 2 and 3
};

/// Throws std::logic_error if the sum fails to be integral, which would
/// indicate an inconsistent Bernoulli value rather than bad input.
VscDecomposition vsc_decompose(long n);

}  // namespace eulerdenom
