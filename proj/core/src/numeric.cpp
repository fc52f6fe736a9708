#include "eulerdenom/numeric.hpp"

#include <algorithm>
#include <random>

namespace eulerdenom {

namespace mp = boost::multiprecision;

Rat make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);  // reduced by the backend
}

Rat rat_pow(const Rat& x, long e) {
  if (e < 0) {
    throw std::domain_error("rat_pow: negative exponent");
  }
  // numerator and denominator are coprime, so their powers are too
  Int n = mp::pow(numerator(x), static_cast<unsigned>(e));
  Int d = mp::pow(denominator(x), static_cast<unsigned>(e));
  return make_rational(std::move(n), std::move(d));
}

long v2(const Int& n) {
  if (n == 0) {
    throw std::domain_error("v2: 2-adic order of zero is undefined");
  }
  const Int m = mp::abs(n);
  return static_cast<long>(mp::lsb(m));
}

long vp(const Int& p, const Int& n) {
  if (!is_prime(p)) {
    throw std::domain_error("vp: p is not prime");
  }
  if (n == 0) {
    throw std::domain_error("vp: p-adic order of zero is undefined");
  }
  Int m = mp::abs(n);
  long e = 0;
  Int q, r;
  for (;;) {
    mp::divide_qr(m, p, q, r);
    if (r != 0) break;
    m = q;
    ++e;
  }
  return e;
}

Int binomial(const Int& n, const Int& k) {
  if (n < 0) {
    throw std::domain_error("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  Int kk = k;
  if (kk > n - kk) kk = n - kk;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: result is C(n - kk + i, i) after this step
  }
  return result;
}

long carries_base2(const Int& n, const Int& k) {
  if (k < 0 || k > n) {
    throw std::domain_error("carries_base2: k outside [0, n]");
  }
  const Int a = k;
  const Int b = n - k;
  if (a == 0 || b == 0) {
    return 0;
  }
  const std::size_t top = std::max(mp::msb(a), mp::msb(b));
  long carries = 0;
  bool carry = false;
  for (std::size_t i = 0; i <= top; ++i) {
    const int s = int(mp::bit_test(a, unsigned(i))) +
                  int(mp::bit_test(b, unsigned(i))) + int(carry);
    carry = s >= 2;
    if (carry) ++carries;
  }
  return carries;
}

long bit_length(const Int& n) {
  if (n < 1) {
    throw std::domain_error("bit_length: n must be >= 1");
  }
  return static_cast<long>(mp::msb(n)) + 1;
}

int g(const Int& n) {
  if (n < 1) return 0;
  return ((n + 1) & n) == 0 ? 1 : 0;
}

namespace {

// One strong-pseudoprime round to the given base.
bool miller_rabin_round(const Int& n, const Int& base, const Int& d, long s) {
  Int x = mp::powm(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static constexpr unsigned small_primes[] = {2,  3,  5,  7,  11, 13,
                                              17, 19, 23, 29, 31, 37};
  for (unsigned p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  const long s = static_cast<long>(mp::lsb(d));
  d >>= s;
  // The fixed witness set is deterministic for n < 3.3e24, well past 2^64.
  for (unsigned p : small_primes) {
    if (!miller_rabin_round(n, Int(p), d, s)) return false;
  }
  if (n >= (Int(1) << 80)) {
    std::mt19937_64 gen(0x5eed5eed5eed5eedULL);
    std::uniform_int_distribution<std::uint64_t> dist(38);
    for (int i = 0; i < 24; ++i) {
      if (!miller_rabin_round(n, Int(dist(gen)) % (n - 3) + 2, d, s)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace eulerdenom
