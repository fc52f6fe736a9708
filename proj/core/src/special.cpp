#include "eulerdenom/special.hpp"

#include <algorithm>
#include <mutex>

namespace eulerdenom {

void StirlingTable::grow(long n) {
  while (rows() <= n) {
    const long m = rows();
    std::vector<Int> row(static_cast<std::size_t>(m) + 1);
    if (m == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_.back();
      row[0] = 0;
      row[m] = 1;
      for (long k = 1; k < m; ++k) {
        row[k] = k * prev[k] + prev[k - 1];
      }
    }
    rows_.push_back(std::move(row));
  }
}

Int StirlingTable::value(long n, long k) {
  if (n < 0) {
    throw std::domain_error("stirling2: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  return at(n, k);
}

const Int& StirlingTable::at(long n, long k) {
  grow(n);
  return rows_[n][k];
}

Rat BernoulliCache::at(long n) {
  if (n < 1) {
    throw std::domain_error("bernoulli: index must be >= 1");
  }
  if (auto it = values_.find(n); it != values_.end()) {
    return it->second;
  }
  // Clear denominators: with acc = sum_{j} (-1)^j S(n, j+1) j! 2^{n-1-j},
  // B_n = n * acc / (2^n (2^n - 1)).
  Int acc = 0;
  Int factorial = 1;           // j!
  Int pw = Int(1) << (n - 1);  // 2^{n-1-j}
  for (long j = 0; j < n; ++j) {
    if (j > 0) {
      factorial *= j;
      pw >>= 1;
    }
    const Int term = stirling_.at(n, j + 1) * factorial * pw;
    if (j & 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  const Int two_n = Int(1) << n;
  Rat b = make_rational(n * acc, two_n * (two_n - 1));
  values_.emplace(n, b);
  return b;
}

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

StirlingTable& shared_stirling() {
  static StirlingTable table;
  return table;
}

BernoulliCache& shared_bernoulli() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Int stirling2(long n, long k) {
  std::lock_guard lock(table_mutex());
  return shared_stirling().value(n, k);
}

Rat bernoulli(long n) {
  std::lock_guard lock(table_mutex());
  return shared_bernoulli().at(n);
}

VscDecomposition vsc_decompose(long n) {
  if (n < 1) {
    throw std::domain_error("vsc_decompose: n must be >= 1");
  }
  // Trial division over divisors d of 2n; p = d + 1 is prime iff p qualifies.
  const long two_n = 2 * n;
  std::vector<Int> primes;
  for (long d = 1; d * d <= two_n; ++d) {
    if (two_n % d != 0) continue;
    for (long div : {d, two_n / d}) {
      const Int candidate = Int(div) + 1;
      if (is_prime(candidate)) {
        primes.push_back(candidate);
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  Rat sum = bernoulli(two_n);
  for (const Int& p : primes) {
    sum += make_rational(1, p);
  }
  if (denominator(sum) != 1) {
    throw std::logic_error(
        "vsc_decompose: B_{2n} + sum 1/p is not an integer; "
        "the Bernoulli computation is inconsistent");
  }
  return VscDecomposition{numerator(sum), std::move(primes)};
}

}  // namespace eulerdenom
