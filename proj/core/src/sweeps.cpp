#include "eulerdenom/sweeps.hpp"

#include <random>
#include <sstream>

#include "eulerdenom/denominator.hpp"
#include "eulerdenom/euler.hpp"
#include "eulerdenom/special.hpp"

namespace eulerdenom {

namespace {

void record_failure(SweepResult& result, const std::string& detail) {
  ++result.failures;
  if (result.first_failure.empty()) {
    result.first_failure = detail;
  }
}

std::string range_label(const char* var, long max) {
  std::ostringstream out;
  out << var << " <= " << max;
  return out.str();
}

}  // namespace

SweepResult sweep_reflection(long max_n, int points_per_n, std::uint64_t seed) {
  SweepResult result{"reflection (-1)^n E_n(-x) = 2 x^n - E_n(x)",
                     range_label("n", max_n)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-999, 999);
  std::uniform_int_distribution<int> den(1, 999);
  const auto polys = euler_polys_recurrence(max_n);
  for (long n = 0; n <= max_n; ++n) {
    const Polynomial& e = polys[static_cast<std::size_t>(n)];
    for (int i = 0; i < points_per_n; ++i) {
      const Rat x = make_rational(num(rng), den(rng));
      Rat lhs = evaluate(e, -x);
      if (n % 2 == 1) lhs = -lhs;
      const Rat rhs = 2 * rat_pow(x, n) - evaluate(e, x);
      ++result.checks;
      if (lhs != rhs) {
        std::ostringstream detail;
        detail << "n=" << n << " x=" << x;
        record_failure(result, detail.str());
      }
    }
  }
  return result;
}

SweepResult sweep_endpoints(long max_n) {
  SweepResult result{"endpoints E_n(0) = -E_n(1) = -(2/(n+1))(2^(n+1)-1)B_(n+1)",
                     range_label("1 <= n", max_n)};
  const auto polys = euler_polys_recurrence(max_n);
  for (long n = 1; n <= max_n; ++n) {
    const Polynomial& e = polys[static_cast<std::size_t>(n)];
    const Rat closed = euler_at_zero(n);
    const Rat at_zero = evaluate(e, Rat(0));
    const Rat at_one = evaluate(e, Rat(1));
    ++result.checks;
    if (closed != at_zero || closed != -at_one) {
      record_failure(result, "n=" + std::to_string(n));
    }
  }
  return result;
}

SweepResult sweep_derivative(long max_n) {
  SweepResult result{"derivative E_n'(x) = n E_(n-1)(x)",
                     range_label("1 <= n", max_n)};
  const auto polys = euler_polys_recurrence(max_n);
  for (long n = 1; n <= max_n; ++n) {
    Polynomial expected;
    expected.add_scaled(Rat(n), polys[static_cast<std::size_t>(n - 1)]);
    ++result.checks;
    if (derivative(polys[static_cast<std::size_t>(n)]) != expected) {
      record_failure(result, "n=" + std::to_string(n));
    }
  }
  return result;
}

SweepResult sweep_ratio_recurrence(long max_n) {
  SweepResult result{"coefficient ratio e_k(n) = n/(n-k) e_k(n-1)",
                     range_label("odd k < n", max_n)};
  for (long n = 2; n <= max_n; ++n) {
    for (long k = 1; k < n; k += 2) {
      const Rat lhs = euler_coeff_explicit(n, k);
      const Rat rhs =
          make_rational(n, n - k) * euler_coeff_explicit(n - 1, k);
      ++result.checks;
      if (lhs != rhs) {
        record_failure(result,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return result;
}

SweepResult sweep_even_coeff_vanishing(long max_n) {
  SweepResult result{"even coefficients e_2(n) = e_4(n) = ... = 0",
                     range_label("n", max_n)};
  for (long n = 0; n <= max_n; ++n) {
    const Polynomial e = euler_poly_explicit(n);
    for (long k = 2; k <= n; k += 2) {
      ++result.checks;
      if (e.coeff(n - k) != 0) {
        record_failure(result,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return result;
}

SweepResult sweep_coeff_sign(long max_n) {
  SweepResult result{"sign law sign(e_k(n)) = (-1)^((k+1)/2)",
                     range_label("odd k <= n", max_n)};
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 1; k <= n; k += 2) {
      const Rat e = euler_coeff_explicit(n, k);
      const int expected_sign = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
      ++result.checks;
      if (e == 0 || (e > 0 ? 1 : -1) != expected_sign) {
        record_failure(result,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return result;
}

SweepResult sweep_kummer(long max_n) {
  SweepResult result{"Kummer carries t(n,k) = v2(C(n,k))",
                     range_label("0 <= k <= n", max_n)};
  std::vector<Int> row;  // Pascal row, built by additions only
  for (long n = 0; n <= max_n; ++n) {
    row.resize(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(n)] = 1;
    for (long k = n - 1; k >= 1; --k) {
      row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
    }
    row[0] = 1;
    for (long k = 0; k <= n; ++k) {
      ++result.checks;
      if (carries_base2(Int(n), Int(k)) != v2(row[static_cast<std::size_t>(k)])) {
        record_failure(result,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return result;
}

SweepResult sweep_von_staudt_clausen(long max_m) {
  SweepResult result{"von Staudt-Clausen B_2m + sum 1/p integral",
                     range_label("1 <= m", max_m)};
  for (long m = 1; m <= max_m; ++m) {
    ++result.checks;
    try {
      const VscDecomposition vsc = vsc_decompose(m);
      Int product = 1;
      for (const Int& p : vsc.primes) product *= p;
      if (product != rational_denominator(bernoulli(2 * m))) {
        record_failure(result, "m=" + std::to_string(m) +
                                   ": denominator is not the prime product");
      }
    } catch (const std::exception& e) {
      record_failure(result, "m=" + std::to_string(m) + ": " + e.what());
    }
  }
  return result;
}

std::vector<SweepResult> run_identity_sweeps(long max_n) {
  std::vector<SweepResult> results;
  results.push_back(sweep_reflection(max_n));
  results.push_back(sweep_endpoints(max_n));
  results.push_back(sweep_derivative(max_n));
  results.push_back(sweep_ratio_recurrence(max_n));
  results.push_back(sweep_even_coeff_vanishing(max_n));
  results.push_back(sweep_coeff_sign(max_n));
  results.push_back(sweep_kummer(max_n));
  results.push_back(sweep_von_staudt_clausen(std::max(1L, max_n / 2)));
  return results;
}

}  // namespace eulerdenom
