#include "eulerdenom/denominator.hpp"

#include <algorithm>
#include <chrono>

namespace eulerdenom {

namespace mp = boost::multiprecision;

Int rational_denominator(const Rat& x) { return denominator(x); }

Int poly_denominator(const Polynomial& p) {
  Int result = 1;
  for (const Rat& c : p.coefficients()) {
    result = mp::lcm(result, denominator(c));
  }
  return result;
}

namespace {

void require_odd_in_range(long n, long k, const char* who) {
  if (k < 1 || k > n || k % 2 == 0) {
    throw std::domain_error(std::string(who) + ": k must be odd in [1, n]");
  }
}

Int two_to_clamped(long exponent) {
  return exponent <= 0 ? Int(1) : Int(1) << exponent;
}

}  // namespace

Int coeff_denom_formula(long n, long k) {
  require_odd_in_range(n, k, "coeff_denom_formula");
  const long exponent = v2(Int(k + 1)) - v2(binomial(n, k));
  return two_to_clamped(exponent);
}

Int shifted_coeff_denom_formula(long n, long k) {
  require_odd_in_range(n, k, "shifted_coeff_denom_formula");
  const long delta = k == n ? 1 : 0;
  const long exponent = v2(Int(n + 1)) - v2(binomial(n + 1, k + 1)) - delta;
  return two_to_clamped(exponent);
}

Int shifted_poly_denom_closed(long n) {
  if (n < 0) {
    throw std::domain_error("shifted_poly_denom_closed: n must be nonnegative");
  }
  if (n == 0) {
    return 1;  // E*_0 is the zero polynomial
  }
  // v2(n+1) >= g(n): when g(n) = 1, n + 1 is a power of two >= 2.
  return two_to_clamped(v2(Int(n + 1)) - g(n));
}

Int shifted_poly_denom_carry_form(long n) {
  if (n < 1) {
    throw std::domain_error("shifted_poly_denom_carry_form: n must be >= 1");
  }
  long min_term = -1;
  for (long k = 1; k <= n; k += 2) {
    const long term = carries_base2(Int(n + 1), Int(k + 1)) + (k == n ? 1 : 0);
    if (min_term < 0 || term < min_term) {
      min_term = term;
    }
  }
  return two_to_clamped(v2(Int(n + 1)) - min_term);
}

SequenceTable luschny_sequence(long max_n) {
  if (max_n < 0) {
    throw std::domain_error("luschny_sequence: max_n must be nonnegative");
  }
  SequenceTable table;
  for (long n = 0; n <= max_n; ++n) {
    table.emplace(n, shifted_poly_denom_closed(n));
  }
  return table;
}

VerificationReport verify_theorem(long max_n, PolyRoute route) {
  if (max_n < 0) {
    throw std::domain_error("verify_theorem: max_n must be nonnegative");
  }
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.max_n = max_n;
  report.route = route;
  report.records.reserve(static_cast<std::size_t>(max_n) + 1);

  // The recurrence route is swept once; each E_n feeds the next anyway.
  std::vector<Polynomial> swept;
  if (route == PolyRoute::recurrence) {
    swept = euler_polys_recurrence(max_n);
  }

  for (long n = 0; n <= max_n; ++n) {
    Polynomial star =
        route == PolyRoute::recurrence
            ? shifted_from_euler(std::move(swept[static_cast<std::size_t>(n)]), n)
            : shifted_euler(n, route);

    DenomRecord rec;
    rec.n = n;
    rec.direct = poly_denominator(star);
    rec.exponent = n == 0 ? 0 : v2(Int(n + 1)) - g(n);
    rec.closed = shifted_poly_denom_closed(n);
    rec.pass = rec.direct == rec.closed;
    if (!rec.pass) {
      rec.coeff_dump = format_coefficients(star);
      ++report.fail_count;
    } else {
      ++report.pass_count;
    }
    report.records.push_back(std::move(rec));
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace eulerdenom
