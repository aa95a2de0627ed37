#include "bicount/bounds.hpp"

#include "bicount/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bicount {

QSqrt2 theorem_bound(std::uint32_t p, std::uint32_t q, const StirlingTable& stirling) {
  if (p == 0 || q == 0) throw std::invalid_argument("theorem_bound needs p, q >= 1");
  const auto row_p = stirling.row(p);
  const auto row_q = stirling.row(q);
  // Integer and sqrt2 parts, before dividing by p! q!.
  BigInt whole = 0;
  BigInt root = 0;
  for (std::uint32_t k = 1; k <= p; ++k) {
    if (row_p[k] == 0) continue;
    for (std::uint32_t l = 1; l <= q; ++l) {
      if (row_q[l] == 0) continue;
      // twice the exponent of 2
      const std::uint64_t twice = 2ull * k * l + static_cast<std::uint64_t>(p - k) * q;
      BigInt term = row_p[k] * row_q[l];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), twice / 2);
      (twice % 2 ? root : whole) += term;
    }
  }
  const BigInt denom = factorial(p) * factorial(q);
  return {make_rational(whole, denom), make_rational(root, denom)};
}

QSqrt2 theorem_bound_via_characters(std::uint32_t p, std::uint32_t q, const StirlingTable& stirling) {
  const QSqrt2 half(make_rational(1, 2));
  const QSqrt2 zq = pow2(HalfInteger::halves(q));
  return pow2(HalfInteger::halves(static_cast<std::int64_t>(p) * q)) * twisted_product(p, half, q, zq, stirling);
}

AoBounds ao_bounds(std::uint32_t p, std::uint32_t q, std::uint32_t max_q) {
  if (p == 0 || q == 0) throw std::invalid_argument("ao_bounds needs p, q >= 1");
  if (q > max_q) throw ResourceCapExceeded("ao_bounds: q above cap " + std::to_string(max_q));
  const BigInt n = pow2_int(q) + (p - 1);
  AoBounds b;
  b.lower = make_rational(binomial(n, p), factorial(q));
  b.upper = 2 * b.lower;
  return b;
}

std::optional<bool> BoundReport::ao_lower_holds() const {
  if (!exact) return std::nullopt;
  return ao_lower <= BigRational(*exact);
}

std::optional<bool> BoundReport::ao_upper_holds() const {
  if (!exact) return std::nullopt;
  return BigRational(*exact) <= ao_upper;
}

std::optional<bool> BoundReport::theorem_holds() const {
  if (!exact) return std::nullopt;
  return QSqrt2(BigRational(*exact)) <= theorem_bound;
}

std::optional<bool> BoundReport::sandwich_holds() const {
  if (!exact) return std::nullopt;
  return *ao_lower_holds() && *ao_upper_holds() && *theorem_holds();
}

BoundReport bound_report(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  BoundReport r;
  r.p = p;
  r.q = q;
  r.theorem_bound = theorem_bound(p, q);
  const auto ao = ao_bounds(p, q);
  r.ao_lower = ao.lower;
  r.ao_upper = ao.upper;
  if (p <= limits.max_degree && q <= limits.max_degree) r.exact = count_exact(p, q, limits);
  return r;
}

RatioCell ratio_cell(std::uint32_t p, std::uint32_t k, int places) {
  const std::uint32_t q = p + k;
  RatioCell cell;
  cell.p = p;
  cell.k = k;
  cell.ratio = QSqrt2(ao_bounds(p, q).upper) / theorem_bound(p, q);
  cell.decimal = decimal_render(cell.ratio, places);
  return cell;
}

std::vector<RatioCell> ratio_table(const std::vector<std::uint32_t>& p_values,
                                   const std::vector<std::uint32_t>& k_values, int places) {
  std::vector<RatioCell> out;
  out.reserve(p_values.size() * k_values.size());
  for (auto p : p_values) {
    for (auto k : k_values) out.push_back(ratio_cell(p, k, places));
  }
  return out;
}

BigRational growth_ratio(std::uint32_t p, std::uint32_t k, const EnumerationLimits& limits) {
  const std::uint32_t q = p + k;
  const BigInt count = count_exact(p, q, limits);
  return make_rational(count * factorial(p) * factorial(q), pow2_int(static_cast<std::uint64_t>(p) * q));
}

BigRational first_summand(std::uint32_t p, std::uint32_t k) {
  const BigRational base(pow2_int(p));
  BigRational power = 1;
  for (std::uint32_t i = 0; i < p + k; ++i) power *= base;
  return BigRational(rising_factorial(base, p + k) / power);
}

// ------------------------------------------------------------- log domain

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double log2_binomial(std::int64_t n, std::int64_t r) {
  return (std::lgamma(static_cast<long double>(n + 1)) - std::lgamma(static_cast<long double>(r + 1)) -
          std::lgamma(static_cast<long double>(n - r + 1))) /
         std::log(2.0L);
}

/// log2 (2^h)^(rising n) = n h + sum_{i<n} log2(1 + i 2^-h)
long double log2_rising_power_of_two(std::int64_t h, std::int64_t n) {
  long double s = static_cast<long double>(n) * static_cast<long double>(h);
  for (std::int64_t i = 1; i < n; ++i) {
    s += std::log1p(std::ldexp(static_cast<long double>(i), static_cast<int>(-h))) / std::log(2.0L);
  }
  return s;
}

}  // namespace

AsymptoticTerm a_term(std::int64_t h, std::int64_t p, std::int64_t k) {
  AsymptoticTerm t{h, p, k, true, kNegInf};
  if (h < 0 || h >= p || p < 2) return t;
  const long double n = static_cast<long double>(p + k);
  t.zero = false;
  t.log2_value = log2_binomial(p, h) +
                 static_cast<long double>(p - h) * (std::log2(static_cast<long double>(p - 1) / 2) + n / 2) +
                 log2_rising_power_of_two(h, p + k) - static_cast<long double>(p) * n;
  return t;
}

long double a_first_term_closed_form_log2(std::int64_t h, std::int64_t k) {
  if (h < 1) throw std::invalid_argument("closed form needs h >= 1");
  const long double hl = static_cast<long double>(h);
  return std::log2((hl + 1) * hl / 2) + static_cast<long double>(h + 1 + k) * (-hl - 0.5L) +
         log2_rising_power_of_two(h, h + 1 + k);
}

std::int64_t claimed_cutoff(std::int64_t k) {
  switch (k) {
    case 0: return 12;
    case 1: return 10;
    case 2: return 7;
    default: return 1;
  }
}

HReport verify_H(std::int64_t k, std::int64_t h_max, std::int64_t p_max, long double rel_tol) {
  HReport report;
  report.k = k;
  report.h_max = h_max;
  report.p_max = p_max;
  report.claimed_cutoff = claimed_cutoff(k);
  const long double slack = std::log2(1 + rel_tol);
  for (std::int64_t h = 0; h <= h_max && h + 1 <= p_max; ++h) {
    HScanEntry e;
    e.h = h;
    e.first_log2 = a_term(h, h + 1, k).log2_value;
    e.max_log2 = kNegInf;
    for (std::int64_t p = h + 1; p <= p_max; ++p) {
      const auto t = a_term(h, p, k);
      if (!t.zero && t.log2_value > e.max_log2) {
        e.max_log2 = t.log2_value;
        e.argmax_p = p;
      }
    }
    e.attained_at_first = e.first_log2 != kNegInf && e.max_log2 - e.first_log2 <= slack;
    report.entries.push_back(e);
  }
  report.smallest_cutoff = h_max + 1;
  for (auto it = report.entries.rbegin(); it != report.entries.rend() && it->attained_at_first; ++it) {
    report.smallest_cutoff = it->h;
  }
  report.holds = report.smallest_cutoff <= report.claimed_cutoff;
  return report;
}

long double tail_ratio(std::int64_t h, std::int64_t k) {
  if (h < 1) throw std::invalid_argument("tail_ratio needs h >= 1");
  return std::exp2(a_term(h + 1, h + 2, k).log2_value - a_term(h, h + 1, k).log2_value);
}

}  // namespace bicount
