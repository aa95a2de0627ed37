#pragma once

// Upper and lower bounds for |B_u(p,q)|, the comparison table between them,
// growth ratios, and the log-domain scan of the dominated-convergence terms
// a_{h,p}.

#include "bicount/enumeration.hpp"
#include "bicount/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bicount {

/// 2^(pq/2) ((chi_1/2, chi_2^(q/2))), evaluated through integer powers of
/// sqrt2:
///
///   1/(p! q!) sum_{k,l} c(p,k) c(q,l) 2^(k l + (p - k) q / 2)
///
/// Requires p, q >= 1.
QSqrt2 theorem_bound(std::uint32_t p, std::uint32_t q, const StirlingTable& stirling = stirling_table());

/// The same bound through the general twisted product in Q(sqrt2).
QSqrt2 theorem_bound_via_characters(std::uint32_t p, std::uint32_t q,
                                    const StirlingTable& stirling = stirling_table());

struct AoBounds {
  BigRational lower;  // binom(p + 2^q - 1, p) / q!
  BigRational upper;  // 2 * lower
};

/// Requires p, q >= 1 and q <= max_q.
AoBounds ao_bounds(std::uint32_t p, std::uint32_t q, std::uint32_t max_q = 64);

struct BoundReport {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  QSqrt2 theorem_bound;
  BigRational ao_lower;
  BigRational ao_upper;
  std::optional<BigInt> exact;

  // Each is empty when the exact count was not computed.
  std::optional<bool> ao_lower_holds() const;
  /// Fails for many q > p, e.g. (1,3): exact 4, upper 8/3.
  std::optional<bool> ao_upper_holds() const;
  std::optional<bool> theorem_holds() const;
  /// ao_lower <= exact <= ao_upper and exact <= theorem_bound.
  std::optional<bool> sandwich_holds() const;
};

/// Both bounds, plus the exact count when p, q are within limits.max_degree.
BoundReport bound_report(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

struct RatioCell {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  /// ao_upper(p, p+k) / theorem_bound(p, p+k), exact.
  QSqrt2 ratio;
  std::string decimal;
};

/// One table cell at q = p + k. The ratio is Atmaca-Oruc upper bound over
/// the character bound; it tends to 2 as p grows.
RatioCell ratio_cell(std::uint32_t p, std::uint32_t k, int places = 6);

/// Cells in row-major order (p outer, k inner).
std::vector<RatioCell> ratio_table(const std::vector<std::uint32_t>& p_values,
                                   const std::vector<std::uint32_t>& k_values, int places = 6);

/// |B_u(p,p+k)| p! (p+k)! / 2^(p(p+k)).
BigRational growth_ratio(std::uint32_t p, std::uint32_t k, const EnumerationLimits& limits = {});

/// (2^p)^(rising p+k) / (2^p)^(p+k); tends to 1 from above.
BigRational first_summand(std::uint32_t p, std::uint32_t k);

// ---------------------------------------------------------------------------
// Log-domain asymptotics.

struct AsymptoticTerm {
  std::int64_t h = 0;
  std::int64_t p = 0;
  std::int64_t k = 0;
  bool zero = true;
  /// log2 a_{h,p}; -inf when zero.
  long double log2_value = 0;
};

/// a_{h,p} = binom(p,h) ((p-1)/2 2^((p+k)/2))^(p-h) (2^h)^(rising p+k) / 2^(p(p+k))
/// for 0 <= h < p, and 0 otherwise. Also 0 at p = 1, where the factor
/// (p-1)/2 vanishes.
AsymptoticTerm a_term(std::int64_t h, std::int64_t p, std::int64_t k);

/// log2 of the closed form of the first nonzero term,
///   a_{h,h+1} = ((h+1)h/2) 2^((h+1+k)(-h-1/2)) (2^h)^(rising h+1+k),
/// for h >= 1.
long double a_first_term_closed_form_log2(std::int64_t h, std::int64_t k);

/// Published cutoffs: H_0 = 12, H_1 = 10, H_2 = 7, H_k = 1 for k >= 3.
std::int64_t claimed_cutoff(std::int64_t k);

struct HScanEntry {
  std::int64_t h = 0;
  std::int64_t argmax_p = 0;
  long double max_log2 = 0;
  long double first_log2 = 0;  // log2 a_{h,h+1}
  bool attained_at_first = false;
};

struct HReport {
  std::int64_t k = 0;
  std::int64_t h_max = 0;
  std::int64_t p_max = 0;
  std::int64_t claimed_cutoff = 0;
  /// Smallest H with max at p = h+1 for every scanned h >= H.
  std::int64_t smallest_cutoff = 0;
  std::vector<HScanEntry> entries;
  /// Max attained at p = h+1 for every h in [claimed_cutoff, h_max].
  bool holds = false;
};

/// For h = 0..h_max, the maximum of a_{h,p} over p <= p_max and whether it
/// is the first nonzero term. Ties within relative rel_tol count as
/// attained.
HReport verify_H(std::int64_t k, std::int64_t h_max, std::int64_t p_max, long double rel_tol = 1e-6L);

/// a_{h+1,h+2} / a_{h,h+1}, computed in the log domain. Requires h >= 1.
long double tail_ratio(std::int64_t h, std::int64_t k);

}  // namespace bicount
