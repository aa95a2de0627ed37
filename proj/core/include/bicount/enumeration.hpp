#pragma once

// Counting unlabelled bicolored graphs with p red and q blue vertices,
// i.e. orbits of S_p x S_q on subsets of {1..p} x {1..q}, and the fraction
// of subsets lying in free orbits.

#include "bicount/exact.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace bicount {

/// Raised when a request exceeds a configured resource cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  /// count_exact: p, q <= max_degree.
  std::uint32_t max_degree = 32;
  /// count_naive: p, q <= max_naive_degree.
  std::uint32_t max_naive_degree = 7;
  /// orbit_census: p * q <= max_pq. Never above kHardMaxPq.
  std::uint32_t max_pq = 20;
  /// Threads for the partition-pair sum; 0 picks hardware concurrency.
  unsigned threads = 0;

  static constexpr std::uint32_t kHardMaxPq = 30;
};

/// |B_u(p,q)| by the class-sum form of the Polya count:
///
///   1/(p! q!) * sum over (lambda |- p, mu |- q) of
///       |C_lambda| |C_mu| 2^<lambda, mu>
BigInt count_exact(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

/// Same value by the literal double sum over S_p x S_q. Test oracle.
BigInt count_naive(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

struct OrbitCensus {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  BigInt orbit_count;
  BigInt free_element_count;
  BigInt free_orbit_count;
  BigInt total;  // 2^(pq)
  /// orbit size -> number of orbits of that size
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;
};

/// Brute-force census by orbit expansion over all 2^(pq) subsets.
OrbitCensus orbit_census(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

/// Number of subsets with trivial stabilizer, found by testing every
/// group element against every subset. Requires p! q! <= 1e6 and
/// p * q <= limits.max_pq.
BigInt count_free_by_stabilizer(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

/// f(p,q) = free elements / 2^(pq).
BigRational free_fraction(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

/// max(0, 2 - p! q! |B_u(p,q)| / 2^(pq)), a lower bound for f(p,q).
BigRational free_fraction_lower_bound(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits = {});

}  // namespace bicount
