#include "bicount/reference.hpp"

#include "bicount/permutation.hpp"

#include <vector>

namespace bicount::reference {

namespace {

/// Histogram of cycle counts over S_n: result[c] = #{sigma : c(sigma) = c}.
/// Built by walking every permutation.
std::vector<std::uint64_t> cycle_count_histogram(std::uint32_t n) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& s) { ++hist[cycle_type(s).total_cycles()]; });
  return hist;
}

}  // namespace

BigInt stirling_by_enumeration(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  return static_cast<unsigned long>(cycle_count_histogram(n)[k]);
}

QSqrt2 average_by_enumeration(const CyclicCharacter& chi) {
  QSqrt2 total;
  for_each_permutation(chi.degree(), [&](const Permutation& s) { total += chi(s); });
  return total / QSqrt2(factorial(chi.degree()));
}

QSqrt2 twisted_product_by_enumeration(std::uint32_t p, const QSqrt2& z, std::uint32_t q, const QSqrt2& z_prime) {
  std::vector<std::uint32_t> red, blue;
  for_each_permutation(p, [&](const Permutation& a) { red.push_back(cycle_type(a).total_cycles()); });
  for_each_permutation(q, [&](const Permutation& b) { blue.push_back(cycle_type(b).total_cycles()); });
  QSqrt2 total;
  for (auto ca : red) {
    const QSqrt2 outer = z_prime.pow(-static_cast<std::int64_t>(ca));
    for (auto cb : blue) total += z.pow(-static_cast<std::int64_t>(ca) * cb) * outer;
  }
  return total / QSqrt2(BigInt(factorial(p) * factorial(q)));
}

}  // namespace bicount::reference
