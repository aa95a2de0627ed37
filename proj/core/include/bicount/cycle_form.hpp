#pragma once

// The cycle form <alpha, beta> = sum_{r,s} gcd(r,s) c_r(alpha) c_s(beta),
// a bilinear form on Z[S_p] x Z[S_q], and the structural identities and
// inequalities it satisfies.

#include "bicount/exact.hpp"
#include "bicount/permutation.hpp"

#include <cstdint>
#include <map>

namespace bicount {

std::int64_t cycle_form(const CycleType& alpha, const CycleType& beta);
std::int64_t cycle_form(const Permutation& alpha, const Permutation& beta);

/// Finite integer combination of permutations of one degree. Zero
/// coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::uint32_t degree) : degree_(degree) {}
  /// The basis element 1*sigma.
  GroupAlgebraElement(const Permutation& sigma, std::int64_t coefficient = 1);  // NOLINT
  /// The identity of S_n with the given coefficient.
  static GroupAlgebraElement unit(std::uint32_t degree, std::int64_t coefficient = 1);

  std::uint32_t degree() const { return degree_; }
  const std::map<Permutation, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Permutation& sigma) const;

  GroupAlgebraElement& add(const Permutation& sigma, std::int64_t coefficient);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);

  friend GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x += y; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x -= y; }
  /// Convolution product in Z[S_n]: sigma * tau = compose(sigma, tau).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
  friend GroupAlgebraElement operator*(std::int64_t s, GroupAlgebraElement x);

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  void check_degree(const GroupAlgebraElement& other) const;

  std::uint32_t degree_;
  std::map<Permutation, std::int64_t> terms_;
};

/// Bilinear extension: sum over term pairs of coefficient products times
/// the cycle form of the permutations.
std::int64_t cycle_form_bilinear(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Right-hand side of the cycle decomposition identity
///
///   <alpha, beta> = sum_j c_j(alpha) <gamma_j, beta> + (1 - c(alpha)) p c(beta)
///
/// with gamma_j a j-cycle of S_p and p the degree of alpha.
std::int64_t cycle_form_via_decomposition(const CycleType& alpha, const CycleType& beta);

/// <1 - gamma_len, beta> with gamma_len an len-cycle in S_p and 1 the identity
/// of S_p.
std::int64_t one_minus_cycle_form(std::uint32_t len, std::uint32_t p, const CycleType& beta);

/// <1, beta> - (len - 1) * sum over s not divisible by len of c_s(beta).
/// Equals <gamma_len, beta> whenever len is prime.
std::int64_t prime_cycle_bracket(std::uint32_t len, std::uint32_t p, const CycleType& beta);

/// <1 - gamma_len, beta> - (len - 1)(c(beta) - q/len), never negative.
BigRational bound_1a_gap(std::uint32_t len, std::uint32_t p, const CycleType& beta);

/// sum_j c_j(alpha)/j - (c(alpha) - p)/2, never negative.
BigRational bound_5_gap(const CycleType& alpha);

}  // namespace bicount
