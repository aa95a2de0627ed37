#pragma once

// Cyclic Dirichlet characters on symmetric groups.
//
// A Dirichlet character on S_p is a class function with chi(1) = 1 that is
// multiplicative on disjoint permutations. It is cyclic when its value on an
// i-cycle is z^(i-1), z being its value on a transposition; then
// chi(sigma) = z^(p - c(sigma)). Bases are restricted to Q(sqrt2)^x.

#include "bicount/exact.hpp"
#include "bicount/permutation.hpp"

#include <cstdint>
#include <vector>

namespace bicount {

class CyclicCharacter {
 public:
  /// Throws std::invalid_argument when base is zero.
  CyclicCharacter(std::uint32_t degree, QSqrt2 base);

  std::uint32_t degree() const { return degree_; }
  const QSqrt2& base() const { return base_; }

  /// base^(p - c(sigma)); throws on degree mismatch.
  QSqrt2 operator()(const Permutation& sigma) const;
  QSqrt2 operator()(const CycleType& type) const;

 private:
  std::uint32_t degree_;
  QSqrt2 base_;
};

/// Values z_1..z_p of a Dirichlet character on the i-cycles of S_p.
struct ClassFunctionTable {
  std::vector<QSqrt2> values;  // values[i-1] = value on an i-cycle

  std::uint32_t degree() const { return static_cast<std::uint32_t>(values.size()); }
  /// Value on a permutation of the given type: product over its cycles.
  QSqrt2 evaluate(const CycleType& type) const;
};

/// Table of chi_z on S_p.
ClassFunctionTable class_function_table(const CyclicCharacter& chi);

QSqrt2 char_eval(const CyclicCharacter& chi, const Permutation& sigma);

/// z_i == z_2^(i-1) for all 2 <= i <= p (vacuous when p <= 1). Also
/// requires z_1 == 1.
bool verify_cyclic(const ClassFunctionTable& table);

/// Average of chi over S_p, as chi(tau)^p (chi(tau)^-1)^(rising p) / p!.
/// p = 0 gives 1.
QSqrt2 avg_char(const CyclicCharacter& chi);

/// Twisted product ((chi_z, chi_z')) for chi_z on S_p and chi_z' on S_q:
///
///   1/(p! q!) * sum_{k=1..p} sum_{l=1..q} c(p,k) c(q,l) z^(-k l) z'^(-k)
///
/// O(p q) ring operations. Requires p, q >= 1 and nonzero bases.
QSqrt2 twisted_product(std::uint32_t p, const QSqrt2& z, std::uint32_t q, const QSqrt2& z_prime,
                       const StirlingTable& stirling = stirling_table());

inline QSqrt2 twisted_product(const CyclicCharacter& chi, const CyclicCharacter& chi_prime,
                              const StirlingTable& stirling = stirling_table()) {
  return twisted_product(chi.degree(), chi.base(), chi_prime.degree(), chi_prime.base(), stirling);
}

}  // namespace bicount
