#pragma once

// Literal, factorial-cost evaluations of quantities that the production code
// computes through Stirling numbers or class sums. Small inputs only; they
// serve as independent oracles for the verification suites.

#include "bicount/dirichlet.hpp"
#include "bicount/exact.hpp"

#include <cstdint>

namespace bicount::reference {

/// c(n, k) by counting permutations of degree n with k cycles.
BigInt stirling_by_enumeration(std::uint32_t n, std::uint32_t k);

/// (1/p!) sum over all sigma in S_p of chi(sigma).
QSqrt2 average_by_enumeration(const CyclicCharacter& chi);

/// 1/(p! q!) sum_{alpha in S_p} sum_{beta in S_q} z^(-c(alpha) c(beta)) z'^(-c(alpha)).
QSqrt2 twisted_product_by_enumeration(std::uint32_t p, const QSqrt2& z, std::uint32_t q, const QSqrt2& z_prime);

}  // namespace bicount::reference
