#include "bicount/dirichlet.hpp"

#include <stdexcept>

namespace bicount {

CyclicCharacter::CyclicCharacter(std::uint32_t degree, QSqrt2 base) : degree_(degree), base_(std::move(base)) {
  if (base_.is_zero()) throw std::invalid_argument("cyclic character base must be nonzero");
}

QSqrt2 CyclicCharacter::operator()(const CycleType& type) const {
  if (type.degree() != degree_) throw std::invalid_argument("character evaluated on wrong degree");
  return base_.pow(static_cast<std::int64_t>(degree_) - type.total_cycles());
}

QSqrt2 CyclicCharacter::operator()(const Permutation& sigma) const { return (*this)(cycle_type(sigma)); }

QSqrt2 char_eval(const CyclicCharacter& chi, const Permutation& sigma) { return chi(sigma); }

QSqrt2 ClassFunctionTable::evaluate(const CycleType& type) const {
  if (type.degree() != degree()) throw std::invalid_argument("class function evaluated on wrong degree");
  QSqrt2 v(1);
  for (const auto& part : type.parts()) v *= values[part.length - 1].pow(part.multiplicity);
  return v;
}

ClassFunctionTable class_function_table(const CyclicCharacter& chi) {
  ClassFunctionTable t;
  QSqrt2 v(1);
  for (std::uint32_t i = 1; i <= chi.degree(); ++i) {
    t.values.push_back(v);
    v *= chi.base();
  }
  return t;
}

bool verify_cyclic(const ClassFunctionTable& table) {
  if (table.values.empty()) return true;
  if (table.values[0] != QSqrt2(1)) return false;
  if (table.values.size() < 2) return true;
  const QSqrt2& z = table.values[1];
  QSqrt2 expected = z;
  for (std::size_t i = 2; i < table.values.size(); ++i) {
    expected *= z;
    if (table.values[i] != expected) return false;
  }
  return true;
}

QSqrt2 avg_char(const CyclicCharacter& chi) {
  const auto p = chi.degree();
  if (p == 0) return QSqrt2(1);
  const QSqrt2& z = chi.base();
  return z.pow(p) * rising_factorial(z.inverse(), p) / QSqrt2(factorial(p));
}

QSqrt2 twisted_product(std::uint32_t p, const QSqrt2& z, std::uint32_t q, const QSqrt2& z_prime,
                       const StirlingTable& stirling) {
  if (p == 0 || q == 0) throw std::invalid_argument("twisted product needs p, q >= 1");
  if (z.is_zero() || z_prime.is_zero()) throw std::invalid_argument("twisted product needs nonzero bases");
  const QSqrt2 z_inv = z.inverse();
  const QSqrt2 zp_inv = z_prime.inverse();
  const auto row_q = stirling.row(q);

  QSqrt2 total;
  QSqrt2 z_inv_k(1);   // z^-k
  QSqrt2 zp_inv_k(1);  // z'^-k
  for (std::uint32_t k = 1; k <= p; ++k) {
    z_inv_k *= z_inv;
    zp_inv_k *= zp_inv;
    const BigInt c_pk = stirling.get(p, k);
    if (c_pk == 0) continue;
    QSqrt2 inner;
    QSqrt2 w(1);  // z^(-k l)
    for (std::uint32_t l = 1; l <= q; ++l) {
      w *= z_inv_k;
      if (row_q[l] != 0) inner += QSqrt2(row_q[l]) * w;
    }
    total += QSqrt2(c_pk) * inner * zp_inv_k;
  }
  return total / QSqrt2(BigInt(factorial(p) * factorial(q)));
}

}  // namespace bicount
