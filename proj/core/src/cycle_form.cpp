#include "bicount/cycle_form.hpp"

#include <numeric>
#include <stdexcept>

namespace bicount {

std::int64_t cycle_form(const CycleType& alpha, const CycleType& beta) {
  std::int64_t total = 0;
  const auto beta_parts = beta.parts();
  for (const auto& a : alpha.parts()) {
    for (const auto& b : beta_parts) {
      total += static_cast<std::int64_t>(std::gcd(a.length, b.length)) * a.multiplicity * b.multiplicity;
    }
  }
  return total;
}

std::int64_t cycle_form(const Permutation& alpha, const Permutation& beta) {
  return cycle_form(cycle_type(alpha), cycle_type(beta));
}

// ------------------------------------------------------ group algebra

GroupAlgebraElement::GroupAlgebraElement(const Permutation& sigma, std::int64_t coefficient)
    : degree_(sigma.degree()) {
  add(sigma, coefficient);
}

GroupAlgebraElement GroupAlgebraElement::unit(std::uint32_t degree, std::int64_t coefficient) {
  return GroupAlgebraElement(Permutation::identity(degree), coefficient);
}

std::int64_t GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? 0 : it->second;
}

GroupAlgebraElement& GroupAlgebraElement::add(const Permutation& sigma, std::int64_t coefficient) {
  if (sigma.degree() != degree_) throw std::invalid_argument("group algebra: degree mismatch");
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(sigma, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void GroupAlgebraElement::check_degree(const GroupAlgebraElement& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("group algebra: degree mismatch");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  check_degree(other);
  for (const auto& [sigma, c] : other.terms_) add(sigma, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  check_degree(other);
  for (const auto& [sigma, c] : other.terms_) add(sigma, -c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  x.check_degree(y);
  GroupAlgebraElement out(x.degree_);
  for (const auto& [s, a] : x.terms_) {
    for (const auto& [t, b] : y.terms_) out.add(compose(s, t), a * b);
  }
  return out;
}

GroupAlgebraElement operator*(std::int64_t s, GroupAlgebraElement x) {
  if (s == 0) return GroupAlgebraElement(x.degree_);
  for (auto& [sigma, c] : x.terms_) c *= s;
  return x;
}

std::int64_t cycle_form_bilinear(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  std::int64_t total = 0;
  for (const auto& [s, a] : x.terms()) {
    const auto ts = cycle_type(s);
    for (const auto& [t, b] : y.terms()) total += a * b * cycle_form(ts, cycle_type(t));
  }
  return total;
}

// ------------------------------------------------------- lemma helpers

std::int64_t cycle_form_via_decomposition(const CycleType& alpha, const CycleType& beta) {
  const std::int64_t p = alpha.degree();
  const std::int64_t c_beta = beta.total_cycles();
  std::int64_t total = (1 - static_cast<std::int64_t>(alpha.total_cycles())) * p * c_beta;
  for (const auto& part : alpha.parts()) {
    total += static_cast<std::int64_t>(part.multiplicity) *
             cycle_form(CycleType::cycle(alpha.degree(), part.length), beta);
  }
  return total;
}

std::int64_t one_minus_cycle_form(std::uint32_t len, std::uint32_t p, const CycleType& beta) {
  return cycle_form(CycleType::identity(p), beta) - cycle_form(CycleType::cycle(p, len), beta);
}

std::int64_t prime_cycle_bracket(std::uint32_t len, std::uint32_t p, const CycleType& beta) {
  std::int64_t coprime_cycles = 0;
  for (const auto& part : beta.parts()) {
    if (part.length % len != 0) coprime_cycles += part.multiplicity;
  }
  return cycle_form(CycleType::identity(p), beta) - static_cast<std::int64_t>(len - 1) * coprime_cycles;
}

BigRational bound_1a_gap(std::uint32_t len, std::uint32_t p, const CycleType& beta) {
  if (len < 1 || len > p) throw std::invalid_argument("bound_1a_gap: need 1 <= length <= p");
  const BigRational lhs(one_minus_cycle_form(len, p, beta));
  const BigRational avg_term = BigRational(beta.total_cycles()) - make_rational(beta.degree(), len);
  return BigRational(lhs - BigRational(len - 1) * avg_term);
}

BigRational bound_5_gap(const CycleType& alpha) {
  BigRational sum = 0;
  for (const auto& part : alpha.parts()) sum += make_rational(part.multiplicity, part.length);
  const BigRational rhs =
      make_rational(static_cast<long>(alpha.total_cycles()) - static_cast<long>(alpha.degree()), 2);
  return BigRational(sum - rhs);
}

}  // namespace bicount
