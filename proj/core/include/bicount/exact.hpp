#pragma once

// Exact arithmetic: big integers and rationals (GMP), the quadratic ring
// Q(sqrt2), half-integer powers of two, Stirling numbers of the first kind,
// rising factorials, binomials and decimal rendering.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bicount {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt factorial(std::uint32_t n);
BigInt pow2_int(std::uint64_t e);

/// Exact rational from numerator/denominator, canonicalized.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// "n" or "n/d" (no spaces). Throws std::invalid_argument on bad input.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& x);
/// "num/den", or "num" when den == 1.
std::string to_string(const BigRational& x);

/// An element a + b*sqrt(2) with rational a, b.
///
/// The representation is unique because sqrt(2) is irrational, so equality
/// is componentwise and the sign is decidable without floating point.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(BigInt a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(BigRational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {BigRational(0), BigRational(1)}; }

  const BigRational& rational_part() const { return a_; }
  const BigRational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// -1, 0 or +1.
  int sign() const;

  /// a - b*sqrt2
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// a^2 - 2 b^2, the field norm.
  BigRational norm() const { return a_ * a_ - 2 * b_ * b_; }
  /// Throws std::domain_error on zero.
  QSqrt2 inverse() const;
  /// Integer power; negative exponents invert first.
  QSqrt2 pow(std::int64_t e) const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  QSqrt2 operator-() const { return {-a_, -b_}; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

  /// Long double approximation; for diagnostics only.
  long double approx() const;

 private:
  BigRational a_{0};
  BigRational b_{0};
};

/// Lossless text form: "a", "b*sqrt2" or "a+b*sqrt2" with a, b as
/// rationals ("-1/2+3*sqrt2"). parse_qsqrt2 inverts to_string.
std::string to_string(const QSqrt2& x);
/// Accepts everything to_string emits plus "sqrt2" / "-sqrt2" shorthands.
QSqrt2 parse_qsqrt2(std::string_view text);

/// A value twice/2 with integral `twice`; used for exponents like pq/2.
struct HalfInteger {
  BigInt twice{0};

  static HalfInteger from_int(std::int64_t v) { return {BigInt(2 * v)}; }
  static HalfInteger halves(std::int64_t twice) { return {BigInt(twice)}; }

  friend HalfInteger operator+(const HalfInteger& x, const HalfInteger& y) {
    return {x.twice + y.twice};
  }
  friend bool operator==(const HalfInteger& x, const HalfInteger& y) { return x.twice == y.twice; }
};

/// 2^e for half-integer e, exactly: 2^floor(e) or 2^floor(e)*sqrt2.
QSqrt2 pow2(const HalfInteger& e);

/// Signless Stirling numbers of the first kind c(n, k), memoized.
///
/// Rows are filled on demand by c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
/// Reads are concurrent; growth takes an exclusive lock.
class StirlingTable {
 public:
  StirlingTable() = default;
  StirlingTable(const StirlingTable& other);
  StirlingTable& operator=(const StirlingTable&) = delete;

  BigInt get(std::uint32_t n, std::uint32_t k) const;
  /// Row n: c(n, 0..n).
  std::vector<BigInt> row(std::uint32_t n) const;

  /// Copy of this table with entry (n, k) replaced. Exists so the
  /// verification suites can be run against a corrupted table and shown
  /// to fail.
  std::unique_ptr<StirlingTable> with_override(std::uint32_t n, std::uint32_t k,
                                               BigInt value) const;

 private:
  void ensure(std::uint32_t n) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
  struct Override {
    std::uint32_t n, k;
    BigInt value;
  };
  std::vector<Override> overrides_;
};

/// Process-wide shared table.
const StirlingTable& stirling_table();

BigInt stirling_first(std::uint32_t n, std::uint32_t k);

BigRational rising_factorial(const BigRational& x, std::uint32_t n);
QSqrt2 rising_factorial(const QSqrt2& x, std::uint32_t n);

/// Binomial coefficient for big n; 0 when k > n.
BigInt binomial(const BigInt& n, std::uint64_t k);

/// Integer square root (floor).
BigInt isqrt(const BigInt& x);

/// Decimal expansion of x rounded half-even to `places` fractional digits.
/// Requires 1 <= places <= 50.
std::string decimal_render(const QSqrt2& x, int places);

}  // namespace bicount
