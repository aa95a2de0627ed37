#include "bicount/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace bicount {

BigInt factorial(std::uint32_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2_int(std::uint64_t e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string buf(text);
  // mpq_set_str is lenient about some malformed input; check the shape first.
  std::size_t slash = buf.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    return !part.empty() && std::all_of(part.begin(), part.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  bool ok = slash == std::string::npos
                ? digits_ok(buf, true)
                : digits_ok(std::string_view(buf).substr(0, slash), true) &&
                      digits_ok(std::string_view(buf).substr(slash + 1), false);
  if (!ok) throw std::invalid_argument("malformed rational: " + buf);
  BigRational r;
  if (r.set_str(buf, 10) != 0) throw std::invalid_argument("malformed rational: " + buf);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + buf);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRational& x) { return x.get_str(); }

// ---------------------------------------------------------------- QSqrt2

int QSqrt2::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: compare a^2 with 2 b^2.
  int c = cmp(BigRational(a_ * a_), BigRational(2 * b_ * b_));
  return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt2)");
  BigRational n = norm();
  return {BigRational(a_ / n), BigRational(-b_ / n)};
}

QSqrt2 QSqrt2::pow(std::int64_t e) const {
  QSqrt2 base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  QSqrt2 result(1);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
  BigRational a = a_ * o.a_ + 2 * b_ * o.b_;
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

long double QSqrt2::approx() const {
  return static_cast<long double>(a_.get_d()) +
         static_cast<long double>(b_.get_d()) * 1.41421356237309504880168872420969808L;
}

std::string to_string(const QSqrt2& x) {
  const auto& a = x.rational_part();
  const auto& b = x.sqrt2_part();
  if (sgn(b) == 0) return to_string(a);
  if (sgn(a) == 0) return to_string(b) + "*sqrt2";
  std::string out = to_string(a);
  out += sgn(b) < 0 ? "-" : "+";
  out += to_string(BigRational(abs(b)));
  out += "*sqrt2";
  return out;
}

QSqrt2 parse_qsqrt2(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kRoot = "sqrt2";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    return QSqrt2(parse_rational(text));
  }
  std::string_view body = text.substr(0, text.size() - kRoot.size());
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view rational_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view coef_text = split == std::string_view::npos ? body : body.substr(split);
  BigRational a = rational_text.empty() ? BigRational(0) : parse_rational(rational_text);
  BigRational b;
  if (coef_text.empty() || coef_text == "+") {
    b = 1;
  } else if (coef_text == "-") {
    b = -1;
  } else {
    b = parse_rational(coef_text);
  }
  return {a, b};
}

QSqrt2 pow2(const HalfInteger& e) {
  // floor division of twice by 2, remainder in {0, 1}
  BigInt fl;
  mpz_fdiv_q_2exp(fl.get_mpz_t(), e.twice.get_mpz_t(), 1);
  bool odd = mpz_odd_p(e.twice.get_mpz_t()) != 0;
  if (!fl.fits_slong_p()) throw std::overflow_error("pow2 exponent out of range");
  long f = fl.get_si();
  BigRational mag = f >= 0 ? BigRational(pow2_int(static_cast<std::uint64_t>(f)))
                           : make_rational(1, pow2_int(static_cast<std::uint64_t>(-f)));
  if (odd) return {BigRational(0), mag};
  return QSqrt2(mag);
}

// -------------------------------------------------------------- Stirling

StirlingTable::StirlingTable(const StirlingTable& other) {
  std::shared_lock lock(other.mutex_);
  rows_ = other.rows_;
  overrides_ = other.overrides_;
}

void StirlingTable::ensure(std::uint32_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (rows_.size() > n) return;
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= n) {
    const auto m = static_cast<std::uint32_t>(rows_.size());
    const auto& prev = rows_.back();
    std::vector<BigInt> next(m + 1);
    next[0] = 0;
    for (std::uint32_t k = 1; k <= m; ++k) {
      BigInt v = prev[k - 1];
      if (k < m) v += BigInt(m - 1) * prev[k];
      next[k] = std::move(v);
    }
    rows_.push_back(std::move(next));
  }
}

BigInt StirlingTable::get(std::uint32_t n, std::uint32_t k) const {
  for (const auto& o : overrides_) {
    if (o.n == n && o.k == k) return o.value;
  }
  if (k > n) return 0;
  ensure(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

std::vector<BigInt> StirlingTable::row(std::uint32_t n) const {
  std::vector<BigInt> out(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) out[k] = get(n, k);
  return out;
}

std::unique_ptr<StirlingTable> StirlingTable::with_override(std::uint32_t n, std::uint32_t k,
                                                            BigInt value) const {
  auto copy = std::make_unique<StirlingTable>(*this);
  copy->overrides_.push_back({n, k, std::move(value)});
  return copy;
}

const StirlingTable& stirling_table() {
  static const StirlingTable table;
  return table;
}

BigInt stirling_first(std::uint32_t n, std::uint32_t k) { return stirling_table().get(n, k); }

// ------------------------------------------------------- misc functions

BigRational rising_factorial(const BigRational& x, std::uint32_t n) {
  BigRational r = 1;
  for (std::uint32_t i = 0; i < n; ++i) r *= x + i;
  return r;
}

QSqrt2 rising_factorial(const QSqrt2& x, std::uint32_t n) {
  QSqrt2 r(1);
  for (std::uint32_t i = 0; i < n; ++i) r *= x + QSqrt2(static_cast<long>(i));
  return r;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw std::domain_error("binomial with negative n");
  if (n < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::string decimal_render(const QSqrt2& x, int places) {
  if (places < 1 || places > 50) throw std::invalid_argument("decimal places must be in 1..50");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const QSqrt2 y = x * QSqrt2(scale);

  // sqrt2 ~ root / 10^guard, root = isqrt(2 * 10^(2 guard)).
  const unsigned long guard = static_cast<unsigned long>(places) + 40;
  BigInt guard_scale;
  mpz_ui_pow_ui(guard_scale.get_mpz_t(), 10, guard);
  const BigInt root = isqrt(2 * guard_scale * guard_scale);
  BigRational approx = y.rational_part() + y.sqrt2_part() * make_rational(root, guard_scale);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), approx.get_num_mpz_t(), approx.get_den_mpz_t());

  // Exact correction so that fl = floor(y).
  while ((y - QSqrt2(fl)).sign() < 0) fl -= 1;
  while ((y - QSqrt2(BigInt(fl + 1))).sign() >= 0) fl += 1;

  const int half = (y - QSqrt2(BigRational(BigRational(fl) + make_rational(1, 2)))).sign();
  BigInt n = fl;
  if (half > 0 || (half == 0 && mpz_odd_p(fl.get_mpz_t()))) n += 1;

  const bool negative = n < 0;
  std::string digits = BigInt(abs(n)).get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  return negative ? "-" + digits : digits;
}

}  // namespace bicount
