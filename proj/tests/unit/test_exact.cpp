#include "bicount/exact.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace bicount;

namespace {

QSqrt2 q(long a, long b = 0) { return {BigRational(a), BigRational(b)}; }
BigRational r(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_first(3, 2) == 3);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(5, 0) == 0);
  CHECK(stirling_first(3, 7) == 0);
  for (std::uint32_t n = 0; n <= 20; ++n) CHECK(stirling_first(n, n) == 1);

  SUBCASE("agrees with permutation counts") {
    CHECK(oracle::stirling_count(3, 2) == 3);
    CHECK(oracle::stirling_count(4, 2) == 11);
    for (int n = 1; n <= 7; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(stirling_first(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)) ==
              oracle::stirling_count(n, k));
      }
    }
  }
}

TEST_CASE("stirling row generates the rising factorial") {
  const std::vector<BigRational> points{r(1), r(2), r(1, 2), r(-3), r(7, 5)};
  for (std::uint32_t n = 0; n <= 30; ++n) {
    for (const auto& x : points) {
      BigRational sum = 0, xk = 1;
      for (std::uint32_t k = 0; k <= n; ++k) {
        sum += stirling_first(n, k) * xk;
        xk *= x;
      }
      CHECK(sum == rising_factorial(x, n));
    }
  }
}

TEST_CASE("stirling table override leaves the shared table alone") {
  auto bad = stirling_table().with_override(4, 2, 12);
  CHECK(bad->get(4, 2) == 12);
  CHECK(bad->get(4, 3) == 6);
  CHECK(stirling_first(4, 2) == 11);
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(r(5), 0) == 1);
  CHECK(rising_factorial(QSqrt2::sqrt2(), 0) == QSqrt2(1));
  CHECK(rising_factorial(r(3), 4) == 360);
  CHECK(rising_factorial(QSqrt2::sqrt2(), 2) == q(2, 1));
}

TEST_CASE("pow2 on half-integers") {
  CHECK(pow2(HalfInteger::from_int(3)) == QSqrt2(8));
  CHECK(pow2(HalfInteger::halves(1)) == QSqrt2::sqrt2());
  CHECK(pow2(HalfInteger::halves(-1)) == QSqrt2(r(0), r(1, 2)));
  CHECK(pow2(HalfInteger::halves(-4)) == QSqrt2(r(1, 4)));
  CHECK(pow2(HalfInteger::halves(0)) == QSqrt2(1));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-80, 80);
  for (int i = 0; i < 200; ++i) {
    const auto e = HalfInteger::halves(d(rng));
    const auto f = HalfInteger::halves(d(rng));
    CHECK(pow2(e) * pow2(f) == pow2(e + f));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  // (2^4 + 3 - 1, 3) by product / division: 18 * 17 * 16 / 6
  CHECK(binomial(pow2_int(4) + 2, 3) == 816);
  CHECK_THROWS(binomial(-1, 2));
}

TEST_CASE("Q(sqrt2) arithmetic") {
  const QSqrt2 x(r(3, 2), r(-1));
  CHECK(x * x.inverse() == QSqrt2(1));
  CHECK(x * x.conjugate() == QSqrt2(x.norm()));
  CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
  CHECK(QSqrt2::sqrt2().pow(-3) == QSqrt2(r(0), r(1, 4)));
  CHECK_THROWS_AS(QSqrt2().inverse(), std::domain_error);
  CHECK_THROWS_AS(x / QSqrt2(), std::domain_error);

  SUBCASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    auto rnd = [&] { return QSqrt2(r(num(rng), den(rng)), r(num(rng), den(rng))); };
    for (int i = 0; i < 1000; ++i) {
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * a.conjugate()).is_rational());
    }
  }
}

TEST_CASE("Q(sqrt2) sign is exact") {
  CHECK(QSqrt2().sign() == 0);
  CHECK(q(1, 1).sign() == 1);
  CHECK(q(-1, -1).sign() == -1);
  // 7 - 5 sqrt2 = 7 - 7.0710... < 0
  CHECK(q(7, -5).sign() == -1);
  // 99 - 70 sqrt2 = 0.00505... > 0
  CHECK(q(99, -70).sign() == 1);
  CHECK(q(-99, 70).sign() == -1);
  CHECK(q(-3, 5).sign() == 1);
  CHECK(q(2, 0) > QSqrt2::sqrt2());
  CHECK(QSqrt2(r(3, 2)) > QSqrt2::sqrt2());
  CHECK(QSqrt2(r(7, 5)) < QSqrt2::sqrt2());

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const QSqrt2 x = q(d(rng), d(rng));
    const long double v = x.approx();
    if (v > 1e-9L) CHECK(x.sign() == 1);
    if (v < -1e-9L) CHECK(x.sign() == -1);
  }
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "7", "-1/2", "sqrt2", "-1/3*sqrt2", "5+2*sqrt2", "-1/2-3/7*sqrt2"}) {
    const auto x = parse_qsqrt2(s);
    CHECK(parse_qsqrt2(to_string(x)) == x);
  }
  CHECK(parse_qsqrt2("sqrt2") == QSqrt2::sqrt2());
  CHECK(parse_qsqrt2("-sqrt2") == -QSqrt2::sqrt2());
  CHECK(parse_qsqrt2("1+sqrt2") == q(1, 1));
  CHECK(parse_qsqrt2("2/4") == QSqrt2(r(1, 2)));
  CHECK(to_string(q(5, 2)) == "5+2*sqrt2");
  CHECK(to_string(QSqrt2(r(-1, 2), r(-3, 7))) == "-1/2-3/7*sqrt2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_qsqrt2("1+x*sqrt2"));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (int i = 0; i < 300; ++i) {
    const QSqrt2 x(r(num(rng), den(rng)), r(num(rng), den(rng)));
    CHECK(parse_qsqrt2(to_string(x)) == x);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_render(QSqrt2(7), 6) == "7.000000");
  CHECK(decimal_render(QSqrt2::sqrt2(), 6) == "1.414214");
  CHECK(decimal_render(QSqrt2(r(1, 3)), 4) == "0.3333");
  CHECK(decimal_render(QSqrt2(r(-1, 3)), 4) == "-0.3333");
  CHECK(decimal_render(QSqrt2::sqrt2(), 50) == "1.41421356237309504880168872420969807856967187537695");
  // half-even on exact ties
  CHECK(decimal_render(QSqrt2(r(1, 8)), 2) == "0.12");
  CHECK(decimal_render(QSqrt2(r(3, 8)), 2) == "0.38");
  CHECK(decimal_render(QSqrt2(r(-3, 8)), 2) == "-0.38");
  // 99 - 70 sqrt2 = 0.005050633883346...
  CHECK(decimal_render(q(99, -70), 6) == "0.005051");
  CHECK(decimal_render(q(1, 1), 3) == "2.414");
  CHECK_THROWS(decimal_render(QSqrt2(1), 0));
  CHECK_THROWS(decimal_render(QSqrt2(1), 51));
}

TEST_CASE("rising factorial is at most the arithmetic-mean power") {
  for (long a = 1; a <= 20; ++a) {
    for (std::uint32_t b = 1; b <= 20; ++b) {
      const BigRational mean = r(a) + r(b - 1, 2);
      BigRational power = 1;
      for (std::uint32_t i = 0; i < b; ++i) power *= mean;
      CHECK(rising_factorial(r(a), b) <= power);
    }
  }
}
