#include "bicount/dirichlet.hpp"
#include "bicount/reference.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace bicount;

namespace {

BigRational r(long n, long d = 1) { return make_rational(n, d); }

std::vector<QSqrt2> sample_bases() {
  return {QSqrt2(1), QSqrt2(2), QSqrt2(r(1, 2)), QSqrt2::sqrt2(), QSqrt2(r(-3)), QSqrt2(r(1), r(1)),
          QSqrt2(r(2, 3), r(-1, 5))};
}

}  // namespace

TEST_CASE("character values") {
  const CyclicCharacter chi(5, QSqrt2(3));
  CHECK(chi(Permutation::identity(5)) == QSqrt2(1));
  CHECK(chi(parse_cycles(5, "(1 2)")) == QSqrt2(3));
  CHECK(chi(parse_cycles(5, "(1 2 3)(4 5)")) == QSqrt2(27));
  CHECK(chi(parse_cycles(5, "(1 2 3 4 5)")) == QSqrt2(81));
  CHECK(char_eval(chi, parse_cycles(5, "(1 3)(2 4)")) == QSqrt2(9));
  CHECK_THROWS(chi(Permutation::identity(4)));
  CHECK_THROWS_AS(CyclicCharacter(3, QSqrt2()), std::invalid_argument);
}

TEST_CASE("character is multiplicative on disjoint permutations") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p = 2; p <= 6; ++p) {
    std::vector<Permutation> perms;
    for_each_permutation(p, [&](const Permutation& s) { perms.push_back(s); });
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (const auto& z : sample_bases()) {
      const CyclicCharacter chi(p, z);
      for (int i = 0; i < 200; ++i) {
        const auto& a = perms[pick(rng)];
        const auto& b = perms[pick(rng)];
        if (disjoint(a, b)) CHECK(chi(compose(a, b)) == chi(a) * chi(b));
        CHECK(chi(compose(compose(b, a), b.inverse())) == chi(a));
      }
    }
  }
}

TEST_CASE("class function table") {
  const CyclicCharacter chi(4, QSqrt2::sqrt2());
  const auto table = class_function_table(chi);
  REQUIRE(table.degree() == 4);
  CHECK(table.values[0] == QSqrt2(1));
  CHECK(table.values[1] == QSqrt2::sqrt2());
  CHECK(table.values[3] == QSqrt2(r(0), r(2)));
  CHECK(verify_cyclic(table));
  CHECK(table.evaluate(cycle_type(parse_cycles(4, "(1 2)(3 4)"))) == QSqrt2(2));

  auto bent = table;
  bent.values[2] = QSqrt2(5);
  CHECK_FALSE(verify_cyclic(bent));
  auto bad_unit = table;
  bad_unit.values[0] = QSqrt2(2);
  CHECK_FALSE(verify_cyclic(bad_unit));
  CHECK(verify_cyclic(ClassFunctionTable{{QSqrt2(1)}}));
  CHECK(verify_cyclic(ClassFunctionTable{}));
}

TEST_CASE("average of a cyclic character") {
  // (1 + z) / 2 on S_2
  CHECK(avg_char(CyclicCharacter(2, QSqrt2(3))) == QSqrt2(2));
  CHECK(avg_char(CyclicCharacter(0, QSqrt2(3))) == QSqrt2(1));
  CHECK(avg_char(CyclicCharacter(6, QSqrt2(1))) == QSqrt2(1));
  for (std::uint32_t p = 1; p <= 6; ++p) {
    for (const auto& z : sample_bases()) {
      const CyclicCharacter chi(p, z);
      CHECK(avg_char(chi) == reference::average_by_enumeration(chi));
    }
  }
}

TEST_CASE("twisted product") {
  CHECK(twisted_product(2, QSqrt2(r(1, 2)), 2, QSqrt2(2)) == QSqrt2(2));
  CHECK(twisted_product(1, QSqrt2(r(1, 2)), 1, QSqrt2::sqrt2()) == QSqrt2::sqrt2());
  CHECK(twisted_product(1, QSqrt2(1), 1, QSqrt2(1)) == QSqrt2(1));
  CHECK_THROWS(twisted_product(2, QSqrt2(), 2, QSqrt2(1)));
  CHECK_THROWS(twisted_product(2, QSqrt2(1), 2, QSqrt2()));

  SUBCASE("trivial characters give 1") {
    for (std::uint32_t p = 1; p <= 12; ++p) {
      for (std::uint32_t q = 1; q <= 12; ++q) CHECK(twisted_product(p, QSqrt2(1), q, QSqrt2(1)) == QSqrt2(1));
    }
  }

  SUBCASE("stirling form matches the permutation double sum") {
    const auto bases = sample_bases();
    for (std::uint32_t p = 1; p <= 4; ++p) {
      for (std::uint32_t q = 1; q <= 4; ++q) {
        for (const auto& z : bases) {
          for (const auto& w : bases) {
            CHECK(twisted_product(p, z, q, w) == reference::twisted_product_by_enumeration(p, z, q, w));
          }
        }
      }
    }
  }

  SUBCASE("character overload") {
    const CyclicCharacter a(3, QSqrt2(r(1, 2))), b(3, QSqrt2(r(0), r(2)));
    CHECK(twisted_product(a, b) == twisted_product(3, a.base(), 3, b.base()));
  }
}

TEST_CASE("reference stirling agrees with oracle") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      CHECK(reference::stirling_by_enumeration(n, k) == oracle::stirling_count(static_cast<int>(n), static_cast<int>(k)));
    }
  }
}
