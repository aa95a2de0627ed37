#include "bicount/cycle_form.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <numeric>
#include <random>

using namespace bicount;

namespace {

// Independent form: count orbits of <alpha> x <beta> on {0..p-1} x {0..q-1}.
long orbit_form(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t p = a.size(), q = b.size();
  std::vector<bool> seen(p * q, false);
  long orbits = 0;
  for (std::size_t i = 0; i < p * q; ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::size_t r = i / (q ? q : 1), c = i % (q ? q : 1);
    while (!seen[r * q + c]) {
      seen[r * q + c] = true;
      r = static_cast<std::size_t>(a[r]);
      c = static_cast<std::size_t>(b[c]);
    }
  }
  return orbits;
}

Permutation from_zero_based(const std::vector<int>& v) {
  std::vector<std::uint32_t> images;
  for (int x : v) images.push_back(static_cast<std::uint32_t>(x + 1));
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("cycle form values") {
  CHECK(cycle_form(CycleType::identity(3), CycleType::identity(4)) == 12);
  CHECK(cycle_form(CycleType::cycle(4, 4), CycleType::cycle(6, 6)) == 2);
  CHECK(cycle_form(CycleType::cycle(5, 5), CycleType::cycle(3, 3)) == 1);
  CHECK(cycle_form(CycleType::from_parts({2, 1}), CycleType::from_parts({2, 2})) == 6);
  CHECK(cycle_form(CycleType::identity(0), CycleType::identity(5)) == 0);
}

TEST_CASE("cycle form counts orbits of the cyclic product action") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      for (const auto& a : oracle::permutations(p)) {
        for (const auto& b : oracle::permutations(q)) {
          CHECK(cycle_form(from_zero_based(a), from_zero_based(b)) == orbit_form(a, b));
        }
      }
    }
  }
}

TEST_CASE("symmetry") {
  for (std::uint32_t p = 1; p <= 7; ++p) {
    for (std::uint32_t q = 1; q <= 7; ++q) {
      for (const auto& a : partitions(p)) {
        for (const auto& b : partitions(q)) CHECK(cycle_form(a, b) == cycle_form(b, a));
      }
    }
  }
}

TEST_CASE("group algebra") {
  const auto t = parse_cycles(3, "(1 2)");
  const auto c = parse_cycles(3, "(1 2 3)");
  GroupAlgebraElement x = GroupAlgebraElement::unit(3) - GroupAlgebraElement(t);
  CHECK(x.coefficient(Permutation::identity(3)) == 1);
  CHECK(x.coefficient(t) == -1);
  CHECK(x.coefficient(c) == 0);
  // (1 - t)^2 = 2 (1 - t)
  CHECK(x * x == 2 * x);
  CHECK((x - x).terms().empty());
  CHECK_THROWS(GroupAlgebraElement::unit(2) + GroupAlgebraElement::unit(3));

  const GroupAlgebraElement y = GroupAlgebraElement(parse_cycles(4, "(1 2)(3 4)"), 3) + GroupAlgebraElement::unit(4, -2);
  const auto ty = cycle_type(parse_cycles(4, "(1 2)(3 4)"));
  CHECK(cycle_form_bilinear(x, y) ==
        3 * cycle_form(CycleType::identity(3), ty) - 2 * cycle_form(CycleType::identity(3), CycleType::identity(4)) -
            3 * cycle_form(cycle_type(t), ty) + 2 * cycle_form(cycle_type(t), CycleType::identity(4)));
}

TEST_CASE("bilinearity on random group-algebra elements") {
  std::mt19937_64 rng(23);
  auto random_element = [&](std::uint32_t n) {
    std::vector<Permutation> perms;
    for_each_permutation(n, [&](const Permutation& s) { perms.push_back(s); });
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    GroupAlgebraElement e(n);
    for (int i = 0; i < 4; ++i) e.add(perms[pick(rng)], coef(rng));
    return e;
  };
  for (int i = 0; i < 100; ++i) {
    const auto x1 = random_element(4), x2 = random_element(4), y = random_element(3);
    CHECK(cycle_form_bilinear(x1 + x2, y) == cycle_form_bilinear(x1, y) + cycle_form_bilinear(x2, y));
    CHECK(cycle_form_bilinear(3 * x1, y) == 3 * cycle_form_bilinear(x1, y));
  }
}

TEST_CASE("cycle decomposition") {
  // (1 2)(3 4) in S_4 against a 4-cycle
  CHECK(cycle_form_via_decomposition(CycleType::from_parts({2, 2}), CycleType::cycle(4, 4)) == 4);
  CHECK(cycle_form(CycleType::from_parts({2, 2}), CycleType::cycle(4, 4)) == 4);
  // a transposition in S_2 against a 2-cycle
  CHECK(cycle_form_via_decomposition(CycleType::cycle(2, 2), CycleType::cycle(2, 2)) == 2);
  CHECK(cycle_form_via_decomposition(CycleType::cycle(3, 3), CycleType::cycle(2, 2)) == 1);
  for (std::uint32_t p = 1; p <= 8; ++p) {
    for (std::uint32_t q = 1; q <= 8; ++q) {
      for (const auto& a : partitions(p)) {
        for (const auto& b : partitions(q)) CHECK(cycle_form_via_decomposition(a, b) == cycle_form(a, b));
      }
    }
  }
}

TEST_CASE("prime cycles") {
  for (std::uint32_t len : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t p = len; p <= 8; ++p) {
      for (std::uint32_t q = 1; q <= 8; ++q) {
        for (const auto& b : partitions(q)) {
          CHECK(prime_cycle_bracket(len, p, b) == cycle_form(CycleType::cycle(p, len), b));
        }
      }
    }
  }
  // composite length: the bracket misses gcd contributions
  CHECK(prime_cycle_bracket(4, 4, CycleType::cycle(2, 2)) != cycle_form(CycleType::cycle(4, 4), CycleType::cycle(2, 2)));
  CHECK(one_minus_cycle_form(3, 3, CycleType::identity(2)) ==
        cycle_form(CycleType::identity(3), CycleType::identity(2)) - cycle_form(CycleType::cycle(3, 3), CycleType::identity(2)));
}

TEST_CASE("gap inequalities") {
  // len = 2 on the identity of S_q leaves q/2
  for (std::uint32_t q = 1; q <= 10; ++q) CHECK(bound_1a_gap(2, 4, CycleType::identity(q)) == make_rational(q, 2));
  // one q-cycle with len | q leaves (len - 1)(q/len - 1)
  CHECK(bound_1a_gap(3, 5, CycleType::cycle(9, 9)) == 4);
  CHECK(bound_1a_gap(2, 2, CycleType::cycle(6, 6)) == 2);
  CHECK(bound_1a_gap(5, 5, CycleType::cycle(5, 5)) == 0);

  for (std::uint32_t len = 1; len <= 6; ++len) {
    for (std::uint32_t p = len; p <= 7; ++p) {
      for (std::uint32_t q = 1; q <= 9; ++q) {
        for (const auto& b : partitions(q)) CHECK(bound_1a_gap(len, p, b) >= 0);
      }
    }
  }

  CHECK(bound_5_gap(CycleType::identity(1)) == 1);
  for (std::uint32_t p = 1; p <= 12; ++p) {
    CHECK(bound_5_gap(CycleType::identity(p)) == p);
    CHECK(bound_5_gap(CycleType::cycle(p, p)) == make_rational(1, p) - make_rational(1 - static_cast<long>(p), 2));
    for (const auto& a : partitions(p)) CHECK(bound_5_gap(a) >= 0);
  }
}
