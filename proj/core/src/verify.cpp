#include "bicount/verify.hpp"

#include "bicount/bounds.hpp"
#include "bicount/cycle_form.hpp"
#include "bicount/dirichlet.hpp"
#include "bicount/permutation.hpp"
#include "bicount/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace bicount {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "characters") return Suite::characters;
  if (name == "cycleform") return Suite::cycleform;
  if (name == "bounds") return Suite::bounds;
  if (name == "asymptotics") return Suite::asymptotics;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::characters: return "characters";
    case Suite::cycleform: return "cycleform";
    case Suite::bounds: return "bounds";
    case Suite::asymptotics: return "asymptotics";
  }
  return "?";
}

namespace {

// A check returns an empty string on success, otherwise a counterexample.
using Check = std::function<std::string()>;

class Runner {
 public:
  Runner(std::string suite, std::vector<PropertyResult>& out) : suite_(std::move(suite)), out_(out) {}

  void run(const std::string& name, const Check& check) {
    PropertyResult r{suite_, name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<PropertyResult>& out_;
};

template <typename... Args>
std::string describe(const Args&... args) {
  std::ostringstream s;
  ((s << args), ...);
  return s.str();
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

Permutation random_permutation(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

/// Two permutations of degree n with disjoint supports.
std::pair<Permutation, Permutation> random_disjoint_pair(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> points(n);
  std::iota(points.begin(), points.end(), 1u);
  std::shuffle(points.begin(), points.end(), rng);
  const auto split = std::uniform_int_distribution<std::uint32_t>(0, n)(rng);
  auto images_on = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> dom(points.begin() + static_cast<std::ptrdiff_t>(lo),
                                   points.begin() + static_cast<std::ptrdiff_t>(hi));
    auto img = dom;
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 1u);
    for (std::size_t i = 0; i < dom.size(); ++i) images[dom[i] - 1] = img[i];
    return Permutation::from_images(std::move(images));
  };
  return {images_on(0, split), images_on(split, n)};
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return make_rational(num(rng), den(rng));
}

QSqrt2 random_qsqrt2(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

std::vector<QSqrt2> test_bases() {
  return {QSqrt2(2), QSqrt2(make_rational(1, 2)), QSqrt2::sqrt2(), QSqrt2(-1),
          QSqrt2(make_rational(3, 2), BigRational(1))};
}

// ------------------------------------------------------------ characters

void characters_suite(Runner& run, const VerifyOptions& opt) {
  const StirlingTable& st = *opt.stirling;

  run.run("stirling matches permutation count (n <= 7)", [&]() -> std::string {
    for (std::uint32_t n = 0; n <= 7; ++n) {
      for (std::uint32_t k = 0; k <= n; ++k) {
        if (st.get(n, k) != reference::stirling_by_enumeration(n, k)) return describe("c(", n, ",", k, ")");
      }
    }
    return {};
  });

  run.run("stirling row sums to rising factorial (n <= 30)", [&]() -> std::string {
    const std::vector<BigRational> points{1, 2, make_rational(1, 2), -3, make_rational(7, 5)};
    for (std::uint32_t n = 0; n <= 30; ++n) {
      for (const auto& x : points) {
        BigRational sum = 0, xk = 1;
        for (std::uint32_t k = 0; k <= n; ++k) {
          sum += st.get(n, k) * xk;
          xk *= x;
        }
        if (sum != rising_factorial(x, n)) return describe("n=", n, " x=", to_string(x));
      }
    }
    return {};
  });

  run.run("dirichlet axioms (p <= 6, 5 bases)", [&]() -> std::string {
    for (std::uint32_t p = 0; p <= 6; ++p) {
      const auto perms = all_permutations(p);
      std::vector<std::uint32_t> cycles;
      for (const auto& s : perms) cycles.push_back(cycle_type(s).total_cycles());
      // (c(product), c(first), c(second)) for disjoint pairs, and
      // (c(conjugate), c(original)) for every conjugation.
      std::vector<std::array<std::uint32_t, 3>> products;
      std::vector<std::array<std::uint32_t, 2>> conjugates;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
          if (disjoint(perms[i], perms[j])) {
            products.push_back({cycle_type(compose(perms[i], perms[j])).total_cycles(), cycles[i], cycles[j]});
          }
          const auto conj = compose(compose(perms[j], perms[i]), perms[j].inverse());
          conjugates.push_back({cycle_type(conj).total_cycles(), cycles[i]});
        }
      }
      for (const auto& z : test_bases()) {
        const CyclicCharacter chi(p, z);
        if (chi(Permutation::identity(p)) != QSqrt2(1)) return describe("chi(1) != 1 at p=", p);
        // value of chi on a permutation with c cycles, indexed by c
        std::vector<QSqrt2> by_cycles(p + 1);
        for (std::uint32_t c = 0; c <= p; ++c) by_cycles[c] = z.pow(static_cast<std::int64_t>(p) - c);
        for (std::size_t i = 0; i < perms.size(); ++i) {
          if (chi(perms[i]) != by_cycles[cycles[i]]) return describe("evaluation p=", p, " ", to_string(perms[i]));
        }
        for (const auto& [cp, ci, cj] : products) {
          if (by_cycles[cp] != by_cycles[ci] * by_cycles[cj]) return describe("multiplicativity p=", p);
        }
        for (const auto& [cc, ci] : conjugates) {
          if (by_cycles[cc] != by_cycles[ci]) return describe("conjugation p=", p);
        }
      }
    }
    return {};
  });

  run.run("cyclicity (p <= 6, 5 bases)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 6; ++p) {
      for (const auto& z : test_bases()) {
        const CyclicCharacter chi(p, z);
        if (!verify_cyclic(class_function_table(chi))) return describe("table not cyclic p=", p);
        for (std::uint32_t i = 1; i <= p; ++i) {
          if (chi(make_cycle(p, i)) != z.pow(i - 1)) return describe("chi(gamma_", i, ") p=", p);
        }
      }
    }
    return {};
  });

  run.run("characterization condition (2) examples in S_5", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 5; ++trial) {
      QSqrt2 z = random_qsqrt2(rng);
      if (z.is_zero()) z = QSqrt2(3);
      const CyclicCharacter chi(5, z);
      const auto c123 = Permutation::from_cycles(5, {{1, 2, 3}});
      for (const auto& tau : {Permutation::from_cycles(5, {{3, 5}}), Permutation::from_cycles(5, {{4, 5}})}) {
        if (chi(compose(c123, tau)) != chi(c123) * chi(tau)) return describe("z=", to_string(z));
      }
    }
    return {};
  });

  run.run("average formula vs literal average (p <= 7)", [&]() -> std::string {
    const std::vector<QSqrt2> bases{QSqrt2(2), QSqrt2(make_rational(1, 2)), QSqrt2::sqrt2(), QSqrt2(-1)};
    for (std::uint32_t p = 1; p <= 7; ++p) {
      for (const auto& z : bases) {
        const CyclicCharacter chi(p, z);
        if (avg_char(chi) != reference::average_by_enumeration(chi)) return describe("p=", p, " z=", to_string(z));
      }
    }
    return {};
  });

  run.run("twisted product: stirling form vs permutation form (p, q <= 5)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 5; ++p) {
      for (std::uint32_t q = 1; q <= 5; ++q) {
        const std::vector<std::pair<QSqrt2, QSqrt2>> bases{
            {QSqrt2(make_rational(1, 2)), pow2(HalfInteger::halves(q))},
            {QSqrt2::sqrt2(), QSqrt2(-1)},
        };
        for (const auto& [z, zp] : bases) {
          if (twisted_product(p, z, q, zp, st) != reference::twisted_product_by_enumeration(p, z, q, zp)) {
            return describe("p=", p, " q=", q, " z=", to_string(z));
          }
        }
      }
    }
    return {};
  });

  run.run("twisted product of trivial characters is 1 (p, q <= 6)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 6; ++p) {
      for (std::uint32_t q = 1; q <= 6; ++q) {
        if (twisted_product(p, QSqrt2(1), q, QSqrt2(1), st) != QSqrt2(1)) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("Q(sqrt2) ring axioms (1000 random triples)", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 1);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_qsqrt2(rng), y = random_qsqrt2(rng), z = random_qsqrt2(rng);
      if ((x * y) * z != x * (y * z)) return "associativity";
      if (x * (y + z) != x * y + x * z) return "distributivity";
      const auto n = x * x.conjugate();
      if (!n.is_rational() || n.rational_part() != x.norm()) return "norm";
    }
    return {};
  });

  run.run("pow2 additivity (200 random half-integer pairs)", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 2);
    std::uniform_int_distribution<std::int64_t> d(-60, 60);
    for (int i = 0; i < 200; ++i) {
      const auto e = HalfInteger::halves(d(rng)), f = HalfInteger::halves(d(rng));
      if (pow2(e) * pow2(f) != pow2(e + f)) return describe("e=", e.twice.get_si(), "/2");
    }
    return {};
  });

  run.run("rising factorial below AM power (1 <= a, b <= 20)", [&]() -> std::string {
    for (long a = 1; a <= 20; ++a) {
      for (std::uint32_t b = 1; b <= 20; ++b) {
        const BigRational lhs = rising_factorial(BigRational(a), b);
        BigRational mean = BigRational(a) + make_rational(b - 1, 2), rhs = 1;
        for (std::uint32_t i = 0; i < b; ++i) rhs *= mean;
        if (lhs > rhs) return describe("a=", a, " b=", b);
      }
    }
    return {};
  });
}

// ------------------------------------------------------------- cycle form

void cycleform_suite(Runner& run, const VerifyOptions& opt) {
  run.run("cycle type basics (n <= 12)", [&]() -> std::string {
    for (std::uint32_t n = 0; n <= 12; ++n) {
      BigInt sum = 0;
      std::size_t count = 0;
      for_each_partition(n, [&](const CycleType& t) {
        sum += class_size(t);
        ++count;
      });
      if (sum != factorial(n)) return describe("class sizes at n=", n);
      if (BigInt(static_cast<unsigned long>(count)) != partition_count(n)) return describe("partition count n=", n);
    }
    for (std::uint32_t n = 0; n <= 5; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& s : perms) {
        const auto t = cycle_type(s);
        for (const auto& pi : perms) {
          if (cycle_type(compose(compose(pi, s), pi.inverse())) != t) return describe("conjugation n=", n);
        }
      }
    }
    return {};
  });

  run.run("symmetry (p, q <= 6)", [&]() -> std::string {
    for (std::uint32_t p = 0; p <= 6; ++p) {
      for (std::uint32_t q = 0; q <= 6; ++q) {
        for (const auto& a : partitions(p)) {
          for (const auto& b : partitions(q)) {
            if (cycle_form(a, b) != cycle_form(b, a)) return describe(to_string(a), " ", to_string(b));
          }
        }
      }
    }
    return {};
  });

  run.run("radical: <(1-a)(1-a'), b> = 0 (300 random triples, p, q <= 10)", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 3);
    std::uniform_int_distribution<std::uint32_t> deg(1, 10);
    for (int i = 0; i < 300; ++i) {
      const auto p = deg(rng), q = deg(rng);
      const auto [a, a2] = random_disjoint_pair(p, rng);
      const auto b = random_permutation(q, rng);
      const auto one = GroupAlgebraElement::unit(p);
      const auto x = (one - GroupAlgebraElement(a)) * (one - GroupAlgebraElement(a2));
      if (cycle_form_bilinear(x, GroupAlgebraElement(b)) != 0) {
        return describe(to_string(a), " ", to_string(a2), " ", to_string(b));
      }
    }
    return {};
  });

  run.run("decomposition identity (all classes, p, q <= 9)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 9; ++p) {
      const auto reds = partitions(p);
      for (std::uint32_t q = 1; q <= 9; ++q) {
        for (const auto& b : partitions(q)) {
          for (const auto& a : reds) {
            if (cycle_form_via_decomposition(a, b) != cycle_form(a, b)) return describe(to_string(a), " ", to_string(b));
          }
        }
      }
    }
    return {};
  });

  run.run("bracket for a prime cycle (l <= 7, q <= 8)", [&]() -> std::string {
    for (std::uint32_t len : {2u, 3u, 5u, 7u}) {
      for (std::uint32_t p = len; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 8; ++q) {
          for (const auto& b : partitions(q)) {
            if (cycle_form(CycleType::cycle(p, len), b) != prime_cycle_bracket(len, p, b)) {
              return describe("l=", len, " p=", p, " ", to_string(b));
            }
          }
        }
      }
    }
    return {};
  });

  run.run("<1 - gamma_l, b> >= (l-1)(c(b) - q/l) (l <= 7, q <= 9)", [&]() -> std::string {
    for (std::uint32_t len = 1; len <= 7; ++len) {
      for (std::uint32_t p : {len, len + 2}) {
        for (std::uint32_t q = 1; q <= 9; ++q) {
          for (const auto& b : partitions(q)) {
            if (sgn(bound_1a_gap(len, p, b)) < 0) return describe("l=", len, " ", to_string(b));
          }
        }
      }
    }
    return {};
  });

  run.run("sum c_j/j >= (c - p)/2 (all types, p <= 12)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 12; ++p) {
      for (const auto& a : partitions(p)) {
        if (sgn(bound_5_gap(a)) < 0) return to_string(a);
      }
    }
    return {};
  });
}

// ----------------------------------------------------------------- bounds

void bounds_suite(Runner& run, const VerifyOptions& opt) {
  const auto& lim = opt.limits;
  const StirlingTable& st = *opt.stirling;

  run.run("class sum equals permutation sum (p, q <= 6)", [&]() -> std::string {
    for (std::uint32_t p = 0; p <= 6; ++p) {
      for (std::uint32_t q = 0; q <= 6; ++q) {
        if (count_exact(p, q, lim) != count_naive(p, q, lim)) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("class sum equals orbit census (p q <= 16)", [&]() -> std::string {
    for (std::uint32_t p = 0; p <= 16; ++p) {
      for (std::uint32_t q = 0; q <= 16; ++q) {
        if (p * q > 16) continue;
        const auto census = orbit_census(p, q, lim);
        if (census.orbit_count != count_exact(p, q, lim)) return describe("p=", p, " q=", q);
        BigInt covered = 0;
        for (const auto& [size, n] : census.orbit_sizes) {
          covered += BigInt(static_cast<unsigned long>(size)) * static_cast<unsigned long>(n);
        }
        if (covered != census.total) return describe("orbit sizes p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("swap symmetry (p, q <= 12)", [&]() -> std::string {
    for (std::uint32_t p = 0; p <= 12; ++p) {
      for (std::uint32_t q = p + 1; q <= 12; ++q) {
        if (count_exact(p, q, lim) != count_exact(q, p, lim)) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("AO lower bound and theorem bound (1 <= p, q <= 20)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 20; ++p) {
      for (std::uint32_t q = 1; q <= 20; ++q) {
        const BigRational exact(count_exact(p, q, lim));
        if (ao_bounds(p, q).lower > exact) return describe("AO lower p=", p, " q=", q);
        if (QSqrt2(exact) > theorem_bound(p, q, st)) return describe("theorem bound p=", p, " q=", q);
      }
    }
    return {};
  });

  // The printed AO upper bound is false for many q > p (already at (1,3)),
  // so it is only checked on q <= p.
  run.run("AO upper bound (1 <= q <= p <= 20)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 20; ++p) {
      for (std::uint32_t q = 1; q <= p; ++q) {
        if (BigRational(count_exact(p, q, lim)) > ao_bounds(p, q).upper) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("theorem bound: power form equals character form (p, q <= 8)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 8; ++p) {
      for (std::uint32_t q = 1; q <= 8; ++q) {
        if (theorem_bound(p, q, st) != theorem_bound_via_characters(p, q, st)) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("free fraction above its lower bound (p q <= 16)", [&]() -> std::string {
    for (std::uint32_t p = 1; p <= 16; ++p) {
      for (std::uint32_t q = 1; p * q <= 16; ++q) {
        if (free_fraction(p, q, lim) < free_fraction_lower_bound(p, q, lim)) return describe("p=", p, " q=", q);
      }
    }
    return {};
  });

  run.run("first summand >= 1 and decreasing (p = 4..20)", [&]() -> std::string {
    for (std::uint32_t k = 0; k <= 4; ++k) {
      BigRational prev;
      for (std::uint32_t p = 4; p <= 20; ++p) {
        const auto v = first_summand(p, k);
        if (v < 1) return describe("below 1 at p=", p);
        if (p > 4 && !(v < prev)) return describe("not decreasing at p=", p, " k=", k);
        prev = v;
      }
    }
    return {};
  });

  run.run("ratio table increasing in p for p >= 9", [&]() -> std::string {
    for (std::uint32_t k = 0; k <= 4; ++k) {
      QSqrt2 prev;
      for (std::uint32_t p = 9; p <= 48; p += 3) {
        const auto cell = ratio_cell(p, k);
        if (p > 9 && !(cell.ratio > prev)) return describe("p=", p, " k=", k);
        prev = cell.ratio;
      }
    }
    return {};
  });
}

// ------------------------------------------------------------ asymptotics

void asymptotics_suite(Runner& run, const VerifyOptions& opt) {
  for (std::int64_t k = 0; k <= 3; ++k) {
    run.run(describe("H_", k, " = ", claimed_cutoff(k), " (h <= 64, p <= 512)"), [k]() -> std::string {
      const auto report = verify_H(k, 64, 512);
      if (!report.holds) return describe("smallest valid cutoff ", report.smallest_cutoff);
      return {};
    });
  }

  run.run("first-term closed form (h <= 60, k <= 4)", []() -> std::string {
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (std::int64_t h = 1; h <= 60; ++h) {
        const long double general = a_term(h, h + 1, k).log2_value;
        const long double closed = a_first_term_closed_form_log2(h, k);
        if (std::fabs(general - closed) > 1e-9L * std::max(1.0L, std::fabs(closed))) {
          return describe("h=", h, " k=", k);
        }
      }
    }
    return {};
  });

  run.run("tail ratio decreasing for k = 0, below 1 for k <= 4 (h = 5..60)", []() -> std::string {
    long double prev = 2;
    for (std::int64_t h = 5; h <= 60; ++h) {
      const long double r = tail_ratio(h, 0);
      if (!(r < prev)) return describe("not decreasing at h=", h);
      prev = r;
    }
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (std::int64_t h = 5; h <= 60; ++h) {
        if (!(tail_ratio(h, k) < 1)) return describe("h=", h, " k=", k);
      }
    }
    return {};
  });

  run.run("growth ratio >= 1, decreasing over p = 10,14,..,26, ends < 1.1", [&]() -> std::string {
    BigRational prev;
    for (std::uint32_t p = 10; p <= 26; p += 4) {
      const auto g = growth_ratio(p, 0, opt.limits);
      if (g < 1) return describe("below 1 at p=", p);
      if (p > 10 && !(g < prev)) return describe("not decreasing at p=", p);
      prev = g;
    }
    if (!(prev < make_rational(11, 10))) return "final value >= 1.1";
    return {};
  });
}

}  // namespace

std::vector<PropertyResult> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<PropertyResult> out;
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (wants(Suite::characters)) {
    Runner r("characters", out);
    characters_suite(r, options);
  }
  if (wants(Suite::cycleform)) {
    Runner r("cycleform", out);
    cycleform_suite(r, options);
  }
  if (wants(Suite::bounds)) {
    Runner r("bounds", out);
    bounds_suite(r, options);
  }
  if (wants(Suite::asymptotics)) {
    Runner r("asymptotics", out);
    asymptotics_suite(r, options);
  }
  return out;
}

}  // namespace bicount
