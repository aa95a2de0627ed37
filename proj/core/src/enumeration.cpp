#include "bicount/enumeration.hpp"

#include "bicount/cycle_form.hpp"
#include "bicount/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

namespace bicount {

namespace {

struct ClassDatum {
  std::vector<CycleType::Part> parts;
  BigInt size;
};

std::vector<ClassDatum> class_data(std::uint32_t n) {
  std::vector<ClassDatum> out;
  for_each_partition(n, [&](const CycleType& t) { out.push_back({t.parts(), class_size(t)}); });
  return out;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

BigInt count_exact(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  if (p > limits.max_degree || q > limits.max_degree) {
    throw ResourceCapExceeded("count_exact: degree above cap " + std::to_string(limits.max_degree));
  }
  const auto red = class_data(p);
  const auto blue = class_data(q);
  const std::size_t max_exp = static_cast<std::size_t>(p) * q;

  std::atomic<std::size_t> next{0};
  std::mutex sum_mutex;
  BigInt total = 0;

  auto work = [&] {
    std::vector<BigInt> by_exponent(max_exp + 1);
    std::vector<std::int64_t> weight(q + 1);
    BigInt local = 0;
    BigInt partial;
    for (std::size_t i = next++; i < red.size(); i = next++) {
      // weight[s] = <lambda, single s-cycle> = sum_r gcd(r, s) c_r(lambda)
      for (std::uint32_t s = 1; s <= q; ++s) {
        std::int64_t w = 0;
        for (const auto& part : red[i].parts) w += static_cast<std::int64_t>(std::gcd(part.length, s)) * part.multiplicity;
        weight[s] = w;
      }
      for (auto& v : by_exponent) v = 0;
      for (const auto& mu : blue) {
        std::int64_t e = 0;
        for (const auto& part : mu.parts) e += weight[part.length] * part.multiplicity;
        by_exponent[static_cast<std::size_t>(e)] += mu.size;
      }
      partial = 0;
      for (std::size_t e = max_exp + 1; e-- > 0;) {
        // Horner in base 2
        partial <<= 1;
        partial += by_exponent[e];
      }
      local += red[i].size * partial;
    }
    std::lock_guard lock(sum_mutex);
    total += local;
  };

  const unsigned n_workers = worker_count(limits.threads, red.size());
  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work);
  }

  const BigInt denom = factorial(p) * factorial(q);
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), total.get_mpz_t(), denom.get_mpz_t());
  if (remainder != 0) throw std::logic_error("count_exact: class sum not divisible by p! q!");
  return quotient;
}

BigInt count_naive(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  if (p > limits.max_naive_degree || q > limits.max_naive_degree) {
    throw ResourceCapExceeded("count_naive: degree above cap " + std::to_string(limits.max_naive_degree));
  }
  std::vector<CycleType> red, blue;
  for_each_permutation(p, [&](const Permutation& a) { red.push_back(cycle_type(a)); });
  for_each_permutation(q, [&](const Permutation& b) { blue.push_back(cycle_type(b)); });
  BigInt total = 0;
  for (const auto& a : red) {
    for (const auto& b : blue) total += pow2_int(static_cast<std::uint64_t>(cycle_form(a, b)));
  }
  return BigInt(total / (factorial(p) * factorial(q)));
}

// ------------------------------------------------------------ census

namespace {

void check_census_cap(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  const auto cap = std::min(limits.max_pq, EnumerationLimits::kHardMaxPq);
  if (static_cast<std::uint64_t>(p) * q > cap) {
    throw ResourceCapExceeded("orbit census: p*q above cap " + std::to_string(cap));
  }
}

/// Swaps the bit blocks selected by mask with those `shift` positions higher.
inline std::uint32_t delta_swap(std::uint32_t x, std::uint32_t mask, unsigned shift) {
  const std::uint32_t t = ((x >> shift) ^ x) & mask;
  return x ^ t ^ (t << shift);
}

struct Generator {
  std::uint32_t mask;
  unsigned shift;
};

/// Adjacent row and column transpositions on the row-major p x q grid.
std::vector<Generator> grid_generators(std::uint32_t p, std::uint32_t q) {
  std::vector<Generator> gens;
  const std::uint32_t row_mask = q >= 32 ? ~0u : ((1u << q) - 1u);
  for (std::uint32_t i = 0; i + 1 < p; ++i) gens.push_back({row_mask << (i * q), q});
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    std::uint32_t m = 0;
    for (std::uint32_t r = 0; r < p; ++r) m |= 1u << (r * q + j);
    gens.push_back({m, 1});
  }
  return gens;
}

}  // namespace

OrbitCensus orbit_census(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  check_census_cap(p, q, limits);
  OrbitCensus census;
  census.p = p;
  census.q = q;
  const unsigned bits = p * q;
  const std::uint64_t universe = std::uint64_t{1} << bits;
  census.total = pow2_int(bits);

  if (bits == 0) {
    // One empty graph; the degenerate grid is counted as a free orbit.
    census.orbit_count = 1;
    census.free_element_count = 1;
    census.free_orbit_count = 1;
    census.orbit_sizes[1] = 1;
    return census;
  }

  const BigInt group_order = factorial(p) * factorial(q);
  const auto gens = grid_generators(p, q);
  std::vector<std::uint64_t> visited((universe + 63) / 64, 0);
  auto test_and_set = [&](std::uint32_t x) {
    auto& word = visited[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (word & bit) return true;
    word |= bit;
    return false;
  };

  std::uint64_t orbits = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint64_t start = 0; start < universe; ++start) {
    const auto s = static_cast<std::uint32_t>(start);
    if (test_and_set(s)) continue;
    ++orbits;
    std::uint64_t size = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& g : gens) {
        const auto y = delta_swap(x, g.mask, g.shift);
        if (!test_and_set(y)) stack.push_back(y);
      }
    }
    census.orbit_sizes[size] += 1;
  }

  census.orbit_count = static_cast<unsigned long>(orbits);
  census.free_element_count = 0;
  census.free_orbit_count = 0;
  for (const auto& [size, count] : census.orbit_sizes) {
    if (BigInt(static_cast<unsigned long>(size)) == group_order) {
      census.free_orbit_count += static_cast<unsigned long>(count);
      census.free_element_count += BigInt(static_cast<unsigned long>(size)) * static_cast<unsigned long>(count);
    }
  }
  return census;
}

BigInt count_free_by_stabilizer(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  check_census_cap(p, q, limits);
  if (factorial(p) * factorial(q) > 1000000) {
    throw ResourceCapExceeded("stabilizer scan: p! q! above 1e6");
  }
  const unsigned bits = p * q;
  if (bits == 0) return 1;

  // Column action as a lookup on q-bit rows, one table per beta.
  std::vector<Permutation> alphas, betas;
  for_each_permutation(p, [&](const Permutation& a) { alphas.push_back(a); });
  for_each_permutation(q, [&](const Permutation& b) { betas.push_back(b); });
  const std::uint32_t row_values = 1u << q;
  std::vector<std::vector<std::uint32_t>> column_maps;
  for (const auto& b : betas) {
    std::vector<std::uint32_t> table(row_values);
    for (std::uint32_t row = 0; row < row_values; ++row) {
      std::uint32_t img = 0;
      for (std::uint32_t c = 0; c < q; ++c) {
        if (row >> c & 1u) img |= 1u << (b(c + 1) - 1);
      }
      table[row] = img;
    }
    column_maps.push_back(std::move(table));
  }

  const std::uint32_t row_mask = row_values - 1;
  std::uint64_t free = 0;
  std::vector<std::uint32_t> rows(p);
  for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << bits); ++xs) {
    const auto x = static_cast<std::uint32_t>(xs);
    for (std::uint32_t r = 0; r < p; ++r) rows[r] = (x >> (r * q)) & row_mask;
    bool fixed_by_nontrivial = false;
    for (std::size_t ai = 0; ai < alphas.size() && !fixed_by_nontrivial; ++ai) {
      for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        if (alphas[ai].is_identity() && betas[bi].is_identity()) continue;
        bool fixed = true;
        for (std::uint32_t r = 0; r < p && fixed; ++r) {
          // row r moves to row alpha(r)
          fixed = column_maps[bi][rows[r]] == rows[alphas[ai](r + 1) - 1];
        }
        if (fixed) {
          fixed_by_nontrivial = true;
          break;
        }
      }
    }
    if (!fixed_by_nontrivial) ++free;
  }
  return static_cast<unsigned long>(free);
}

BigRational free_fraction(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  const auto census = orbit_census(p, q, limits);
  return make_rational(census.free_element_count, census.total);
}

BigRational free_fraction_lower_bound(std::uint32_t p, std::uint32_t q, const EnumerationLimits& limits) {
  const BigInt count = count_exact(p, q, limits);
  BigRational v = BigRational(2) - make_rational(factorial(p) * factorial(q) * count,
                                                 pow2_int(static_cast<std::uint64_t>(p) * q));
  if (sgn(v) < 0) v = 0;
  return v;
}

}  // namespace bicount
