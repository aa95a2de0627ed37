#include "bicount/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicount {

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  const auto n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (auto v : images) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("images do not form a bijection of {1..n}");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  auto images = identity(n).images_;
  std::vector<bool> used(n + 1, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto from = cyc[i];
      const auto to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from - 1] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint32_t n,
                                     std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::vector<std::uint32_t>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(n, cs);
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> Permutation::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) out.push_back(i + 1);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint32_t> images(s.degree());
  for (std::uint32_t i = 1; i <= s.degree(); ++i) images[i - 1] = s(t(i));
  return Permutation::from_images(std::move(images));
}

bool disjoint(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("disjoint: degree mismatch");
  for (std::uint32_t i = 1; i <= s.degree(); ++i) {
    if (s(i) != i && t(i) != i) return false;
  }
  return true;
}

Permutation make_cycle(std::uint32_t n, std::uint32_t len) {
  if (len < 1 || len > n) throw std::invalid_argument("make_cycle: need 1 <= length <= degree");
  std::vector<std::uint32_t> cyc(len);
  std::iota(cyc.begin(), cyc.end(), 1u);
  return Permutation::from_cycles(n, std::vector<std::vector<std::uint32_t>>{cyc});
}

std::string to_string(const Permutation& s) {
  std::ostringstream out;
  std::vector<bool> seen(s.degree() + 1, false);
  bool any = false;
  for (std::uint32_t i = 1; i <= s.degree(); ++i) {
    if (seen[i] || s(i) == i) continue;
    any = true;
    out << '(';
    std::uint32_t j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << j;
      seen[j] = true;
      j = s(j);
    } while (j != i);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation parse_cycles(std::uint32_t n, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    if (c != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
    auto close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("cycle notation: missing ')'");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<std::uint32_t> cyc;
    long v;
    while (in >> v) {
      if (v < 1) throw std::invalid_argument("cycle notation: points are 1-based");
      cyc.push_back(static_cast<std::uint32_t>(v));
      if (in.peek() == ',') in.get();
    }
    if (!in.eof()) throw std::invalid_argument("cycle notation: bad point in \"" + text + "\"");
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  return Permutation::from_cycles(n, cycles);
}

// ------------------------------------------------------------ CycleType

CycleType::CycleType(std::uint32_t n, std::vector<std::uint32_t> counts) : n_(n), counts_(std::move(counts)) {
  counts_.resize(n + 1, 0);
  counts_[0] = 0;
  std::uint64_t sum = 0;
  for (std::uint32_t r = 1; r <= n; ++r) sum += static_cast<std::uint64_t>(r) * counts_[r];
  if (sum != n) throw std::invalid_argument("cycle type: sum of r*c_r must equal the degree");
}

CycleType CycleType::from_parts(std::span<const std::uint32_t> parts) {
  std::uint32_t n = 0;
  for (auto r : parts) {
    if (r == 0) throw std::invalid_argument("cycle type: zero-length part");
    n += r;
  }
  std::vector<std::uint32_t> counts(n + 1, 0);
  for (auto r : parts) ++counts[r];
  return CycleType(n, std::move(counts));
}

CycleType CycleType::from_parts(std::initializer_list<std::uint32_t> parts) {
  return from_parts(std::span<const std::uint32_t>(parts.begin(), parts.size()));
}

CycleType CycleType::identity(std::uint32_t n) {
  std::vector<std::uint32_t> counts(n + 1, 0);
  if (n > 0) counts[1] = n;
  return CycleType(n, std::move(counts));
}

CycleType CycleType::cycle(std::uint32_t n, std::uint32_t len) {
  if (len < 1 || len > n) throw std::invalid_argument("cycle type: need 1 <= length <= degree");
  std::vector<std::uint32_t> counts(n + 1, 0);
  counts[len] += 1;
  counts[1] += n - len;
  return CycleType(n, std::move(counts));
}

std::uint32_t CycleType::total_cycles() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

std::vector<CycleType::Part> CycleType::parts() const {
  std::vector<Part> out;
  for (std::uint32_t r = 1; r < counts_.size(); ++r) {
    if (counts_[r]) out.push_back({r, counts_[r]});
  }
  return out;
}

CycleType cycle_type(const Permutation& s) {
  const auto n = s.degree();
  std::vector<std::uint32_t> counts(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = s(j)) {
      seen[j] = true;
      ++len;
    }
    ++counts[len];
  }
  return CycleType(n, std::move(counts));
}

std::string to_string(const CycleType& t) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& part : t.parts()) {
    if (!first) out << ',';
    first = false;
    out << part.length << ':' << part.multiplicity;
  }
  out << '}';
  return out.str();
}

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part, std::vector<std::uint32_t>& parts,
                    const std::function<void(const CycleType&)>& visit) {
  if (remaining == 0) {
    visit(CycleType::from_parts(parts));
    return;
  }
  for (std::uint32_t r = std::min(remaining, max_part); r >= 1; --r) {
    parts.push_back(r);
    partitions_rec(remaining - r, r, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(std::uint32_t n, const std::function<void(const CycleType&)>& visit) {
  std::vector<std::uint32_t> parts;
  partitions_rec(n, n, parts, visit);
}

std::vector<CycleType> partitions(std::uint32_t n) {
  std::vector<CycleType> out;
  for_each_partition(n, [&](const CycleType& t) { out.push_back(t); });
  return out;
}

BigInt partition_count(std::uint32_t n) {
  // coin-change count with part sizes 1..n
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= n; ++part) {
    for (std::uint32_t m = part; m <= n; ++m) ways[m] += ways[m - part];
  }
  return ways[n];
}

BigInt class_size(const CycleType& t) {
  BigInt centralizer = 1;
  for (const auto& part : t.parts()) {
    BigInt rp;
    mpz_ui_pow_ui(rp.get_mpz_t(), part.length, part.multiplicity);
    centralizer *= rp * factorial(part.multiplicity);
  }
  BigInt size = factorial(t.degree()) / centralizer;
  return size;
}

void for_each_permutation(std::uint32_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  do {
    visit(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace bicount
