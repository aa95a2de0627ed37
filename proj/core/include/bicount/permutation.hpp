#pragma once

// Permutations of {1, ..., n}, cycle types, integer partitions and
// conjugacy-class sizes in the symmetric group.

#include "bicount/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bicount {

/// A bijection of {1, ..., n}. Degree 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::uint32_t n);
  /// One-line notation, 1-based: images[i-1] = sigma(i).
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// Product of the given cycles (1-based points); cycles must be disjoint.
  static Permutation from_cycles(std::uint32_t n,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> cycles);
  static Permutation from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  /// sigma(i) for i in 1..n.
  std::uint32_t operator()(std::uint32_t i) const { return images_[i - 1]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  /// Points i with sigma(i) != i.
  std::vector<std::uint32_t> support() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

/// Function composition: (compose(s, t))(i) = s(t(i)). Degrees must match.
Permutation compose(const Permutation& s, const Permutation& t);
/// True iff no point is moved by both. Degrees must match.
bool disjoint(const Permutation& s, const Permutation& t);

/// The cycle (1 2 ... len) in S_n. Requires 1 <= len <= n.
Permutation make_cycle(std::uint32_t n, std::uint32_t len);

/// Cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
std::string to_string(const Permutation& s);
/// Parses cycle notation such as "(1 2 3)(4 5)" for a given degree.
Permutation parse_cycles(std::uint32_t n, const std::string& text);

/// Cycle type of a permutation: c_r = number of r-cycles, singletons
/// included. Sum of r * c_r equals the degree.
class CycleType {
 public:
  CycleType() = default;
  /// counts[r] for r = 1..n; counts[0] ignored. Throws if sum r*c_r != n.
  CycleType(std::uint32_t n, std::vector<std::uint32_t> counts);
  /// From a list of parts (cycle lengths), in any order.
  static CycleType from_parts(std::span<const std::uint32_t> parts);
  static CycleType from_parts(std::initializer_list<std::uint32_t> parts);
  static CycleType identity(std::uint32_t n);
  /// Type of an len-cycle in S_n: {len:1, 1:n-len}.
  static CycleType cycle(std::uint32_t n, std::uint32_t len);

  std::uint32_t degree() const { return n_; }
  std::uint32_t count(std::uint32_t r) const { return r < counts_.size() ? counts_[r] : 0; }
  std::uint32_t total_cycles() const;

  struct Part {
    std::uint32_t length;
    std::uint32_t multiplicity;
  };
  /// Distinct cycle lengths with multiplicities, increasing length.
  std::vector<Part> parts() const;

  friend bool operator==(const CycleType& x, const CycleType& y) {
    return x.n_ == y.n_ && x.counts_ == y.counts_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> counts_{0};  // size n+1
};

CycleType cycle_type(const Permutation& s);
inline std::uint32_t total_cycles(const CycleType& t) { return t.total_cycles(); }

/// "{1:1,2:2}"; the empty type prints as "{}".
std::string to_string(const CycleType& t);

/// Visits every partition of n exactly once, reverse-lexicographic order
/// of the parts list (n, n-1 1, ...). n = 0 yields the empty partition.
void for_each_partition(std::uint32_t n, const std::function<void(const CycleType&)>& visit);
std::vector<CycleType> partitions(std::uint32_t n);
BigInt partition_count(std::uint32_t n);

/// Size of the conjugacy class n! / prod_r (r^{c_r} c_r!).
BigInt class_size(const CycleType& t);

/// Visits every permutation of degree n (n! of them).
void for_each_permutation(std::uint32_t n, const std::function<void(const Permutation&)>& visit);

}  // namespace bicount
