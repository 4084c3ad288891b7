#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace invfact {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// Bijection of {0,...,n-1} stored as an image table: images()[x] = sigma(x).
/// Immutable after construction; every constructor validates bijectivity.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  /// Builds the permutation with the given disjoint cycles; points not
  /// mentioned are fixed. Throws std::invalid_argument on repeated or
  /// out-of-range points and on empty cycles.
  static Permutation from_cycles(std::size_t n, const std::vector<Cycle>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Function composition: result(x) = p(q(x)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// True iff p(p(x)) == x for all x, i.e. all cycle lengths are <= 2.
bool is_involution(const Permutation& p);

/// Cycles partition {0,...,n-1}; each cycle starts at its minimum point and
/// lists points in sigma-order; cycles are sorted by their minimum point.
/// Fixed points appear as length-1 cycles.
struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Multiplicities c_k = number of length-k cycles, with sum k*c_k = n.
/// Only nonzero multiplicities are stored.
class CycleType {
 public:
  CycleType() = default;  // degree 0
  CycleType(std::size_t n, std::map<std::size_t, std::size_t> counts);

  std::size_t degree() const { return n_; }
  const std::map<std::size_t, std::size_t>& counts() const { return counts_; }
  std::size_t count_of(std::size_t k) const;

  bool operator==(const CycleType&) const = default;

 private:
  std::size_t n_ = 0;
  std::map<std::size_t, std::size_t> counts_;
};

CycleType cycle_type(const Permutation& p);

}  // namespace invfact
