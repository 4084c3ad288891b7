#include "core/permutation.hpp"

#include <stdexcept>
#include <string>

namespace invfact {

namespace {

void check_bijection(const std::vector<Point>& images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (Point y : images) {
    if (y >= n) {
      throw std::invalid_argument("image " + std::to_string(y) +
                                  " out of range for degree " + std::to_string(n));
    }
    if (seen[y]) {
      throw std::invalid_argument("image " + std::to_string(y) +
                                  " appears twice; not a bijection");
    }
    seen[y] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<Cycle>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  for (const Cycle& cyc : cycles) {
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= n) {
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " out of range for degree " + std::to_string(n));
      }
      if (used[x]) {
        throw std::invalid_argument("cycle point " + std::to_string(x) + " repeated");
      }
      used[x] = true;
      p.images_[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  check_bijection(p.images_);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = p(q(static_cast<Point>(x)));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[p(static_cast<Point>(x))] = static_cast<Point>(x);
  }
  return Permutation(std::move(images));
}

bool is_involution(const Permutation& p) {
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (p(p(static_cast<Point>(x))) != static_cast<Point>(x)) return false;
  }
  return true;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const std::size_t n = p.degree();
  CycleDecomposition result;
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    Cycle cyc;
    Point x = static_cast<Point>(start);
    do {
      visited[x] = true;
      cyc.push_back(x);
      x = p(x);
    } while (x != static_cast<Point>(start));
    result.cycles.push_back(std::move(cyc));
  }
  return result;
}

CycleType::CycleType(std::size_t n, std::map<std::size_t, std::size_t> counts)
    : n_(n), counts_(std::move(counts)) {
  std::size_t total = 0;
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->first == 0) throw std::invalid_argument("cycle length 0 is invalid");
    if (it->second == 0) {
      it = counts_.erase(it);
      continue;
    }
    total += it->first * it->second;
    ++it;
  }
  if (total != n_) {
    throw std::invalid_argument("cycle lengths sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n_));
  }
}

std::size_t CycleType::count_of(std::size_t k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

CycleType cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t> counts;
  for (const Cycle& cyc : cycle_decomposition(p).cycles) {
    ++counts[cyc.size()];
  }
  return CycleType(p.degree(), std::move(counts));
}

}  // namespace invfact
