#pragma once

#include <vector>

#include "nilhoro/group.hpp"
#include "nilhoro/ints.hpp"

namespace nilhoro {

// Discrete Heisenberg group element in the normal form c^z b^y a^x, where
// a, b are the standard generators and c = [a,b] spans the centre. The
// triple (x, y, z) matches the unitriangular matrix with (1,2)-entry x,
// (2,3)-entry y and (1,3)-entry z; the normal form is unique.
struct H3Element {
  Int x;
  Int y;
  Int z;

  bool operator==(const H3Element&) const = default;
};

inline H3Element h3_mul(const H3Element& g, const H3Element& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

inline H3Element h3_inv(const H3Element& g) {
  return {-g.x, -g.y, g.x * g.y - g.z};
}

struct H3Hash {
  std::size_t operator()(const H3Element& e) const {
    std::size_t s = hash_int(e.x);
    s = hash_combine(s, hash_int(e.y));
    return hash_combine(s, hash_int(e.z));
  }
};

/// Canonical ordering (x, y, z) lexicographic, for deterministic output.
inline bool h3_less(const H3Element& u, const H3Element& v) {
  if (u.x != v.x) return u.x < v.x;
  if (u.y != v.y) return u.y < v.y;
  return u.z < v.z;
}

class H3Group {
 public:
  using Element = H3Element;
  using Hash = H3Hash;

  Element identity() const { return {0, 0, 0}; }
  Element mul(const Element& u, const Element& v) const { return h3_mul(u, v); }
  Element inv(const Element& u) const { return h3_inv(u); }

  const std::vector<Generator<Element>>& generators() const { return gens_; }
  Element letter_element(Letter c) const;

  int max_bfs_radius() const { return budget_; }
  void set_max_bfs_radius(int r) { budget_ = r; }

 private:
  std::vector<Generator<Element>> gens_ = {
      {'a', {1, 0, 0}}, {'A', {-1, 0, 0}}, {'b', {0, 1, 0}}, {'B', {0, -1, 0}}};
  int budget_ = 12;
};

}  // namespace nilhoro
