#pragma once

#include <vector>

#include "nilhoro/group.hpp"
#include "nilhoro/ints.hpp"

namespace nilhoro {

using ZdElement = std::vector<Int>;

struct ZdHash {
  std::size_t operator()(const ZdElement& e) const {
    std::size_t s = 0x5d4f;
    for (const auto& v : e) s = hash_combine(s, hash_int(v));
    return s;
  }
};

// Z^d under component-wise addition, with a caller-supplied symmetric
// generating set. Letters are assigned in input order: the first generator of
// each +/- pair gets the next lowercase letter, its negation the uppercase.
class ZdGroup {
 public:
  using Element = ZdElement;
  using Hash = ZdHash;

  ZdGroup(int d, std::vector<ZdElement> gens);

  /// Standard generators +-e_1 .. +-e_d.
  static ZdGroup standard(int d);

  Element identity() const { return Element(static_cast<std::size_t>(d_), Int(0)); }
  Element mul(const Element& u, const Element& v) const;
  Element inv(const Element& u) const;

  const std::vector<Generator<Element>>& generators() const { return gens_; }
  Element letter_element(Letter c) const;

  int dim() const { return d_; }
  int max_bfs_radius() const { return budget_; }
  void set_max_bfs_radius(int r) { budget_ = r; }

 private:
  int d_;
  std::vector<Generator<Element>> gens_;
  int budget_ = 20;
};

}  // namespace nilhoro
