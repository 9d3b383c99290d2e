#include "nilhoro/zd.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nilhoro/linalg.hpp"

namespace nilhoro {

namespace {

ZdElement negate(const ZdElement& v) {
  ZdElement out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

ZdGroup::ZdGroup(int d, std::vector<ZdElement> gens) : d_(d) {
  if (d < 1) throw std::invalid_argument("ZdGroup: dimension must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("ZdGroup: generator of wrong dimension");
    if (g == identity()) throw std::invalid_argument("ZdGroup: zero generator");
  }

  // Pair each generator with its negation; reject non-symmetric sets.
  std::vector<bool> used(gens.size(), false);
  Letter next = 'a';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    const auto neg = negate(gens[i]);
    std::size_t j = i + 1;
    while (j < gens.size() && (used[j] || gens[j] != neg)) ++j;
    if (j == gens.size())
      throw std::invalid_argument("ZdGroup: generating set not closed under negation");
    if (next > 'z') throw std::invalid_argument("ZdGroup: too many generator pairs");
    used[i] = used[j] = true;
    gens_.push_back({next, gens[i]});
    gens_.push_back({inverse_letter(next), gens[j]});
    ++next;
  }
  if (gens_.empty()) throw std::invalid_argument("ZdGroup: empty generating set");

  RatMat m;
  for (const auto& g : gens_) {
    RatVec row;
    for (const auto& v : g.element) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  const int r = rat_rank(m);
  if (r < d)
    throw std::invalid_argument("ZdGroup: generators span only a rank-" + std::to_string(r) +
                                " sublattice of Z^" + std::to_string(d));
}

ZdGroup ZdGroup::standard(int d) {
  std::vector<ZdElement> gens;
  for (int i = 0; i < d; ++i) {
    ZdElement e(static_cast<std::size_t>(d), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    gens.push_back(e);
    e[static_cast<std::size_t>(i)] = -1;
    gens.push_back(e);
  }
  return ZdGroup(d, std::move(gens));
}

ZdElement ZdGroup::mul(const Element& u, const Element& v) const {
  Element out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

ZdElement ZdGroup::inv(const Element& u) const { return negate(u); }

ZdElement ZdGroup::letter_element(Letter c) const {
  for (const auto& g : gens_)
    if (g.label == c) return g.element;
  throw std::invalid_argument(std::string("unknown Z^d letter '") + c + "'");
}

}  // namespace nilhoro
