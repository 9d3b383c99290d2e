#pragma once

#include <concepts>
#include <vector>

#include "nilhoro/word.hpp"

namespace nilhoro {

template <typename E>
struct Generator {
  Letter label;
  E element;
};

// The contract every concrete group satisfies: exact value-type elements with
// a unique normal form (equality is field-wise), pure multiplication and
// inverse, a labelled symmetric generating set, and a hash usable for
// associative containers keyed by canonical elements.
template <typename G>
concept GroupContract = requires(const G& g, const typename G::Element& u,
                                 const typename G::Element& v, Letter c) {
  requires std::equality_comparable<typename G::Element>;
  typename G::Hash;
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.mul(u, v) } -> std::same_as<typename G::Element>;
  { g.inv(u) } -> std::same_as<typename G::Element>;
  { g.generators() } -> std::same_as<const std::vector<Generator<typename G::Element>>&>;
  { g.letter_element(c) } -> std::same_as<typename G::Element>;
  { g.max_bfs_radius() } -> std::same_as<int>;
};

/// Left-to-right product of the letters of w; the empty word gives the
/// identity. Unknown letters raise std::invalid_argument.
template <GroupContract G>
typename G::Element evaluate_word(const G& g, const Word& w) {
  auto acc = g.identity();
  for (Letter c : w) acc = g.mul(acc, g.letter_element(c));
  return acc;
}

}  // namespace nilhoro
