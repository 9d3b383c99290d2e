#include "nilhoro/h3.hpp"

#include <stdexcept>
#include <string>

namespace nilhoro {

H3Element H3Group::letter_element(Letter c) const {
  for (const auto& g : gens_)
    if (g.label == c) return g.element;
  throw std::invalid_argument(std::string("unknown H3 letter '") + c + "' (alphabet aAbB)");
}

}  // namespace nilhoro
