#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

namespace nilhoro {

// Words are plain strings over generator letters. Lowercase letters are
// generators, the matching uppercase letter is the inverse ("a" vs "A").
using Letter = char;
using Word = std::string;

inline bool is_generator_letter(Letter c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

inline Letter inverse_letter(Letter c) {
  if (!is_generator_letter(c)) throw std::invalid_argument("not a generator letter");
  const auto u = static_cast<unsigned char>(c);
  return std::islower(u) ? static_cast<Letter>(std::toupper(u))
                         : static_cast<Letter>(std::tolower(u));
}

/// Formal inverse: reverse the word and invert each letter.
inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

}  // namespace nilhoro
