#pragma once

// Braid words and the reduced Burau representation.
//
// Grammar: whitespace-separated signed generator indices, optionally prefixed
// by "n:" to fix the strand count (otherwise strands = max |letter| + 1).
// Letter +i is the generator sigma_i, -i its inverse.
//
// Burau convention: on two strands sigma_1 acts as [-t]; in general sigma_i
// touches basis vectors e_{i-1}, e_i, e_{i+1} through the row
// (t, -t, 1) at index i, with the exact Laurent inverse for negative letters.

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefzeta/laurent.hpp"
#include "lefzeta/matrix.hpp"

namespace lefzeta {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

inline void validate_braid(const BraidWord& b) {
  if (b.strands < 1) throw std::invalid_argument("strand count must be at least 1");
  for (int letter : b.letters) {
    if (letter == 0) throw std::invalid_argument("zero letter in braid word");
    if (std::abs(letter) >= b.strands)
      throw std::invalid_argument("letter " + std::to_string(letter) +
                                  " out of range for " +
                                  std::to_string(b.strands) + " strands");
  }
}

inline BraidWord parse_braid(const std::string& text) {
  std::string body = text;
  int strands = 0;
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    std::istringstream head(text.substr(0, colon));
    if (!(head >> strands) || strands < 1 || !(head >> std::ws).eof())
      throw std::invalid_argument("invalid strand count prefix");
    body = text.substr(colon + 1);
  }

  BraidWord b;
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int letter = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      b.letters.push_back(letter);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid braid letter \"" + token + "\"");
    }
  }

  if (strands > 0) {
    b.strands = strands;
  } else {
    int max_abs = 0;
    for (int letter : b.letters) max_abs = std::max(max_abs, std::abs(letter));
    b.strands = max_abs + 1;
  }
  validate_braid(b);
  return b;
}

// The permutation of strand positions induced by the word (signs ignored).
inline std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : b.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

// The closure is a knot exactly when the permutation is a single n-cycle.
inline bool closure_is_knot(const BraidWord& b) {
  const std::vector<int> perm = closure_permutation(b);
  int length = 0, at = 0;
  do {
    at = perm[static_cast<std::size_t>(at)];
    ++length;
  } while (at != 0);
  return length == b.strands;
}

namespace detail {

// Reduced Burau image of sigma_i^{+-1} on n strands, (n-1)x(n-1).
inline Matrix<LaurentPoly> burau_generator(int n, int i, bool inverse) {
  const std::size_t size = static_cast<std::size_t>(n - 1);
  Matrix<LaurentPoly> m(size, size);
  for (std::size_t d = 0; d < size; ++d) m(d, d) = LaurentPoly(1);
  const std::size_t r = static_cast<std::size_t>(i) - 1;
  if (!inverse) {
    if (r > 0) m(r, r - 1) = LaurentPoly::monomial(1);          // t
    m(r, r) = LaurentPoly::monomial(1, Rational(-1));           // -t
    if (r + 1 < size) m(r, r + 1) = LaurentPoly(1);             // 1
  } else {
    if (r > 0) m(r, r - 1) = LaurentPoly(1);                    // 1
    m(r, r) = LaurentPoly::monomial(-1, Rational(-1));          // -1/t
    if (r + 1 < size) m(r, r + 1) = LaurentPoly::monomial(-1);  // 1/t
  }
  return m;
}

}  // namespace detail

inline Matrix<LaurentPoly> burau_reduced(const BraidWord& b) {
  validate_braid(b);
  const std::size_t size = static_cast<std::size_t>(b.strands - 1);
  Matrix<LaurentPoly> acc(size, size);
  for (std::size_t d = 0; d < size; ++d) acc(d, d) = LaurentPoly(1);
  for (int letter : b.letters)
    acc = acc * detail::burau_generator(b.strands, std::abs(letter), letter < 0);
  return acc;
}

}  // namespace lefzeta
