#pragma once

// Seeded random fixtures shared by the property tests and the acceptance
// suite. Everything is drawn from a named engine so failures reproduce.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lefzeta/lefzeta.hpp"

namespace lefzeta::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  // Nonzero rational of small height, including non-integers.
  Rational nonzero_rational() {
    static const Rational pool[] = {
        Rational(1),      Rational(-1),    Rational(2),  Rational(-2),
        Rational(1, 2),   Rational(-1, 2), Rational(3),  Rational(2, 3),
        Rational(-3, 2),  Rational(4),
    };
    return pool[static_cast<std::size_t>(uniform(0, 9))];
  }

  RatMatrix integer_matrix(std::size_t rows, std::size_t cols, int lo, int hi) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(uniform(lo, hi));
    return m;
  }

  RatMatrix invertible_matrix(std::size_t n, int lo, int hi) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      RatMatrix m = integer_matrix(n, n, lo, hi);
      if (!det(m).is_zero()) return m;
    }
    throw std::logic_error("failed to draw an invertible matrix");
  }

  GradedAction random_action(int max_dim, int max_betti, int bound) {
    const int dim = uniform(0, max_dim);
    std::vector<RatMatrix> maps(static_cast<std::size_t>(dim) + 1);
    for (auto& m : maps) {
      const std::size_t b = static_cast<std::size_t>(uniform(0, max_betti));
      m = integer_matrix(b, b, -bound, bound);
    }
    return GradedAction(std::move(maps));
  }

  // Triple satisfying the pairing relation by construction.
  PairingTriple random_triple(std::size_t max_n) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<int>(max_n)));
    const RatMatrix f = invertible_matrix(n, -3, 3);
    const RatMatrix p = invertible_matrix(n, -3, 3);
    const Rational lambda = nonzero_rational();
    return PairingTriple{f, pairing_adjoint(f, p, lambda), p, lambda};
  }

  BraidWord random_conjugator(const BraidWord& b, int length) {
    std::vector<int> gamma;
    for (int i = 0; i < length; ++i) {
      int g = uniform(1, b.strands - 1);
      if (uniform(0, 1)) g = -g;
      gamma.push_back(g);
    }
    std::vector<int> letters = gamma;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) letters.push_back(-*it);
    return BraidWord{b.strands, std::move(letters)};
  }

 private:
  std::mt19937_64 eng_;
};

// Markov stabilization: view b in one more strand and append the new
// generator (or its inverse); the closure is unchanged.
inline BraidWord stabilized(const BraidWord& b, bool positive) {
  BraidWord s{b.strands + 1, b.letters};
  s.letters.push_back(positive ? b.strands : -b.strands);
  return s;
}

}  // namespace lefzeta::testing
