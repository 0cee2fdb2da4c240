#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the library's algorithms: determinants via the
// Leibniz permutation sum, power sums via companion-matrix traces, and the
// Alexander polynomial via Fox calculus on the free group rather than Burau
// matrices.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lefzeta/lefzeta.hpp"

namespace lefzeta::testing {

template <class T>
T leibniz_det(const Matrix<T>& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T acc(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    acc = (inversions % 2 == 0) ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Power sums p_1..p_n of the roots of p, from traces of the companion matrix
// of its monic normalization.
inline std::vector<Rational> companion_power_sums(const Poly& p, int n) {
  const Poly q = p.monic();
  const int d = q.degree();
  if (d < 0) throw std::invalid_argument("power sums of the zero polynomial");
  RatMatrix c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i + 1 < d; ++i)
    c(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(i)) = Rational(1);
  for (int i = 0; i < d; ++i)
    c(static_cast<std::size_t>(i), static_cast<std::size_t>(d) - 1) =
        -q.coeff(static_cast<std::size_t>(i));
  std::vector<Rational> sums;
  RatMatrix power = c;
  for (int k = 1; k <= n; ++k) {
    sums.push_back(power.trace());
    power = power * c;
  }
  return sums;
}

namespace fox {

// Free group words: letter +i or -i stands for the i-th generator (1-based)
// or its inverse.
using Word = std::vector<int>;

// Image of a word under the automorphism attached to one braid generator.
inline Word apply_generator(const Word& w, int gen, bool inverse) {
  Word out;
  for (int letter : w) {
    const int idx = std::abs(letter);
    const bool pos = letter > 0;
    if (!inverse) {
      if (idx == gen) {
        if (pos)
          out.insert(out.end(), {gen, gen + 1, -gen});
        else
          out.insert(out.end(), {gen, -(gen + 1), -gen});
      } else if (idx == gen + 1) {
        out.push_back(pos ? gen : -gen);
      } else {
        out.push_back(letter);
      }
    } else {
      if (idx == gen) {
        out.push_back(pos ? gen + 1 : -(gen + 1));
      } else if (idx == gen + 1) {
        if (pos)
          out.insert(out.end(), {-(gen + 1), gen, gen + 1});
        else
          out.insert(out.end(), {-(gen + 1), -gen, gen + 1});
      } else {
        out.push_back(letter);
      }
    }
  }
  return out;
}

// Fox derivative with respect to generator `target`, abelianized by sending
// every generator to t: d(uv) = du + ab(u) dv, d(x) = 1, d(x^-1) = -x^-1.
inline LaurentPoly abelian_derivative(const Word& w, int target) {
  LaurentPoly result;
  int exponent = 0;
  for (int letter : w) {
    if (letter > 0) {
      if (letter == target) result += LaurentPoly::monomial(exponent);
      ++exponent;
    } else {
      --exponent;
      if (-letter == target) result -= LaurentPoly::monomial(exponent);
    }
  }
  return result;
}

}  // namespace fox

// Alexander polynomial of the braid closure by Fox calculus: the braid acts
// on the free group on the strands, the closure's group is presented by the
// relators phi(x_j) x_j^-1, and the determinant of the Alexander matrix with
// one row and one column removed is the polynomial up to units. Normalized
// like the library: lowest term constant, positive constant coefficient.
inline Poly fox_alexander(const BraidWord& b) {
  const int n = b.strands;
  std::vector<fox::Word> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = {j + 1};
  for (int letter : b.letters)
    for (auto& w : image)
      w = fox::apply_generator(w, std::abs(letter), letter < 0);

  Matrix<LaurentPoly> a(static_cast<std::size_t>(n) - 1,
                        static_cast<std::size_t>(n) - 1);
  for (int j = 0; j + 1 < n; ++j) {
    fox::Word relator = image[static_cast<std::size_t>(j)];
    relator.push_back(-(j + 1));
    for (int i = 0; i + 1 < n; ++i)
      a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
          fox::abelian_derivative(relator, i + 1);
  }

  const LaurentPoly d = leibniz_det(a);
  if (d.is_zero()) return {};
  Poly p = d.unit_part();
  if (p.constant().is_negative()) p = -p;
  return p;
}

}  // namespace lefzeta::testing
