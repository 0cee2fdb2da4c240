#pragma once

// A graded homology action: one square rational matrix per degree 0..n.
// The matrix at degree i acts on the degree-i homology, so its size is the
// i-th Betti number (possibly 0).

#include <stdexcept>
#include <utility>
#include <vector>

#include "lefzeta/matrix.hpp"

namespace lefzeta {

class GradedAction {
  std::vector<RatMatrix> maps_;  // index = degree; size = dim + 1

 public:
  GradedAction() : maps_(1) {}
  explicit GradedAction(std::vector<RatMatrix> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) maps_.resize(1);
    for (const auto& m : maps_) m.require_square();
  }

  int dim() const { return static_cast<int>(maps_.size()) - 1; }
  std::size_t betti(std::size_t degree) const {
    return degree < maps_.size() ? maps_[degree].rows() : 0;
  }
  const RatMatrix& map(std::size_t degree) const { return maps_[degree]; }
  const std::vector<RatMatrix>& maps() const { return maps_; }

  int euler_characteristic() const {
    int chi = 0;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      const int b = static_cast<int>(maps_[i].rows());
      chi += (i % 2 == 0) ? b : -b;
    }
    return chi;
  }
};

// Degreewise block-diagonal sum; traces add per degree.
inline GradedAction direct_sum(const GradedAction& a, const GradedAction& b) {
  const int dim = std::max(a.dim(), b.dim());
  std::vector<RatMatrix> maps;
  maps.reserve(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    const std::size_t ba = a.betti(static_cast<std::size_t>(i));
    const std::size_t bb = b.betti(static_cast<std::size_t>(i));
    RatMatrix m(ba + bb, ba + bb);
    for (std::size_t r = 0; r < ba; ++r)
      for (std::size_t c = 0; c < ba; ++c)
        m(r, c) = a.map(static_cast<std::size_t>(i))(r, c);
    for (std::size_t r = 0; r < bb; ++r)
      for (std::size_t c = 0; c < bb; ++c)
        m(ba + r, ba + c) = b.map(static_cast<std::size_t>(i))(r, c);
    maps.push_back(std::move(m));
  }
  return GradedAction(std::move(maps));
}

}  // namespace lefzeta
