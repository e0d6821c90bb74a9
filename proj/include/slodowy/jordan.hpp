#pragma once

#include "slodowy/linalg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partitions.hpp"

#include <stdexcept>

namespace slodowy {

/// Jordan type of a nilpotent matrix: the number of parts of size ≥ k equals
/// rank(N^{k−1}) − rank(N^k).  Throws if N is not nilpotent (N^n ≠ 0).
inline Partition jordan_type(const Mat& nmat)
{
  nmat.require_square("jordan_type");
  const std::size_t n = nmat.rows();
  if (n == 0) return Partition();

  std::vector<std::size_t> ranks; // ranks[k] = rank(N^k)
  ranks.push_back(n);
  Mat p = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * nmat;
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");

  std::vector<int> parts;
  const std::size_t depth = ranks.size() - 1; // N^depth = 0
  for (std::size_t k = depth; k >= 1; --k) {
    const std::size_t geq_k = ranks[k - 1] - ranks[k];
    const std::size_t geq_k1 = (k < depth) ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < geq_k - geq_k1; ++c) parts.push_back(static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

} // namespace slodowy
