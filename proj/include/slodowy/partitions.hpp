#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

/// Partition of n: parts stored in weakly decreasing order, zero parts stripped.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : m_parts(std::move(parts))
  {
    for (int p : m_parts)
      if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(m_parts.begin(), m_parts.end(), std::greater<>());
    while (!m_parts.empty() && m_parts.back() == 0) m_parts.pop_back();
  }

  int n() const
  {
    int s = 0;
    for (int p : m_parts) s += p;
    return s;
  }

  std::size_t size() const { return m_parts.size(); }
  bool empty() const { return m_parts.empty(); }
  int operator[](std::size_t i) const { return m_parts[i]; }
  int part_or_zero(std::size_t i) const { return i < m_parts.size() ? m_parts[i] : 0; }
  const std::vector<int>& parts() const { return m_parts; }

  friend bool operator==(const Partition& a, const Partition& b) = default;
  /// Lexicographic order on part vectors; sorting descending by this gives
  /// the reverse-lexicographic listing (n) first, (1^n) last.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.m_parts <=> b.m_parts; }

  /// "3+2+1"; the empty partition renders as "0".
  std::string to_string() const
  {
    if (m_parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
      if (i) s += "+";
      s += std::to_string(m_parts[i]);
    }
    return s;
  }

private:
  std::vector<int> m_parts;
};

/// Conjugate (dual) partition: λ*_i = #{k : λ_k ≥ i}.
inline Partition dual_partition(const Partition& la)
{
  std::vector<int> d;
  for (int i = 1; i <= la.part_or_zero(0); ++i) {
    int c = 0;
    for (std::size_t k = 0; k < la.size(); ++k)
      if (la[k] >= i) ++c;
    d.push_back(c);
  }
  return Partition(std::move(d));
}

/// Dominance order: λ ⊵ μ iff all prefix sums of λ weakly exceed those of μ.
/// Defined only between partitions of the same n (throws otherwise).
inline bool dominates(const Partition& la, const Partition& mu)
{
  if (la.n() != mu.n()) throw std::invalid_argument("dominates: partitions of different n");
  const std::size_t len = std::max(la.size(), mu.size());
  long long sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += la.part_or_zero(i);
    sb += mu.part_or_zero(i);
    if (sa < sb) return false;
  }
  return true;
}

/// Witness for a covering pair: the box of row i drops to row j (1-based,
/// indices into λ zero-padded, so j may point one past the last part).
struct CoverWitness {
  int i = 0;
  int j = 0;
  friend bool operator==(const CoverWitness&, const CoverWitness&) = default;
};

/// Decide whether λ covers μ in the dominance order and, if so, return the
/// canonical witness: i is the least index with λ_i > μ_i; j is the least
/// index > i with λ_j < λ_i − 1.  The move λ_i → λ_i − 1, λ_j → λ_j + 1 is
/// admissible when λ_j = λ_i − 2 or all intermediate parts equal λ_i, and it
/// must reproduce μ exactly.
inline std::optional<CoverWitness> covers(const Partition& la, const Partition& mu)
{
  if (la.n() != mu.n()) throw std::invalid_argument("covers: partitions of different n");
  if (la == mu) return std::nullopt;

  const std::size_t len = std::max(la.size(), mu.size());
  std::size_t i = len;
  for (std::size_t t = 0; t < len; ++t) {
    const int l = la.part_or_zero(t), m = mu.part_or_zero(t);
    if (l == m) continue;
    if (l < m) return std::nullopt; // λ does not dominate μ
    i = t;
    break;
  }
  if (i == len) return std::nullopt;

  const int li = la.part_or_zero(i);
  std::size_t j = la.size() + 1;
  for (std::size_t t = i + 1; t <= la.size(); ++t)
    if (la.part_or_zero(t) < li - 1) {
      j = t;
      break;
    }
  if (j > la.size()) return std::nullopt;

  bool admissible = (la.part_or_zero(j) == li - 2);
  if (!admissible) {
    admissible = true;
    for (std::size_t t = i + 1; t < j; ++t)
      if (la.part_or_zero(t) != li) {
        admissible = false;
        break;
      }
  }
  if (!admissible) return std::nullopt;

  std::vector<int> moved(la.parts());
  moved.resize(std::max(la.size(), j + 1), 0);
  moved[i] -= 1;
  moved[j] += 1;
  if (Partition(std::move(moved)) != mu) return std::nullopt;
  return CoverWitness{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
}

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n)
{
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int first = std::min(rest, maxpart); first >= 1; --first) {
      acc.push_back(first);
      self(self, rest - first, first);
      acc.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Hasse diagram of the dominance order on partitions of n.  Nodes are listed
/// reverse-lexicographically; each edge (a, b) is a pair of node indices with
/// node a covered by node b.
struct Hasse {
  std::vector<Partition> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline Hasse hasse(int n)
{
  Hasse h;
  h.nodes = partitions_of(n);
  for (std::size_t a = 0; a < h.nodes.size(); ++a)
    for (std::size_t b = 0; b < h.nodes.size(); ++b)
      if (a != b && covers(h.nodes[b], h.nodes[a])) h.edges.emplace_back(a, b);
  return h;
}

} // namespace slodowy
