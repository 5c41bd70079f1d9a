#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Enumeration cap: (2*8-1)!! = 2,027,025 diagrams is the practical memory
/// edge for materializing the full basis.
inline constexpr int kMaxPairingT = 8;

/// A perfect matching of {1, ..., 2t} in canonical form: within each pair the
/// smaller point comes first, and pairs are sorted by their first point.
/// Points 1..t are the top row of the diagram, t+1..2t the bottom row.
class PairPartition {
 public:
  /// Validates that the pairs cover {1,...,2t} exactly once and stores the
  /// canonical form. Throws SizeError / ContractError on bad input.
  PairPartition(int t, std::vector<std::pair<int, int>> pairs);

  int t() const noexcept { return t_; }
  int points() const noexcept { return 2 * t_; }
  const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }

  /// The point matched with `point` (both 1-indexed).
  int partner_of(int point) const;

  /// partner table indexed 0..2t-1 (0-indexed points), for hot loops.
  std::vector<int> partner_table() const;

  bool operator==(const PairPartition& rhs) const noexcept = default;
  /// Lexicographic on the canonical pair list; fixes the global basis order.
  std::strong_ordering operator<=>(const PairPartition& rhs) const noexcept;

  std::string to_string() const;

 private:
  int t_;
  std::vector<std::pair<int, int>> pairs_;
};

struct CompositionResult {
  PairPartition product;
  int loops;  // closed cycles removed during composition; <= t
};

/// (2t-1)!! as a 64-bit integer (valid for t <= 16).
std::uint64_t double_factorial_odd(int t);

/// All (2t-1)!! pairings of [2t] in lexicographic canonical order. This order
/// is the global basis index used by every matrix in the library.
std::vector<PairPartition> enumerate_pairings(int t);

/// The identity diagram {{1, t+1}, {2, t+2}, ...}.
PairPartition identity_pairing(int t);

/// Number of pairs crossing the top/bottom bipartition. Permutation diagrams
/// have propagating number t.
int propagating_number(const PairPartition& m);

bool is_permutation_diagram(const PairPartition& m);

/// Brauer diagram composition m . n: m's bottom row is glued to n's top row,
/// paths are traced through, and closed interior cycles are counted as loops
/// (each loop contributes a factor d when represented on (C^d)^{(x)t}).
CompositionResult compose(const PairPartition& m, const PairPartition& n);

/// Swap top and bottom rows (point i -> i+t mod 2t). Involutive; represents
/// the transpose of the 0/1 representation matrix.
PairPartition transpose_diagram(const PairPartition& m);

/// Number of cycles of the 2-regular multigraph on [2t] whose edges are the
/// pairs of m together with the pairs of n. Satisfies
/// Tr[rep(m)^T rep(n)] = d^union_cycle_count(m, n).
int union_cycle_count(const PairPartition& m, const PairPartition& n);

/// The diagram of a permutation s (one-line, 0-indexed: position i maps to
/// s[i]). rep_pairing of the result equals rep_permutation(s).
PairPartition pairing_from_permutation(const std::vector<int>& s);

/// All t! permutations of {0,...,t-1} in lexicographic one-line order.
std::vector<std::vector<int>> enumerate_permutations(int t);

}  // namespace brauer
