#include "brauer/pairings.hpp"

#include <algorithm>
#include <numeric>

#include "brauer/errors.hpp"

namespace brauer {

PairPartition::PairPartition(int t, std::vector<std::pair<int, int>> pairs) : t_(t) {
  if (t < 1 || t > kMaxPairingT)
    throw SizeError("pairing size t must be in [1, " + std::to_string(kMaxPairingT) +
                    "], got " + std::to_string(t));
  if (static_cast<int>(pairs.size()) != t)
    throw ContractError("expected " + std::to_string(t) + " pairs, got " +
                        std::to_string(pairs.size()));
  std::vector<bool> seen(2 * t + 1, false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 2 * t || a == b)
      throw ContractError("pair out of range for t=" + std::to_string(t));
    if (seen[a] || seen[b]) throw ContractError("point covered twice in pairing");
    seen[a] = seen[b] = true;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

int PairPartition::partner_of(int point) const {
  for (const auto& [a, b] : pairs_) {
    if (a == point) return b;
    if (b == point) return a;
  }
  throw ContractError("point " + std::to_string(point) + " out of range");
}

std::vector<int> PairPartition::partner_table() const {
  std::vector<int> partner(2 * t_);
  for (const auto& [a, b] : pairs_) {
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  return partner;
}

std::strong_ordering PairPartition::operator<=>(const PairPartition& rhs) const noexcept {
  if (auto cmp = t_ <=> rhs.t_; cmp != 0) return cmp;
  return pairs_ <=> rhs.pairs_;
}

std::string PairPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out += ",";
    out += "{" + std::to_string(pairs_[i].first) + "," + std::to_string(pairs_[i].second) + "}";
  }
  return out + "}";
}

std::uint64_t double_factorial_odd(int t) {
  std::uint64_t count = 1;
  for (int k = 3; k <= 2 * t - 1; k += 2) count *= static_cast<std::uint64_t>(k);
  return count;
}

namespace {

void enumerate_rec(int points, std::vector<int>& partner, std::vector<std::pair<int, int>>& acc,
                   std::vector<PairPartition>& out, int t) {
  int first = -1;
  for (int p = 0; p < points; ++p) {
    if (partner[p] < 0) {
      first = p;
      break;
    }
  }
  if (first < 0) {
    out.emplace_back(t, acc);
    return;
  }
  for (int q = first + 1; q < points; ++q) {
    if (partner[q] >= 0) continue;
    partner[first] = q;
    partner[q] = first;
    acc.emplace_back(first + 1, q + 1);
    enumerate_rec(points, partner, acc, out, t);
    acc.pop_back();
    partner[first] = -1;
    partner[q] = -1;
  }
}

}  // namespace

std::vector<PairPartition> enumerate_pairings(int t) {
  if (t < 1 || t > kMaxPairingT)
    throw SizeError("enumerate_pairings: t must be in [1, " + std::to_string(kMaxPairingT) +
                    "], got " + std::to_string(t));
  std::vector<PairPartition> out;
  out.reserve(double_factorial_odd(t));
  std::vector<int> partner(2 * t, -1);
  std::vector<std::pair<int, int>> acc;
  acc.reserve(t);
  // Always pairing the smallest free point with each larger free point in
  // increasing order yields the lexicographic canonical order directly.
  enumerate_rec(2 * t, partner, acc, out, t);
  return out;
}

PairPartition identity_pairing(int t) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(t);
  for (int i = 1; i <= t; ++i) pairs.emplace_back(i, t + i);
  return PairPartition(t, std::move(pairs));
}

int propagating_number(const PairPartition& m) {
  int t = m.t();
  int count = 0;
  for (const auto& [a, b] : m.pairs())
    if (a <= t && b > t) ++count;
  return count;
}

bool is_permutation_diagram(const PairPartition& m) {
  return propagating_number(m) == m.t();
}

CompositionResult compose(const PairPartition& m, const PairPartition& n) {
  if (m.t() != n.t())
    throw SizeError("compose: mismatched sizes t=" + std::to_string(m.t()) + " vs t=" +
                    std::to_string(n.t()));
  const int t = m.t();
  const std::vector<int> pm = m.partner_table();
  const std::vector<int> pn = n.partner_table();

  // 0-indexed points. External points of the product: m's top row 0..t-1 and
  // n's bottom row t..2t-1. Junction j glues m's point t+j to n's point j.
  std::vector<std::pair<int, int>> product_pairs;
  product_pairs.reserve(t);
  std::vector<bool> m_done(2 * t, false);
  std::vector<bool> n_done(2 * t, false);

  // Walks from an m-side point, alternating m-edges and n-edges through the
  // junctions, and returns the external endpoint in product labelling.
  auto walk_from_m = [&](int start) {
    int cur = pm[start];
    m_done[start] = true;
    m_done[cur] = true;
    while (cur >= t) {
      int j = cur - t;
      int z = pn[j];
      n_done[j] = true;
      n_done[z] = true;
      if (z >= t) return z;  // n's bottom row, already in product labels
      cur = pm[t + z];
      m_done[t + z] = true;
      m_done[cur] = true;
    }
    return cur;  // m's top row
  };

  for (int x = 0; x < t; ++x) {
    if (m_done[x]) continue;
    int end = walk_from_m(x);
    product_pairs.emplace_back(x + 1, end + 1);
  }
  // Remaining n-bottom points pair among themselves.
  for (int x = t; x < 2 * t; ++x) {
    if (n_done[x]) continue;
    n_done[x] = true;
    int cur = pn[x];
    n_done[cur] = true;
    while (cur < t) {
      int y = pm[t + cur];
      m_done[t + cur] = true;
      m_done[y] = true;
      // y must be another junction: its m-top endpoints were consumed above.
      int j = y - t;
      cur = pn[j];
      n_done[j] = true;
      n_done[cur] = true;
    }
    product_pairs.emplace_back(x + 1, cur + 1);
  }

  // Whatever is left alternates m-bottom and n-top edges only: closed loops.
  int loops = 0;
  for (int j = 0; j < t; ++j) {
    if (n_done[j]) continue;
    ++loops;
    int cur = j;
    do {
      int z = pn[cur];
      n_done[cur] = true;
      n_done[z] = true;
      int y = pm[t + z];
      m_done[t + z] = true;
      m_done[y] = true;
      cur = y - t;
    } while (cur != j);
  }

  return CompositionResult{PairPartition(t, std::move(product_pairs)), loops};
}

PairPartition transpose_diagram(const PairPartition& m) {
  const int t = m.t();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(t);
  auto flip = [t](int p) { return p <= t ? p + t : p - t; };
  for (const auto& [a, b] : m.pairs()) pairs.emplace_back(flip(a), flip(b));
  return PairPartition(t, std::move(pairs));
}

int union_cycle_count(const PairPartition& m, const PairPartition& n) {
  if (m.t() != n.t())
    throw SizeError("union_cycle_count: mismatched sizes t=" + std::to_string(m.t()) +
                    " vs t=" + std::to_string(n.t()));
  const int points = m.points();
  const std::vector<int> pm = m.partner_table();
  const std::vector<int> pn = n.partner_table();
  std::vector<bool> visited(points, false);
  int cycles = 0;
  for (int start = 0; start < points; ++start) {
    if (visited[start]) continue;
    ++cycles;
    int cur = start;
    do {
      visited[cur] = true;
      int via_m = pm[cur];
      visited[via_m] = true;
      cur = pn[via_m];
    } while (cur != start);
  }
  return cycles;
}

PairPartition pairing_from_permutation(const std::vector<int>& s) {
  const int t = static_cast<int>(s.size());
  // rep_permutation(s) maps position i to receive the factor at s^{-1}(i),
  // which as a tensor network is the matching {s(j), t+j} (1-indexed).
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(t);
  for (int j = 0; j < t; ++j) pairs.emplace_back(s[j] + 1, t + j + 1);
  return PairPartition(t, std::move(pairs));
}

std::vector<std::vector<int>> enumerate_permutations(int t) {
  std::vector<int> line(t);
  std::iota(line.begin(), line.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

}  // namespace brauer
