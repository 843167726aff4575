#pragma once

// Generators and independent oracles shared by the test binaries. Nothing in
// here calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pdg/chord_diagram.hpp"
#include "pdg/combinatorial_map.hpp"
#include "pdg/polynomial.hpp"

namespace pdg::test {

inline std::mt19937& rng() {
  static std::mt19937 engine(20240611);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Uniform pairing of 2n points read as a word; labels by first occurrence.
inline ChordDiagram random_diagram(int n) {
  std::vector<int> points(2 * n);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng());
  std::vector<int> word(2 * n);
  for (int c = 0; c < n; ++c) {
    word[points[2 * c]] = c + 1;
    word[points[2 * c + 1]] = c + 1;
  }
  return ChordDiagram::from_word(std::move(word));
}

/// Random rotation and random edge pairing on 2e half-edges; may be
/// disconnected and have several vertices.
inline CombinatorialMap random_map(int edges) {
  const int n = 2 * edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng());
  Permutation alpha(n);
  for (int i = 0; i < n; i += 2) {
    alpha[order[i]] = order[i + 1];
    alpha[order[i + 1]] = order[i];
  }
  std::shuffle(order.begin(), order.end(), rng());
  Permutation sigma(n);
  int start = 0;
  while (start < n) {
    const int len = uniform(1, std::min(4, n - start));
    for (int i = 0; i < len; ++i) sigma[order[start + i]] = order[start + (i + 1) % len];
    start += len;
  }
  return CombinatorialMap::make(std::move(sigma), std::move(alpha));
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

inline int orbit_count(const Permutation& p) {
  std::vector<bool> seen(p.size());
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return count;
}

inline bool connected(const CombinatorialMap& m) {
  const int n = m.half_edge_count();
  if (n == 0) return true;
  std::vector<bool> seen(n);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int h = stack.back();
    stack.pop_back();
    for (int next : {m.sigma()[h], m.alpha()[h]}) {
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == n;
}

/// Isomorphism of connected maps: the image of half-edge 0 fixes the whole
/// bijection, so try each candidate and propagate along sigma and alpha.
inline bool isomorphic_brute(const CombinatorialMap& a, const CombinatorialMap& b) {
  const int n = a.half_edge_count();
  if (n != b.half_edge_count()) return false;
  if (n == 0) return true;
  for (int target = 0; target < n; ++target) {
    std::vector<int> image(n, -1);
    std::vector<int> stack{0};
    image[0] = target;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int h = stack.back();
      stack.pop_back();
      const std::pair<int, int> steps[] = {{a.sigma()[h], b.sigma()[image[h]]},
                                           {a.alpha()[h], b.alpha()[image[h]]}};
      for (const auto& [from, to] : steps) {
        if (image[from] < 0) {
          image[from] = to;
          stack.push_back(from);
        } else if (image[from] != to) {
          ok = false;
        }
      }
    }
    if (!ok || std::count(image.begin(), image.end(), -1) > 0) continue;
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return true;
  }
  return false;
}

/// Rank over GF(2) of the submatrix of `m` on the rows and columns in `mask`.
inline int gf2_rank(const std::vector<std::vector<int>>& m, std::uint64_t mask) {
  std::vector<std::uint64_t> rows;
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1U)) continue;
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j) {
      if (((mask >> j) & 1U) && m[i][j]) r |= std::uint64_t{1} << j;
    }
    rows.push_back(r);
  }
  int rank = 0;
  for (int bit = 0; bit < n; ++bit) {
    const std::uint64_t pivot_bit = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + rank, rows.end(),
                           [&](std::uint64_t r) { return r & pivot_bit; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (static_cast<int>(k) != rank && (rows[k] & pivot_bit)) rows[k] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

/// Interlace matrix built directly from the word, chords in first-occurrence
/// order.
inline std::vector<std::vector<int>> interlace_brute(const std::vector<int>& word) {
  std::vector<int> labels;
  for (int x : word) {
    if (std::find(labels.begin(), labels.end(), x) == labels.end()) labels.push_back(x);
  }
  const int n = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> span(n, {-1, -1});
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    const int c = static_cast<int>(std::find(labels.begin(), labels.end(), word[i]) - labels.begin());
    (span[c].first < 0 ? span[c].first : span[c].second) = i;
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool a = span[i].first < span[j].first && span[j].first < span[i].second;
      const bool b = span[i].first < span[j].second && span[j].second < span[i].second;
      m[i][j] = a != b;
    }
  }
  return m;
}

/// Gamma of a one-vertex map from its interlace matrix alone. A bouquet with
/// interlace matrix M has 1 + nullity(M) boundary components over GF(2), so
/// genus(G^A) = (rank M[A] + rank M[complement of A]) / 2.
inline IntPolynomial gamma_by_interlace_rank(const ChordDiagram& d) {
  const auto m = interlace_brute(d.word());
  const int n = d.order();
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  std::vector<BigInt> hist(n / 2 + 1);
  for (std::uint64_t a = 0; a <= full; ++a) {
    const int twice = gf2_rank(m, a) + gf2_rank(m, full & ~a);
    hist[twice / 2] += 1;
    if (n == 0) break;
  }
  return IntPolynomial(std::move(hist));
}

/// Canonical form by a different route: rotate, relabel by first occurrence,
/// keep the least sequence.
inline std::vector<int> canonical_word_brute(const std::vector<int>& word) {
  std::vector<int> best;
  const std::size_t n = word.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::map<int, int> relabel;
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) {
      const int x = word[(r + i) % n];
      auto [it, inserted] = relabel.try_emplace(x, static_cast<int>(relabel.size()) + 1);
      w.push_back(it->second);
    }
    if (best.empty() || w < best) best = w;
  }
  return best;
}

/// Number of chord diagrams of order n up to rotation, by Burnside's lemma.
/// A rotation by k has m = gcd(2n, k) cycles of length L = 2n / m; a fixed
/// pairing matches cycles to themselves (only when L is even, by the
/// half-turn) or in pairs (L ways each).
inline BigInt burnside_count(int n) {
  if (n == 0) return 1;
  const int points = 2 * n;
  BigInt total = 0;
  for (int k = 0; k < points; ++k) {
    const int m = std::gcd(points, k);
    const int len = points / m;
    std::vector<BigInt> a(m + 1);
    a[0] = 1;
    if (m >= 1) a[1] = len % 2 == 0 ? 1 : 0;
    for (int j = 2; j <= m; ++j) {
      a[j] = (len % 2 == 0 ? a[j - 1] : BigInt(0)) + BigInt(j - 1) * len * a[j - 2];
    }
    total += a[m];
  }
  return total / points;
}

/// Every diagram of order n by brute force over all words with canonical
/// labelling, deduplicated with canonical_word_brute.
inline std::set<std::vector<int>> all_diagrams_brute(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> word(2 * n, 0);
  auto fill = [&](auto&& self, int next) -> void {
    const auto first = std::find(word.begin(), word.end(), 0);
    if (first == word.end()) {
      out.insert(canonical_word_brute(word));
      return;
    }
    *first = next;
    for (auto it = first + 1; it != word.end(); ++it) {
      if (*it) continue;
      *it = next;
      self(self, next + 1);
      *it = 0;
    }
    *first = 0;
  };
  fill(fill, 1);
  return out;
}

/// Four-term relations of order n by a second construction: endpoints get
/// real-valued angles, the moving endpoint is parked a quarter step on
/// either side of a target endpoint, and the word is read back by sorting.
inline std::set<std::array<std::vector<int>, 4>> four_term_brute(int n) {
  std::set<std::array<std::vector<int>, 4>> out;
  for (const auto& word : all_diagrams_brute(n)) {
    const int len = static_cast<int>(word.size());
    for (int moving = 0; moving < len; ++moving) {
      const int a = word[moving];
      for (int b = 1; b <= n; ++b) {
        if (b == a) continue;
        std::vector<int> ends;
        for (int i = 0; i < len; ++i) {
          if (word[i] == b) ends.push_back(i);
        }
        const auto place = [&](double angle) {
          std::vector<std::pair<double, int>> points;
          for (int i = 0; i < len; ++i) {
            if (i != moving) points.emplace_back(i, word[i]);
          }
          points.emplace_back(angle, a);
          std::sort(points.begin(), points.end());
          std::vector<int> w;
          for (const auto& [_, label] : points) w.push_back(label);
          return canonical_word_brute(w);
        };
        std::array<std::vector<int>, 4> q{place(ends[0] + 0.25), place(ends[0] - 0.25),
                                          place(ends[1] + 0.25), place(ends[1] - 0.25)};
        const std::pair first{q[0], q[1]};
        const std::pair second{q[2], q[3]};
        if (second < first) q = {q[2], q[3], q[0], q[1]};
        out.insert(q);
      }
    }
  }
  return out;
}

}  // namespace pdg::test
