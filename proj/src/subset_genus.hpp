#pragma once

// Shared inner loops for the serial and OpenMP kernels.

#include <cstdint>
#include <vector>

#include "pdg/chord_diagram.hpp"
#include "pdg/combinatorial_map.hpp"
#include "pdg/error.hpp"
#include "pdg/kernels.hpp"

namespace pdg::kernels::detail {

/// genus(G^A) for many subsets A of one map, without allocating per subset.
class SubsetGenus {
 public:
  explicit SubsetGenus(const CombinatorialMap& map, GenusPath path)
      : map_(map),
        path_(path),
        edges_(map.edge_count()),
        components_(counts(map).components) {
    if (edges_ > 30) {
      throw Error(ErrorCode::EdgeOutOfRange, "exhaustive subset sums need at most 30 edges");
    }
    const int n = map.half_edge_count();
    sigma_ = map.sigma();
    sigma_alpha_.resize(n);
    edge_bit_.resize(n);
    for (int h = 0; h < n; ++h) {
      sigma_alpha_[h] = map.sigma()[map.alpha()[h]];
      edge_bit_[h] = std::uint64_t{1} << map.edge_of(h);
    }
    full_ = edges_ == 0 ? 0 : (std::uint64_t{1} << edges_) - 1;
  }

  int edges() const noexcept { return edges_; }
  std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << edges_; }

  int genus(std::uint64_t mask) const {
    if (path_ == GenusPath::Construction) {
      return pdg::genus(partial_dual_stepwise(map_, EdgeSubset(mask, edges_)));
    }
    const int v = boundary_count(mask);
    const int f = boundary_count(~mask & full_);
    return (2 * components_ - (v - edges_ + f)) / 2;
  }

 private:
  // At most 30 edges, so the visited set of the 2e half-edges fits one word.
  int boundary_count(std::uint64_t mask) const {
    const int n = static_cast<int>(sigma_.size());
    std::uint64_t seen = 0;
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
      if ((seen >> start) & 1U) continue;
      ++cycles;
      for (int h = start; !((seen >> h) & 1U);) {
        seen |= std::uint64_t{1} << h;
        h = (mask & edge_bit_[h]) ? sigma_alpha_[h] : sigma_[h];
      }
    }
    return cycles;
  }

  const CombinatorialMap& map_;
  GenusPath path_;
  int edges_;
  int components_;
  std::uint64_t full_ = 0;
  std::vector<int> sigma_;
  std::vector<int> sigma_alpha_;
  std::vector<std::uint64_t> edge_bit_;
};

inline IntPolynomial histogram_to_polynomial(const std::vector<std::uint64_t>& histogram) {
  std::vector<BigInt> coeffs(histogram.begin(), histogram.end());
  return IntPolynomial(std::move(coeffs));
}

/// Depth-first generation of all pairings of the free (zero) positions of
/// `word`; chords are labelled from `next_label` on. Pre-filling positions
/// fixes a prefix of the search, which is how work is split across threads.
template <class Visit>
void for_each_pairing(std::vector<int>& word, int next_label, Visit&& visit) {
  const int len = static_cast<int>(word.size());
  int first = 0;
  while (first < len && word[first] != 0) ++first;
  if (first == len) {
    visit(word);
    return;
  }
  word[first] = next_label;
  for (int j = first + 1; j < len; ++j) {
    if (word[j] != 0) continue;
    word[j] = next_label;
    for_each_pairing(word, next_label + 1, visit);
    word[j] = 0;
  }
  word[first] = 0;
}

}  // namespace pdg::kernels::detail
