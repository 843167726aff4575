#pragma once

// Oriented ribbon graphs encoded as combinatorial maps.
//
// A map lives on a ground set of 2e half-edges {0, ..., 2e-1}. The rotation
// sigma sends a half-edge to its counterclockwise successor around the
// incident vertex-disc; the involution alpha pairs the two ends of every
// edge-ribbon. Vertices are the orbits of sigma, edges the orbits of alpha,
// and boundary components (faces) the orbits of sigma∘alpha, i.e. of
// h -> sigma(alpha(h)). alpha∘sigma is conjugate to it and has the same
// number of orbits.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdg {

using HalfEdge = int;
using Permutation = std::vector<HalfEdge>;

/// Subsets are bitmasks, so subset operations are limited to this many edges.
inline constexpr int kMaxSubsetEdges = 64;

/// A subset A of the edges of a map, in the map's deterministic edge order.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(std::uint64_t mask, int width);

  static EdgeSubset none(int width) { return {0, width}; }
  static EdgeSubset all(int width);
  static EdgeSubset of(std::initializer_list<int> edges, int width);

  int width() const noexcept { return width_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int edge) const noexcept { return (mask_ >> edge) & 1U; }
  int size() const noexcept;

  EdgeSubset with(int edge) const;
  EdgeSubset complement() const;
  /// Symmetric difference.
  EdgeSubset operator^(const EdgeSubset& other) const;

  bool operator==(const EdgeSubset&) const = default;

 private:
  std::uint64_t mask_ = 0;
  int width_ = 0;
};

struct MapCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int components = 0;

  bool operator==(const MapCounts&) const = default;
};

class CombinatorialMap {
 public:
  /// Validates sigma and alpha. Errors: SizeMismatch, NotPermutation,
  /// NotInvolution, HasFixedPoint.
  static CombinatorialMap make(Permutation sigma, Permutation alpha);
  /// Same, with one label per edge (in edge order).
  static CombinatorialMap make(Permutation sigma, Permutation alpha, std::vector<int> edge_labels);

  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& alpha() const noexcept { return alpha_; }
  /// Labels per edge; defaults to 1..e.
  const std::vector<int>& edge_labels() const noexcept { return edge_labels_; }

  int half_edge_count() const noexcept { return static_cast<int>(sigma_.size()); }
  int edge_count() const noexcept { return static_cast<int>(ends_.size()); }

  /// Edges are numbered by increasing minimal half-edge.
  int edge_of(HalfEdge h) const { return edge_of_[h]; }
  /// (smaller half-edge, larger half-edge) of an edge.
  std::pair<HalfEdge, HalfEdge> ends(int edge) const { return ends_[edge]; }
  /// Edge index carrying the given label, or -1.
  int edge_with_label(int label) const;

  /// sigma∘alpha.
  Permutation face_permutation() const;

  bool operator==(const CombinatorialMap& other) const {
    return sigma_ == other.sigma_ && alpha_ == other.alpha_;
  }

 private:
  CombinatorialMap() = default;

  Permutation sigma_;
  Permutation alpha_;
  std::vector<int> edge_of_;
  std::vector<std::pair<HalfEdge, HalfEdge>> ends_;
  std::vector<int> edge_labels_;
};

int count_cycles(const Permutation& p);

MapCounts counts(const CombinatorialMap& map);

/// Total genus, summed over connected components: c - (v - e + f) / 2.
int genus(const CombinatorialMap& map);

/// Number of boundary components of the spanning subgraph (V, A). Vertices
/// without an edge of A count as one component each.
int spanning_boundary_count(const CombinatorialMap& map, const EdgeSubset& subset);

/// The partial dual G^A: its rotation is sigma∘alpha_A, where alpha_A swaps
/// the ends of the edges of A and fixes all other half-edges. Each orbit of
/// the new rotation traces one boundary component of (V, A). alpha and the
/// edge labels are kept, so (G^A)^B = G^(A xor B) holds exactly.
CombinatorialMap partial_dual(const CombinatorialMap& map, const EdgeSubset& subset);

/// Edge-by-edge construction on the arrow presentation: every vertex
/// boundary is a closed curve carrying one marked segment per half-edge;
/// dualizing an edge cuts out its two segments, reconnects the curves along
/// the long sides of the ribbon and marks those sides as the new segments.
/// Kept as an independent cross-check for partial_dual.
CombinatorialMap partial_dual_stepwise(const CombinatorialMap& map, const EdgeSubset& subset);

CombinatorialMap euler_dual(const CombinatorialMap& map);

/// genus(partial_dual(map, A)) from two boundary counts:
/// c - (bc(A) - e + bc(complement of A)) / 2.
int genus_of_partial_dual_fast(const CombinatorialMap& map, const EdgeSubset& subset);

/// Slides the end `moving` of one edge along the edge `along_edge`. The
/// moving end must be a rotation neighbour of one end of `along_edge`; it is
/// carried along the side of the ribbon bounding that corner and reattached
/// at the corresponding corner next to the far end. Sliding the result back
/// along the same edge restores the original map. Errors: NotAdjacent,
/// EdgeOutOfRange.
CombinatorialMap slide(const CombinatorialMap& map, HalfEdge moving, int along_edge);

/// Complete isomorphism invariant (ignores labels): the sorted list of
/// per-component BFS codes, each minimised over all start half-edges.
std::vector<int> canonical_code(const CombinatorialMap& map);
bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// Text format: two lines, `sigma: (0 1 2 3)` and `alpha: (0 2)(1 3)`.
/// Half-edges missing from the sigma cycles are fixed points of sigma.
CombinatorialMap parse_map(std::string_view text);
std::string format_map(const CombinatorialMap& map);
std::string format_cycles(const Permutation& p);

}  // namespace pdg
