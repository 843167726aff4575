#pragma once

// Chord diagrams as double-occurrence cyclic words, and chord diagrams on
// several circles for multi-vertex ribbon graphs.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pdg/combinatorial_map.hpp"

namespace pdg {

/// The 2n chord endpoints read counterclockwise; every label occurs twice.
/// Labels are positive integers. Two diagrams are the same chord diagram
/// iff their canonical forms agree (rotations only, no reflections).
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Errors: OddLength, LabelCountNotTwo, InvalidToken (label < 1).
  static ChordDiagram from_word(std::vector<int> word);

  /// Accepts `1 2 2 1 3 3`, compact `abba cc` / `122133`, or JSON
  /// `{"word":[1,2,2,1,3,3]}`. Whitespace-separated integers are labels when
  /// there is more than one token; otherwise every non-space character is a
  /// label, numbered by first occurrence unless it is a digit 1-9.
  static ChordDiagram parse(std::string_view text);

  const std::vector<int>& word() const noexcept { return word_; }
  int order() const noexcept { return static_cast<int>(word_.size()) / 2; }
  bool empty() const noexcept { return word_.empty(); }

  /// Distinct labels in order of first occurrence; index = chord index.
  std::vector<int> labels() const;
  /// Chord index (first-occurrence order) of every position.
  std::vector<int> chord_at() const;
  /// Index of the chord with this label, or -1.
  int chord_index(int label) const;

  /// `1 2 1 2`
  std::string to_string() const;
  nlohmann::json to_json() const;
  static ChordDiagram from_json(const nlohmann::json& j);

  auto operator<=>(const ChordDiagram&) const = default;

 private:
  explicit ChordDiagram(std::vector<int> word) : word_(std::move(word)) {}

  std::vector<int> word_;
};

/// Relabel by first occurrence, then take the lexicographically least of the
/// 2n rotations.
ChordDiagram canonical_form(const ChordDiagram& d);
bool equivalent(const ChordDiagram& a, const ChordDiagram& b);

/// All chord diagrams of order n as sorted canonical forms.
std::vector<ChordDiagram> enumerate_diagrams(int n);

/// One vertex: sigma is the cyclic successor on word positions and alpha
/// pairs the two positions of each label. Edge labels are the chord labels.
CombinatorialMap to_map(const ChordDiagram& d);

enum class ChordSide { Inside, Outside };

/// Chord diagram on several circles. Circles list half-edges in
/// counterclockwise order; `pairing[i]` holds the two ends of chord i.
/// Side flags are presentation only and never affect topology.
struct MultiCircleDiagram {
  std::vector<std::vector<HalfEdge>> circles;
  std::vector<std::pair<HalfEdge, HalfEdge>> pairing;
  std::vector<int> labels;
  std::vector<ChordSide> side;

  CombinatorialMap to_map() const;

  /// For a single circle: the word of chord labels read around it.
  std::optional<ChordDiagram> as_chord_diagram() const;

  /// `{"circles":[[...]],"pairing":[[i,j],...],"side":["in","out",...],
  ///   "labels":[...]}`
  nlohmann::json to_json() const;
  static MultiCircleDiagram from_json(const nlohmann::json& j);

  bool operator==(const MultiCircleDiagram&) const = default;
};

/// One circle per vertex, each read from its smallest half-edge; circles
/// ordered by smallest half-edge; every chord Inside.
MultiCircleDiagram from_map(const CombinatorialMap& map);

/// Connected sum: d1 is cut at gap cut1 and d2 at gap cut2 (gap i sits
/// before position i; gaps 0 and 2n coincide) and the two words are spliced.
/// d2's labels are shifted past d1's. Errors: CutOutOfRange.
ChordDiagram product(const ChordDiagram& d1, const ChordDiagram& d2, int cut1 = 0, int cut2 = 0);

/// entry (i, j) = 1 iff chords i and j (first-occurrence order) interlace.
using InterlaceMatrix = std::vector<std::vector<int>>;
InterlaceMatrix interlace_graph(const ChordDiagram& d);

/// Per-chord interlacement counts, grouped by the prime factors of the
/// diagram. Factors are sorted by size, then lexicographically.
struct InterlaceSequence {
  std::vector<std::vector<int>> factors;

  /// Sorted counts over all chords.
  std::vector<int> counts() const;
  /// `(2,2,3,3)` or `(0)∨(0)∨(1,1)`.
  std::string to_string() const;

  bool operator==(const InterlaceSequence&) const = default;
};
InterlaceSequence interlace_sequence(const ChordDiagram& d);

/// Prime factors as canonical forms, sorted by order then word. A factor is
/// split off along a shortest proper arc whose chords all stay inside it.
std::vector<ChordDiagram> join_decompose(const ChordDiagram& d);

/// k one-chord diagrams followed by g copies of `1 2 1 2`. Errors: EmptyCaravan.
ChordDiagram caravan(int k, int g);

/// The partial dual relative to the chords with the given labels, drawn on
/// circles. The dual chords are flagged Outside. Errors: UnknownChord.
MultiCircleDiagram partial_dual_diagram(const ChordDiagram& d, std::span<const int> chord_labels);

/// Word of a one-vertex map read around its rotation starting at half-edge 0,
/// with chord labels taken from the map's edge labels.
ChordDiagram diagram_of_one_vertex_map(const CombinatorialMap& map);

}  // namespace pdg
