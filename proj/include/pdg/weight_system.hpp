#pragma once

// The partial-dual genus polynomial and the machinery that checks it is a
// weight system: four-term quadruples, the quotient of the diagram space by
// the four-term relations, multiplicativity and intersection-graph checks.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdg/chord_diagram.hpp"
#include "pdg/kernels.hpp"
#include "pdg/polynomial.hpp"
#include "pdg/rational_matrix.hpp"

namespace pdg {

/// Sum over every edge subset A of z^genus(G^A).
IntPolynomial pd_genus_polynomial(const CombinatorialMap& map, GenusPath path = GenusPath::Fast,
                                  Execution exec = Execution::Serial);
IntPolynomial pd_genus_polynomial(const ChordDiagram& d, GenusPath path = GenusPath::Fast,
                                  Execution exec = Execution::Serial);

struct GenusPolynomialResult {
  ChordDiagram diagram;  // canonical
  IntPolynomial polynomial;
  std::uint64_t subset_count = 0;
};

/// Genus polynomials of many diagrams, in input order.
std::vector<GenusPolynomialResult> pd_genus_polynomials(std::span<const ChordDiagram> diagrams,
                                                        GenusPath path = GenusPath::Fast,
                                                        Execution exec = Execution::Parallel);

/// D1 - D2 + D3 - D4 = 0. A chord a has one endpoint held fixed and the
/// other placed right after (D1) or right before (D2) one endpoint x of a
/// second chord b, or right after (D3) or right before (D4) its other
/// endpoint y. All other endpoints stay where they are.
struct FourTermQuadruple {
  std::array<ChordDiagram, 4> diagrams;  // canonical forms
  static constexpr std::array<int, 4> kSigns{+1, -1, +1, -1};

  /// The signed combination vanishes identically in the free diagram space.
  bool degenerate() const;
  bool operator==(const FourTermQuadruple&) const = default;
  auto operator<=>(const FourTermQuadruple&) const = default;
};

/// Every quadruple over all diagrams of order n and all choices of moving
/// endpoint and second chord. Each relation is stored once: the pair of
/// diagrams at x and the pair at y are ordered so that (D1, D2) <= (D3, D4).
std::vector<FourTermQuadruple> generate_4T_quadruples(int n);

struct FourTermViolation {
  FourTermQuadruple quadruple;
  IntPolynomial residual;
};

struct FourTermReport {
  int n = 0;
  std::size_t quadruples = 0;
  std::vector<FourTermViolation> violations;

  bool ok() const { return violations.empty(); }
  /// `{"n":4,"quadruples":K,"violations":0}`
  nlohmann::json summary_json() const;
  /// One `{"quadruple":[w1,w2,w3,w4],"residual":{"coeffs":[...]}}` per
  /// violation.
  std::vector<nlohmann::json> violation_lines() const;
};

FourTermReport check_4T(const DiagramInvariant& invariant, int n,
                        Execution exec = Execution::Parallel);

/// The span of all diagrams of order n modulo the four-term relations.
class FourTermQuotient {
 public:
  explicit FourTermQuotient(int n);
  /// Builds from an explicit relation list instead of generating it.
  FourTermQuotient(int n, std::vector<ChordDiagram> diagrams,
                   std::span<const FourTermQuadruple> relations);

  int order() const noexcept { return n_; }
  const std::vector<ChordDiagram>& diagrams() const noexcept { return diagrams_; }
  int relation_rank() const noexcept { return echelon_.rank(); }
  int dimension() const noexcept { return static_cast<int>(diagrams_.size()) - echelon_.rank(); }

  /// Position of a diagram (any representative) in diagrams(); throws
  /// UnknownChord when it has a different order.
  int index_of(const ChordDiagram& d) const;
  /// Signed relation vector of a quadruple in the diagram basis.
  std::vector<Rational> relation_vector(const FourTermQuadruple& q) const;
  /// Normal form of a vector modulo the relations.
  std::vector<Rational> reduce(std::vector<Rational> v) const { return echelon_.reduce(std::move(v)); }

  /// Coefficients c with d = sum c_i basis_i modulo the relations.
  /// Errors: NotABasis when the basis is dependent modulo the relations,
  /// NoSolution when d is not in its span.
  std::vector<Rational> express(const ChordDiagram& d, std::span<const ChordDiagram> basis) const;

 private:
  void add_relations(std::span<const FourTermQuadruple> relations);

  int n_;
  std::vector<ChordDiagram> diagrams_;
  RowEchelon echelon_;
};

int dim_quotient(int n);

std::vector<Rational> express_modulo_4T(const ChordDiagram& d, std::span<const ChordDiagram> basis);

struct MultiplicativityViolation {
  ChordDiagram first;
  ChordDiagram second;
  int cut1 = 0;
  int cut2 = 0;
  IntPolynomial product_value;
  IntPolynomial expected;
};

struct MultiplicativityReport {
  int n1 = 0;
  int n2 = 0;
  std::size_t products = 0;
  std::vector<MultiplicativityViolation> violations;

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Gamma(product) == Gamma(d1) * Gamma(d2) for all diagram pairs of orders
/// n1 and n2 and all cut positions.
MultiplicativityReport check_multiplicativity(int n1, int n2, Execution exec = Execution::Parallel);

struct IntersectionClass {
  std::vector<ChordDiagram> diagrams;
  std::vector<IntPolynomial> values;

  bool consistent() const;
};

struct IntersectionInvarianceReport {
  int n = 0;
  std::vector<IntersectionClass> classes;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
  nlohmann::json to_json() const;
};

/// Groups the diagrams of order n by isomorphism class of their interlace
/// graphs and compares Gamma within each class.
IntersectionInvarianceReport check_intersection_graph_invariance(int n,
                                                                 Execution exec = Execution::Parallel);

/// Canonical adjacency code of a small graph: least bit string over all
/// vertex orders. Two graphs are isomorphic iff their codes agree.
std::vector<int> graph_canonical_code(const InterlaceMatrix& adjacency);

}  // namespace pdg
