#pragma once

// Data-parallel kernels. Every kernel exists twice: a plain serial reference
// in kernels::serial and an OpenMP version in kernels::omp. Both return
// identical results in identical order; tests pin them against each other.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "pdg/chord_diagram.hpp"
#include "pdg/combinatorial_map.hpp"
#include "pdg/polynomial.hpp"

namespace pdg {

/// How genus(G^A) is obtained for each subset A.
enum class GenusPath {
  Fast,          // boundary counts of (V, A) and (V, complement of A)
  Construction,  // build G^A edge by edge, then count
};

enum class Execution { Serial, Parallel };

using DiagramInvariant = std::function<IntPolynomial(const ChordDiagram&)>;
using DiagramQuadruple = std::array<ChordDiagram, 4>;

namespace kernels {

bool openmp_enabled();
/// 0 restores the OpenMP default.
void set_thread_count(int threads);
int thread_count();

namespace serial {

/// Sum over all subsets A of z^genus(G^A).
IntPolynomial genus_polynomial(const CombinatorialMap& map, GenusPath path = GenusPath::Fast);
std::vector<IntPolynomial> genus_polynomials(std::span<const ChordDiagram> diagrams,
                                             GenusPath path = GenusPath::Fast);
/// Sorted canonical forms of all chord diagrams of order n.
std::vector<ChordDiagram> enumerate_diagrams(int n);
/// f(D1) - f(D2) + f(D3) - f(D4) for every quadruple.
std::vector<IntPolynomial> alternating_sums(std::span<const DiagramQuadruple> quadruples,
                                            const DiagramInvariant& invariant);

}  // namespace serial

namespace omp {

IntPolynomial genus_polynomial(const CombinatorialMap& map, GenusPath path = GenusPath::Fast);
std::vector<IntPolynomial> genus_polynomials(std::span<const ChordDiagram> diagrams,
                                             GenusPath path = GenusPath::Fast);
std::vector<ChordDiagram> enumerate_diagrams(int n);
std::vector<IntPolynomial> alternating_sums(std::span<const DiagramQuadruple> quadruples,
                                            const DiagramInvariant& invariant);

}  // namespace omp

}  // namespace kernels
}  // namespace pdg
