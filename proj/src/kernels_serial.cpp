#include <set>

#include "pdg/kernels.hpp"
#include "subset_genus.hpp"

namespace pdg::kernels::serial {

IntPolynomial genus_polynomial(const CombinatorialMap& map, GenusPath path) {
  const detail::SubsetGenus evaluator(map, path);
  std::vector<std::uint64_t> histogram(evaluator.edges() + 1, 0);
  for (std::uint64_t mask = 0; mask < evaluator.subset_count(); ++mask) {
    ++histogram[evaluator.genus(mask)];
  }
  return detail::histogram_to_polynomial(histogram);
}

std::vector<IntPolynomial> genus_polynomials(std::span<const ChordDiagram> diagrams,
                                             GenusPath path) {
  std::vector<IntPolynomial> out;
  out.reserve(diagrams.size());
  for (const auto& d : diagrams) out.push_back(genus_polynomial(to_map(d), path));
  return out;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw Error(ErrorCode::OddLength, "negative order");
  std::set<ChordDiagram> found;
  std::vector<int> word(2 * static_cast<std::size_t>(n), 0);
  detail::for_each_pairing(word, 1, [&](const std::vector<int>& w) {
    found.insert(canonical_form(ChordDiagram::from_word(w)));
  });
  return {found.begin(), found.end()};
}

std::vector<IntPolynomial> alternating_sums(std::span<const DiagramQuadruple> quadruples,
                                            const DiagramInvariant& invariant) {
  std::vector<IntPolynomial> out;
  out.reserve(quadruples.size());
  for (const auto& q : quadruples) {
    out.push_back(invariant(q[0]) - invariant(q[1]) + invariant(q[2]) - invariant(q[3]));
  }
  return out;
}

}  // namespace pdg::kernels::serial
