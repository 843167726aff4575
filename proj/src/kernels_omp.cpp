#include <omp.h>

#include <algorithm>
#include <exception>

#include "pdg/kernels.hpp"
#include "subset_genus.hpp"

namespace pdg::kernels {

bool openmp_enabled() { return true; }

void set_thread_count(int threads) {
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

int thread_count() { return omp_get_max_threads(); }

namespace omp {

namespace {

// Runs body(i) for i in [0, count) across threads and rethrows the first
// exception on the calling thread.
template <class Body>
void parallel_for(std::int64_t count, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(pdg_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

IntPolynomial genus_polynomial(const CombinatorialMap& map, GenusPath path) {
  const detail::SubsetGenus evaluator(map, path);
  const int bins = evaluator.edges() + 1;
  const auto count = static_cast<std::int64_t>(evaluator.subset_count());
  std::vector<std::uint64_t> histogram(bins, 0);
  std::exception_ptr error;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      try {
        ++local[evaluator.genus(static_cast<std::uint64_t>(mask))];
      } catch (...) {
#pragma omp critical(pdg_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(pdg_histogram_merge)
    for (int g = 0; g < bins; ++g) histogram[g] += local[g];
  }
  if (error) std::rethrow_exception(error);
  return detail::histogram_to_polynomial(histogram);
}

std::vector<IntPolynomial> genus_polynomials(std::span<const ChordDiagram> diagrams,
                                             GenusPath path) {
  std::vector<IntPolynomial> out(diagrams.size());
  parallel_for(static_cast<std::int64_t>(diagrams.size()), [&](std::int64_t i) {
    out[i] = serial::genus_polynomial(to_map(diagrams[i]), path);
  });
  return out;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw Error(ErrorCode::OddLength, "negative order");
  const int len = 2 * n;
  // Shards: the partners of position 0 and of the next free position.
  std::vector<std::vector<int>> shards;
  std::vector<int> word(len, 0);
  if (n >= 2) {
    word[0] = 1;
    for (int j = 1; j < len; ++j) {
      word[j] = 1;
      const int second = j == 1 ? 2 : 1;
      word[second] = 2;
      for (int k = second + 1; k < len; ++k) {
        if (word[k] != 0) continue;
        word[k] = 2;
        shards.push_back(word);
        word[k] = 0;
      }
      word[second] = 0;
      word[j] = 0;
    }
  } else {
    shards.push_back(word);
  }

  std::vector<std::vector<ChordDiagram>> found(shards.size());
  parallel_for(static_cast<std::int64_t>(shards.size()), [&](std::int64_t s) {
    std::vector<int> w = shards[s];
    const int next_label = n >= 2 ? 3 : 1;
    auto& local = found[s];
    detail::for_each_pairing(w, next_label, [&](const std::vector<int>& full) {
      local.push_back(canonical_form(ChordDiagram::from_word(full)));
    });
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  });

  std::vector<ChordDiagram> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntPolynomial> alternating_sums(std::span<const DiagramQuadruple> quadruples,
                                            const DiagramInvariant& invariant) {
  std::vector<IntPolynomial> out(quadruples.size());
  parallel_for(static_cast<std::int64_t>(quadruples.size()), [&](std::int64_t i) {
    const auto& q = quadruples[i];
    out[i] = invariant(q[0]) - invariant(q[1]) + invariant(q[2]) - invariant(q[3]);
  });
  return out;
}

}  // namespace omp
}  // namespace pdg::kernels
