#include "doctest.h"
#include "pdg/kernels.hpp"
#include "pdg/weight_system.hpp"
#include "support.hpp"

using namespace pdg;

TEST_SUITE("kernels") {

TEST_CASE("openmp build") {
  CHECK(kernels::openmp_enabled());
  kernels::set_thread_count(3);
  CHECK(kernels::thread_count() == 3);
  kernels::set_thread_count(0);
  CHECK(kernels::thread_count() >= 1);
}

TEST_CASE("parallel kernels match the serial reference") {
  for (int threads : {1, 2, 4}) {
    kernels::set_thread_count(threads);
    for (int n = 0; n <= 6; ++n) {
      CHECK(kernels::omp::enumerate_diagrams(n) == kernels::serial::enumerate_diagrams(n));
    }
    const auto all = kernels::serial::enumerate_diagrams(5);
    for (auto path : {GenusPath::Fast, GenusPath::Construction}) {
      CHECK(kernels::omp::genus_polynomials(all, path) == kernels::serial::genus_polynomials(all, path));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = test::random_map(test::uniform(1, 10));
      CHECK(kernels::omp::genus_polynomial(m) == kernels::serial::genus_polynomial(m));
      CHECK(kernels::omp::genus_polynomial(m, GenusPath::Construction) ==
            kernels::serial::genus_polynomial(m));
    }

    std::vector<DiagramQuadruple> quads;
    for (const auto& q : generate_4T_quadruples(4)) quads.push_back(q.diagrams);
    const DiagramInvariant genus_only = [](const ChordDiagram& d) {
      return IntPolynomial::monomial(1, genus(to_map(d)));
    };
    CHECK(kernels::omp::alternating_sums(quads, genus_only) ==
          kernels::serial::alternating_sums(quads, genus_only));
  }
  kernels::set_thread_count(0);
}

TEST_CASE("fast and construction paths agree on every subset") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      const auto m = to_map(d);
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        const EdgeSubset subset(a, n);
        CHECK(genus_of_partial_dual_fast(m, subset) == genus(partial_dual_stepwise(m, subset)));
      }
    }
  }
}

TEST_CASE("errors inside parallel regions reach the caller") {
  std::vector<DiagramQuadruple> quads;
  for (const auto& q : generate_4T_quadruples(3)) quads.push_back(q.diagrams);
  const DiagramInvariant throwing = [](const ChordDiagram&) -> IntPolynomial {
    throw std::runtime_error("boom");
  };
  CHECK_THROWS_WITH(kernels::omp::alternating_sums(quads, throwing), "boom");
}

}
