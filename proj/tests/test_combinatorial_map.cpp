#include "doctest.h"
#include "pdg/chord_diagram.hpp"
#include "pdg/combinatorial_map.hpp"
#include "pdg/error.hpp"
#include "support.hpp"

using namespace pdg;

namespace {

CombinatorialMap theta() { return parse_map("sigma: (0 1 2)(3 4 5)\nalpha: (0 3)(1 4)(2 5)"); }
CombinatorialMap torus_bouquet() { return parse_map("sigma: (0 1 2 3)\nalpha: (0 2)(1 3)"); }
CombinatorialMap example_c() { return to_map(ChordDiagram::parse("1 2 1 3 2 3")); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

CombinatorialMap relabelled(const CombinatorialMap& m) {
  const int n = m.half_edge_count();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), test::rng());
  Permutation s(n), a(n);
  for (int h = 0; h < n; ++h) {
    s[pi[h]] = pi[m.sigma()[h]];
    a[pi[h]] = pi[m.alpha()[h]];
  }
  return CombinatorialMap::make(std::move(s), std::move(a));
}

EdgeSubset random_subset(int width) {
  std::uint64_t mask = 0;
  for (int i = 0; i < width; ++i) mask |= std::uint64_t(test::uniform(0, 1)) << i;
  return {mask, width};
}

}  // namespace

TEST_SUITE("combinatorial_map") {

TEST_CASE("construction and validation") {
  CHECK(counts(torus_bouquet()) == MapCounts{1, 2, 1, 1});
  CHECK(genus(torus_bouquet()) == 1);
  const auto edge = CombinatorialMap::make({0, 1}, {1, 0});
  CHECK(counts(edge) == MapCounts{2, 1, 1, 1});
  CHECK(genus(edge) == 0);
  CHECK(code_of([] { parse_map("sigma: (0)(1)(2)(3)\nalpha: (0 1)(2 2)"); }) == ErrorCode::HasFixedPoint);
  CHECK(code_of([] { CombinatorialMap::make({1, 2, 3, 0}, {1, 2, 3, 0}); }) == ErrorCode::NotInvolution);
  CHECK(code_of([] { CombinatorialMap::make({0, 1}, {1, 0, 3, 2}); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { CombinatorialMap::make({0, 0}, {1, 0}); }) == ErrorCode::NotPermutation);
  CHECK(code_of([] { parse_map("sigma: (0 1\nalpha: (0 1)"); }) == ErrorCode::ParseError);
}

TEST_CASE("edges are ordered by their least half-edge") {
  const auto m = CombinatorialMap::make({1, 2, 3, 0}, {3, 2, 1, 0});
  CHECK(m.ends(0) == std::pair{0, 3});
  CHECK(m.ends(1) == std::pair{1, 2});
  CHECK(m.edge_of(2) == 1);
  CHECK(m.edge_labels() == std::vector<int>{1, 2});
  CHECK(m.edge_with_label(2) == 1);
  CHECK(m.edge_with_label(7) == -1);
}

TEST_CASE("example graphs") {
  CHECK(counts(theta()) == MapCounts{2, 3, 1, 1});
  CHECK(genus(theta()) == 1);
  CHECK(counts(example_c()) == MapCounts{1, 3, 2, 1});
  CHECK(genus(example_c()) == 1);
  const auto loops = parse_map("sigma: (0 1)(2 3)\nalpha: (0 1)(2 3)");
  CHECK(counts(loops) == MapCounts{2, 2, 4, 2});
  CHECK(genus(loops) == 0);
}

TEST_CASE("partial duals of the examples") {
  const auto c = example_c();
  const int middle = c.edge_with_label(2);
  const auto dual = partial_dual(c, EdgeSubset::of({middle}, 3));
  CHECK(counts(dual).vertices == 2);
  CHECK(genus(dual) == 0);
  CHECK(genus_of_partial_dual_fast(c, EdgeSubset::of({middle}, 3)) == 0);
  CHECK(partial_dual(c, EdgeSubset::none(3)) == c);

  const auto b = torus_bouquet();
  const auto all = partial_dual(b, EdgeSubset::all(2));
  CHECK(counts(all) == MapCounts{1, 2, 1, 1});
  CHECK(genus(all) == 1);
  CHECK(euler_dual(b) == all);

  const auto c_dual = euler_dual(c);
  CHECK(counts(c_dual) == MapCounts{2, 3, 1, 1});
  CHECK(genus(c_dual) == 1);
  CHECK(code_of([&] { partial_dual(c, EdgeSubset::all(4)); }) == ErrorCode::EdgeOutOfRange);
}

TEST_CASE("euler dual of stars") {
  for (int e = 1; e <= 3; ++e) {
    Permutation sigma(2 * e), alpha(2 * e);
    for (int i = 0; i < e; ++i) {
      sigma[i] = (i + 1) % e;
      sigma[e + i] = e + i;
      alpha[i] = e + i;
      alpha[e + i] = i;
    }
    const auto star = CombinatorialMap::make(sigma, alpha);
    CHECK(genus(star) == 0);
    const auto dual = euler_dual(star);
    CHECK(counts(dual) == MapCounts{1, e, e + 1, 1});
    CHECK(genus(dual) == 0);
  }
}

TEST_CASE("spanning boundary counts") {
  const auto b = torus_bouquet();
  CHECK(spanning_boundary_count(b, EdgeSubset::all(2)) == counts(b).faces);
  // One loop on a disc bounds an annulus: two boundary circles.
  CHECK(spanning_boundary_count(b, EdgeSubset::of({0}, 2)) == 2);
  CHECK(spanning_boundary_count(example_c(), EdgeSubset::none(3)) == 1);
  CHECK(spanning_boundary_count(theta(), EdgeSubset::none(3)) == 2);
}

TEST_CASE("slide on example (c)") {
  const auto c = example_c();
  const auto moved = slide(c, 2, c.edge_with_label(2));
  CHECK(canonical_form(diagram_of_one_vertex_map(moved)).to_string() == "1 2 3 1 2 3");
  CHECK(genus(moved) == genus(c));
  CHECK(counts(moved).faces == counts(c).faces);
  CHECK(code_of([&] { slide(c, 0, c.edge_with_label(1)); }) == ErrorCode::NotAdjacent);
  CHECK(code_of([&] { slide(c, 0, 7); }) == ErrorCode::EdgeOutOfRange);
  // Position 0 sits between chords 4 and 2, away from chord 3.
  const auto far = to_map(ChordDiagram::parse("1 2 3 3 2 1 4 4"));
  CHECK(code_of([&] { slide(far, 0, far.edge_with_label(3)); }) == ErrorCode::NotAdjacent);
}

TEST_CASE("map text round trip") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = test::random_map(test::uniform(1, 6));
    CHECK(parse_map(format_map(m)) == m);
  }
  CHECK(format_cycles({1, 2, 0, 3}) == "(0 1 2)(3)");
}

TEST_CASE("partial duality properties on random maps") {
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = test::random_map(test::uniform(1, 6));
    const int e = m.edge_count();
    const auto a = random_subset(e);
    const auto b = random_subset(e);
    const auto ga = partial_dual(m, a);
    CAPTURE(format_map(m));
    CAPTURE(a.mask());

    CHECK(partial_dual(ga, a) == m);
    CHECK(partial_dual(ga, b) == partial_dual(m, a ^ b));
    CHECK(counts(ga).vertices == spanning_boundary_count(m, a));
    CHECK(counts(ga).faces == spanning_boundary_count(m, a.complement()));
    CHECK(counts(ga).edges == e);
    CHECK(counts(ga).components == counts(m).components);
    CHECK(genus_of_partial_dual_fast(m, a) == genus(ga));

    const auto stepwise = partial_dual_stepwise(m, a);
    CHECK(counts(stepwise) == counts(ga));
    CHECK(isomorphic(stepwise, ga));
    if (test::connected(m)) CHECK(test::isomorphic_brute(stepwise, ga));

    const auto dual = euler_dual(m);
    CHECK(genus(dual) == genus(m));
    CHECK(counts(dual).vertices == counts(m).faces);
    CHECK(counts(dual).faces == counts(m).vertices);
  }
}

TEST_CASE("isomorphism test agrees with the brute-force search") {
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = test::random_map(test::uniform(1, 5));
    if (!test::connected(m)) continue;
    const auto copy = relabelled(m);
    CHECK(isomorphic(m, copy));
    CHECK(test::isomorphic_brute(m, copy));
    CHECK(canonical_code(m) == canonical_code(copy));
    ++positives;
    const auto other = test::random_map(m.edge_count());
    if (!test::connected(other) || counts(other) != counts(m)) continue;
    CHECK(isomorphic(m, other) == test::isomorphic_brute(m, other));
    ++negatives;
  }
  CHECK(positives > 100);
  CHECK(negatives > 10);
}

TEST_CASE("slides preserve genus and faces") {
  int done = 0;
  for (int trial = 0; done < 1000 && trial < 20000; ++trial) {
    const auto m = test::random_map(test::uniform(2, 6));
    const int h = test::uniform(0, m.half_edge_count() - 1);
    const int succ_edge = m.edge_of(m.sigma()[h]);
    if (succ_edge == m.edge_of(h)) continue;
    const auto moved = slide(m, h, succ_edge);
    CHECK(genus(moved) == genus(m));
    CHECK(counts(moved).faces == counts(m).faces);
    CHECK(counts(moved).vertices == counts(m).vertices);
    ++done;
  }
  CHECK(done == 1000);
}

TEST_CASE("sliding back restores the map") {
  int done = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto m = to_map(test::random_diagram(test::uniform(2, 6)));
    const int h = test::uniform(0, m.half_edge_count() - 1);
    const int f = m.edge_of(m.sigma()[h]);
    if (f == m.edge_of(h)) continue;
    const auto [f1, f2] = m.ends(f);
    // The way back is ambiguous when both ends of f are next to each other.
    if (m.sigma()[f1] == f2 || m.sigma()[f2] == f1) continue;
    const auto there = slide(m, h, f);
    CHECK(slide(there, h, f) == m);
    ++done;
  }
  CHECK(done > 500);
}

}
