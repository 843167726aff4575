#include "doctest.h"
#include "pdg/golden.hpp"
#include "pdg/weight_system.hpp"

using namespace pdg;

TEST_SUITE("golden") {

TEST_CASE("small diagrams cover every order up to three") {
  const auto small = golden::small_diagrams();
  CHECK(small.size() == 8);
  for (int n = 1; n <= 3; ++n) {
    std::vector<ChordDiagram> listed;
    for (const auto& s : small) {
      if (s.order == n) listed.push_back(canonical_form(s.diagram));
    }
    std::sort(listed.begin(), listed.end());
    CHECK(listed == enumerate_diagrams(n));
  }
}

TEST_CASE("order-four rows are the eighteen diagrams") {
  const auto table = golden::order_four_table();
  REQUIRE(table.size() == 18);
  std::vector<ChordDiagram> words;
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].row == static_cast<int>(i) + 1);
    words.push_back(canonical_form(table[i].diagram));
  }
  std::sort(words.begin(), words.end());
  CHECK(words == enumerate_diagrams(4));
  CHECK(golden::basis_rows() == std::vector<int>{3, 6, 7, 15, 17, 18});
}

TEST_CASE("table report") {
  const auto report = golden::check_table();
  CHECK(report.all_interlace_match());
  CHECK(report.detected_gamma_errors == std::vector<int>{9, 10, 14, 17});
  CHECK(report.detected_relation_errors == std::vector<int>{1, 13});
  CHECK(report.detected_subscript_errors == std::vector<int>{8, 15});
  CHECK(report.undocumented().empty());
  for (const auto& r : report.rows) {
    CAPTURE(r.published.row);
    CHECK(r.relation_matches);
    CHECK(r.relation_consistent_with_computed_gamma);
    CHECK(r.computed_gamma.coeff_sum() == 16);
  }
  CHECK(golden::format_relation(report.rows[0].computed_relation) == "d3 + 2 d6 - d7 - 2 d15 + d17");
  CHECK(report.to_text() == golden::check_table(Execution::Parallel).to_text());
  CHECK(report.to_json().at("rows").size() == 18);
}

}
