#include "pdg/golden.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pdg/error.hpp"
#include "pdg/golden_data.hpp"
#include "pdg/weight_system.hpp"

namespace pdg::golden {

namespace {

const nlohmann::json& table_json() {
  static const nlohmann::json j = nlohmann::json::parse(embedded::kTableJson);
  return j;
}

IntPolynomial polynomial_from(const nlohmann::json& coeffs) {
  return IntPolynomial::from_json({{"coeffs", coeffs}});
}

std::string pad(const std::string& s, std::size_t width) {
  // Column widths count code points, not bytes; "∨" is three bytes.
  std::size_t visible = 0;
  for (unsigned char c : s) visible += (c & 0xC0) != 0x80;
  return visible >= width ? s + " " : s + std::string(width - visible, ' ');
}

std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace

std::vector<SmallDiagram> small_diagrams() {
  std::vector<SmallDiagram> out;
  for (const auto& e : table_json().at("small")) {
    out.push_back({e.at("order").get<int>(), e.at("position").get<int>(),
                   ChordDiagram::from_word(e.at("word").get<std::vector<int>>()),
                   polynomial_from(e.at("gamma"))});
  }
  return out;
}

std::vector<int> basis_rows() { return table_json().at("basis_rows").get<std::vector<int>>(); }

std::vector<TableRow> order_four_table() {
  std::vector<TableRow> out;
  for (const auto& e : table_json().at("order_four")) {
    TableRow row;
    row.row = e.at("row").get<int>();
    row.diagram = ChordDiagram::from_word(e.at("word").get<std::vector<int>>());
    row.interlace = e.at("interlace").get<std::string>();
    row.gamma_printed = e.at("gamma_printed").get<std::string>();
    row.gamma = polynomial_from(e.at("gamma"));
    if (e.contains("relation")) {
      for (const auto& [key, value] : e.at("relation").items()) {
        row.relation[std::stoi(key)] = BigInt(value.get<long long>());
      }
    }
    if (e.contains("printed_subscript")) row.printed_subscript = e.at("printed_subscript").get<int>();
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Erratum> errata() {
  std::vector<Erratum> out;
  for (const auto& e : nlohmann::json::parse(embedded::kErrataJson)) {
    Erratum erratum{e.at("row").get<int>(), e.at("kind").get<std::string>(),
                    e.at("note").get<std::string>(), std::nullopt};
    if (e.contains("corrected")) erratum.corrected = IntPolynomial::from_json(e.at("corrected"));
    out.push_back(std::move(erratum));
  }
  return out;
}

std::string format_relation(const std::vector<Rational>& coefficients) {
  const std::vector<int> rows = basis_rows();
  std::string out;
  for (std::size_t i = 0; i < coefficients.size() && i < rows.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += rational_string(magnitude) + " ";
    out += "d" + std::to_string(rows[i]);
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------ report

bool TableReport::all_gamma_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.gamma_matches; });
}

bool TableReport::all_interlace_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RowCheck& r) { return r.interlace_matches; });
}

std::vector<int> TableReport::undocumented() const {
  const auto listed = [&](int row, const std::string& kind) {
    return std::any_of(errata.begin(), errata.end(),
                       [&](const Erratum& e) { return e.row == row && e.kind == kind; });
  };
  std::vector<int> out;
  for (int r : detected_gamma_errors) {
    if (!listed(r, "gamma")) out.push_back(r);
  }
  for (int r : detected_relation_errors) {
    if (!listed(r, "relation")) out.push_back(r);
  }
  for (int r : detected_subscript_errors) {
    if (!listed(r, "subscript")) out.push_back(r);
  }
  for (const auto& e : errata) {
    if (!e.corrected) continue;
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const RowCheck& c) { return c.published.row == e.row; });
    if (it == rows.end() || it->computed_gamma != *e.corrected) out.push_back(e.row);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TableReport check_table(Execution exec) {
  TableReport report;
  report.errata = errata();
  const std::vector<TableRow> table = order_four_table();
  const std::vector<int> basis = basis_rows();

  std::vector<ChordDiagram> diagrams;
  for (const auto& row : table) diagrams.push_back(row.diagram);
  const auto values = pd_genus_polynomials(diagrams, GenusPath::Fast, exec);

  const auto row_of = [&](int r) -> const TableRow& {
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& t) { return t.row == r; });
    if (it == table.end()) throw Error(ErrorCode::ParseError, "table has no row " + std::to_string(r));
    return *it;
  };
  std::vector<ChordDiagram> basis_diagrams;
  for (int r : basis) basis_diagrams.push_back(row_of(r).diagram);

  const FourTermQuotient quotient(4);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const TableRow& row = table[i];
    RowCheck check;
    check.published = row;
    check.computed_gamma = values[i].polynomial;
    check.computed_interlace = interlace_sequence(row.diagram).to_string();
    check.computed_relation = quotient.express(row.diagram, basis_diagrams);
    check.gamma_matches = check.computed_gamma == row.gamma;
    check.printed_gamma_sum_valid = row.gamma.coeff_sum() == BigInt(1) << row.diagram.order();
    check.interlace_matches = check.computed_interlace == row.interlace;

    const bool is_basis = std::find(basis.begin(), basis.end(), row.row) != basis.end();
    std::vector<Rational> claimed(basis.size());
    if (is_basis) {
      claimed[std::find(basis.begin(), basis.end(), row.row) - basis.begin()] = 1;
    }
    IntPolynomial claimed_gamma;
    IntPolynomial claimed_computed_gamma;
    bool claimed_known = true;
    for (const auto& [r, c] : row.relation) {
      const auto pos = std::find(basis.begin(), basis.end(), r);
      if (pos == basis.end()) {
        claimed_known = false;
        continue;
      }
      claimed[pos - basis.begin()] = Rational(c);
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (claimed[b] == 0) continue;
      const BigInt c = boost::multiprecision::numerator(claimed[b]);
      claimed_gamma += row_of(basis[b]).gamma.scaled(c);
      const auto basis_index = std::find_if(table.begin(), table.end(),
                                            [&](const auto& t) { return t.row == basis[b]; }) -
                               table.begin();
      claimed_computed_gamma += values[basis_index].polynomial.scaled(c);
    }
    check.relation_matches = claimed_known && claimed == check.computed_relation;
    check.relation_consistent_with_gamma = claimed_known && claimed_gamma == row.gamma;
    check.relation_consistent_with_computed_gamma =
        claimed_known && claimed_computed_gamma == check.computed_gamma;
    if (!check.gamma_matches) report.detected_gamma_errors.push_back(row.row);
    if (!check.relation_matches || !check.relation_consistent_with_gamma) {
      report.detected_relation_errors.push_back(row.row);
    }
    if (row.printed_subscript && *row.printed_subscript != row.row) {
      report.detected_subscript_errors.push_back(row.row);
    }
    report.rows.push_back(std::move(check));
  }
  return report;
}

nlohmann::json TableReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json relation = nlohmann::json::array();
    for (const auto& c : r.computed_relation) relation.push_back(rational_string(c));
    rows_json.push_back({{"row", r.published.row},
                         {"word", r.published.diagram.word()},
                         {"interlace", r.computed_interlace},
                         {"interlace_matches", r.interlace_matches},
                         {"gamma", r.computed_gamma.to_json()},
                         {"gamma_published", r.published.gamma.to_json()},
                         {"gamma_matches", r.gamma_matches},
                         {"gamma_printed", r.published.gamma_printed},
                         {"printed_gamma_sum_valid", r.printed_gamma_sum_valid},
                         {"relation", relation},
                         {"relation_text", format_relation(r.computed_relation)},
                         {"relation_matches", r.relation_matches},
                         {"relation_consistent_with_gamma", r.relation_consistent_with_gamma},
                         {"relation_consistent_with_computed_gamma",
                          r.relation_consistent_with_computed_gamma}});
  }
  nlohmann::json errata_json = nlohmann::json::array();
  for (const auto& e : errata) {
    nlohmann::json j{{"row", e.row}, {"kind", e.kind}, {"note", e.note}};
    if (e.corrected) j["corrected"] = e.corrected->to_json();
    errata_json.push_back(std::move(j));
  }
  return {{"rows", rows_json},
          {"basis_rows", basis_rows()},
          {"detected_gamma_errors", detected_gamma_errors},
          {"detected_relation_errors", detected_relation_errors},
          {"detected_subscript_errors", detected_subscript_errors},
          {"errata", errata_json},
          {"undocumented", undocumented()}};
}

std::string TableReport::to_text() const {
  std::ostringstream out;
  out << pad("row", 5) << pad("word", 17) << pad("interlace", 18) << pad("computed", 16)
      << pad("printed", 16) << pad("relation mod 4T", 34) << "published relation\n";
  for (const auto& r : rows) {
    std::string published = "basis";
    if (!r.published.relation.empty()) {
      if (!r.relation_matches) {
        published = "ERRATUM (quotient)";
      } else if (!r.relation_consistent_with_gamma) {
        published = "ERRATUM (printed values)";
      } else {
        published = "agrees";
      }
    }
    const std::string printed = r.published.gamma_printed + (r.gamma_matches ? "" : " *");
    out << pad("d" + std::to_string(r.published.row), 5)
        << pad(r.published.diagram.to_string(), 17)
        << pad(r.computed_interlace + (r.interlace_matches ? "" : " *"), 18)
        << pad(r.computed_gamma.to_string(), 16) << pad(printed, 16)
        << pad(format_relation(r.computed_relation), 34) << published << "\n";
  }
  out << "\n* printed value differs from the computed one\n\nerrata:\n";
  for (const auto& e : errata) {
    out << "  d" << e.row << " [" << e.kind << "] " << e.note << "\n";
  }
  return out.str();
}

}  // namespace pdg::golden
