#pragma once

// Reference values for diagrams of order at most four, shipped with the
// library, and the comparison of those values against computed ones.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdg/chord_diagram.hpp"
#include "pdg/kernels.hpp"
#include "pdg/polynomial.hpp"
#include "pdg/rational_matrix.hpp"

namespace pdg::golden {

struct SmallDiagram {
  int order = 0;
  int position = 0;  // 1-based place in the published list of that order
  ChordDiagram diagram;
  IntPolynomial gamma;
};

struct TableRow {
  int row = 0;  // d^4_row
  ChordDiagram diagram;
  std::string interlace;
  std::string gamma_printed;
  IntPolynomial gamma;
  /// Published relation modulo 4T as row -> coefficient; empty for basis rows.
  std::map<int, BigInt> relation;
  /// Subscript printed next to the polynomial when it differs from `row`.
  std::optional<int> printed_subscript;
};

struct Erratum {
  int row = 0;
  std::string kind;  // "gamma", "relation" or "subscript"
  std::string note;
  /// For "gamma": the value the row should carry.
  std::optional<IntPolynomial> corrected;
};

std::vector<SmallDiagram> small_diagrams();
std::vector<TableRow> order_four_table();
std::vector<int> basis_rows();
std::vector<Erratum> errata();

struct RowCheck {
  TableRow published;
  IntPolynomial computed_gamma;
  std::string computed_interlace;
  /// Coefficients over basis_rows() computed in the 4T quotient.
  std::vector<Rational> computed_relation;
  /// Computed polynomial equals the printed one.
  bool gamma_matches = false;
  /// Printed polynomial has coefficient sum 2^4.
  bool printed_gamma_sum_valid = false;
  bool interlace_matches = false;
  /// Published relation equals the computed one (basis rows: trivially).
  bool relation_matches = false;
  /// sum of published coefficients times published basis polynomials equals
  /// the published polynomial of the row.
  bool relation_consistent_with_gamma = false;
  /// The same check using computed polynomials throughout.
  bool relation_consistent_with_computed_gamma = false;
};

struct TableReport {
  std::vector<RowCheck> rows;
  std::vector<Erratum> errata;
  /// Rows whose printed polynomial differs from the computed one.
  std::vector<int> detected_gamma_errors;
  /// Rows whose published relation failed either check.
  std::vector<int> detected_relation_errors;
  /// Rows whose printed subscript differs from the row position.
  std::vector<int> detected_subscript_errors;

  bool all_gamma_match() const;
  /// Detected discrepancies with no matching erratum, plus errata whose
  /// corrected value disagrees with the computed one.
  std::vector<int> undocumented() const;
  bool all_interlace_match() const;
  nlohmann::json to_json() const;
  /// Fixed-width text table, identical for identical builds.
  std::string to_text() const;
};

TableReport check_table(Execution exec = Execution::Serial);

/// `d3 + 2 d6 - d7`, over basis_rows().
std::string format_relation(const std::vector<Rational>& coefficients);

}  // namespace pdg::golden
