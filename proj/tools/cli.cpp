#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "pdg/chord_diagram.hpp"
#include "pdg/combinatorial_map.hpp"
#include "pdg/error.hpp"
#include "pdg/golden.hpp"
#include "pdg/kernels.hpp"
#include "pdg/weight_system.hpp"

namespace pdg::cli {

namespace {

struct Options {
  bool json = false;
  int threads = 0;
  bool fast = false;
  bool oracle = false;
  int limit = -1;
};

GenusPath genus_path(const Options& o) {
  return o.oracle ? GenusPath::Construction : GenusPath::Fast;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

// `genus` accepts either a diagram or a path to a map file.
CombinatorialMap read_map_argument(const std::string& arg) {
  std::ifstream file(arg);
  if (file) {
    const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    return parse_map(text);
  }
  return to_map(ChordDiagram::parse(arg));
}

nlohmann::json counts_json(const CombinatorialMap& map) {
  const MapCounts c = counts(map);
  return {{"vertices", c.vertices}, {"edges", c.edges}, {"faces", c.faces},
          {"components", c.components}, {"genus", genus(map)}};
}

std::string circles_text(const MultiCircleDiagram& d) {
  const CombinatorialMap map = d.to_map();
  std::string out;
  for (const auto& circle : d.circles) {
    out += '(';
    for (std::size_t i = 0; i < circle.size(); ++i) {
      if (i) out += ' ';
      const int e = map.edge_of(circle[i]);
      out += std::to_string(map.edge_labels()[e]);
      if (d.side[e] == ChordSide::Outside) out += '\'';
    }
    out += ')';
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial duals, genera and partial-dual genus polynomials of ribbon graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--threads", o.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  auto* fast = app.add_flag("--fast", o.fast, "Genus of partial duals from boundary counts (default)");
  auto* oracle = app.add_flag("--oracle", o.oracle, "Genus of partial duals by explicit construction");
  fast->excludes(oracle);
  app.add_option("--limit", o.limit, "Cap on listed diagrams for enum");

  std::string diagram_text;
  std::string second_text;
  std::string chords_text;
  std::string cuts_text;
  std::string invariant = "gamma";
  int order = 0;
  int move = -1;
  int along = -1;

  auto* poly = app.add_subcommand("poly", "Partial-dual genus polynomial of a diagram");
  poly->add_option("diagram", diagram_text)->required();

  auto* dual = app.add_subcommand("dual", "Partial dual of a diagram relative to some chords");
  dual->add_option("diagram", diagram_text)->required();
  dual->add_option("--chords", chords_text, "Comma-separated chord labels")->required();

  auto* genus_cmd = app.add_subcommand("genus", "Counts and genus of a diagram or a map file");
  genus_cmd->add_option("input", diagram_text, "Diagram text or path to a sigma/alpha map file")
      ->required();

  auto* enumerate = app.add_subcommand("enum", "All chord diagrams of order n");
  enumerate->add_option("n", order)->required()->check(CLI::Range(0, 8));

  auto* check4t = app.add_subcommand("check4t", "Check the four-term relation at order n");
  check4t->add_option("n", order)->required()->check(CLI::Range(2, 7));
  check4t->add_option("--invariant", invariant, "gamma (default), genus, or crossings")
      ->check(CLI::IsMember({"gamma", "genus", "crossings"}));

  auto* dims = app.add_subcommand("dims", "Dimension of the diagram space modulo 4T");
  dims->add_option("n", order)->required()->check(CLI::Range(0, 6));

  auto* table = app.add_subcommand("table", "Order-4 reference table with computed values");

  auto* product_cmd = app.add_subcommand("product", "Connected sum of two diagrams");
  product_cmd->add_option("d1", diagram_text)->required();
  product_cmd->add_option("d2", second_text)->required();
  product_cmd->add_option("--cuts", cuts_text, "Cut gaps i,j (default 0,0)");

  auto* slide_cmd = app.add_subcommand("slide", "Slide a chord end along another chord");
  slide_cmd->add_option("diagram", diagram_text)->required();
  slide_cmd->add_option("--move", move, "Word position of the moving end")->required();
  slide_cmd->add_option("--along", along, "Label of the chord to slide along")->required();

  auto* interlace = app.add_subcommand("interlace", "Interlace graph and sequence of a diagram");
  interlace->add_option("diagram", diagram_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, error;
    const int code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? 0 : 1;
  }

  try {
    kernels::set_thread_count(o.threads);

    if (*poly) {
      const ChordDiagram d = ChordDiagram::parse(diagram_text);
      const IntPolynomial p = pd_genus_polynomial(d, genus_path(o), Execution::Parallel);
      if (o.json) {
        out << nlohmann::json{{"diagram", canonical_form(d).word()},
                              {"polynomial", p.to_json()},
                              {"subsets", std::uint64_t{1} << d.order()}}
                   .dump()
            << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return 0;
    }

    if (*dual) {
      const ChordDiagram d = ChordDiagram::parse(diagram_text);
      const std::vector<int> chords = parse_int_list(chords_text);
      const MultiCircleDiagram result = partial_dual_diagram(d, chords);
      const CombinatorialMap map = result.to_map();
      if (o.json) {
        nlohmann::json j = result.to_json();
        j["counts"] = counts_json(map);
        out << j.dump() << "\n";
      } else {
        const MapCounts c = counts(map);
        out << circles_text(result) << "\n"
            << "v=" << c.vertices << " e=" << c.edges << " f=" << c.faces
            << " genus=" << genus(map) << "\n";
      }
      return 0;
    }

    if (*genus_cmd) {
      const CombinatorialMap map = read_map_argument(diagram_text);
      if (o.json) {
        out << counts_json(map).dump() << "\n";
      } else {
        const MapCounts c = counts(map);
        out << "v=" << c.vertices << " e=" << c.edges << " f=" << c.faces
            << " c=" << c.components << " genus=" << genus(map) << "\n";
      }
      return 0;
    }

    if (*enumerate) {
      const std::vector<ChordDiagram> all = kernels::omp::enumerate_diagrams(order);
      const std::size_t shown =
          o.limit >= 0 ? std::min(all.size(), static_cast<std::size_t>(o.limit)) : all.size();
      if (o.json) {
        nlohmann::json words = nlohmann::json::array();
        for (std::size_t i = 0; i < shown; ++i) words.push_back(all[i].word());
        out << nlohmann::json{{"n", order}, {"count", all.size()}, {"diagrams", words}}.dump()
            << "\n";
      } else {
        for (std::size_t i = 0; i < shown; ++i) out << all[i].to_string() << "\n";
        out << "# " << all.size() << " diagrams\n";
      }
      return 0;
    }

    if (*check4t) {
      const GenusPath path = genus_path(o);
      DiagramInvariant f;
      if (invariant == "genus") {
        f = [](const ChordDiagram& d) { return IntPolynomial::monomial(1, genus(to_map(d))); };
      } else if (invariant == "crossings") {
        // z^(interlaced pairs); not a weight system, useful as a negative control.
        f = [](const ChordDiagram& d) {
          int pairs = 0;
          for (const auto& row : interlace_graph(d)) pairs += std::count(row.begin(), row.end(), 1);
          return IntPolynomial::monomial(1, pairs / 2);
        };
      } else {
        f = [path](const ChordDiagram& d) { return pd_genus_polynomial(d, path); };
      }
      const FourTermReport report = check_4T(f, order, Execution::Parallel);
      for (const auto& line : report.violation_lines()) out << line.dump() << "\n";
      out << report.summary_json().dump() << "\n";
      return report.ok() ? 0 : 2;
    }

    if (*dims) {
      const FourTermQuotient q(order);
      if (o.json) {
        out << nlohmann::json{{"n", order},
                              {"dimension", q.dimension()},
                              {"diagrams", q.diagrams().size()},
                              {"relation_rank", q.relation_rank()}}
                   .dump()
            << "\n";
      } else {
        out << q.dimension() << "\n";
      }
      return 0;
    }

    if (*table) {
      const golden::TableReport report = golden::check_table(Execution::Serial);
      if (o.json) {
        out << report.to_json().dump(2) << "\n";
      } else {
        out << report.to_text();
      }
      return report.undocumented().empty() && report.all_interlace_match() ? 0 : 2;
    }

    if (*product_cmd) {
      const ChordDiagram d1 = ChordDiagram::parse(diagram_text);
      const ChordDiagram d2 = ChordDiagram::parse(second_text);
      int cut1 = 0;
      int cut2 = 0;
      if (!cuts_text.empty()) {
        const auto cuts = parse_int_list(cuts_text);
        if (cuts.size() != 2) throw Error(ErrorCode::ParseError, "--cuts needs two values i,j");
        cut1 = cuts[0];
        cut2 = cuts[1];
      }
      const ChordDiagram p = product(d1, d2, cut1, cut2);
      if (o.json) {
        out << nlohmann::json{{"word", p.word()}, {"canonical", canonical_form(p).word()}}.dump()
            << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return 0;
    }

    if (*slide_cmd) {
      const ChordDiagram d = ChordDiagram::parse(diagram_text);
      const CombinatorialMap map = to_map(d);
      const int edge = map.edge_with_label(along);
      if (edge < 0) throw Error(ErrorCode::UnknownChord, "no chord labelled " + std::to_string(along));
      const CombinatorialMap moved = slide(map, move, edge);
      const ChordDiagram result = diagram_of_one_vertex_map(moved);
      if (o.json) {
        out << nlohmann::json{{"word", result.word()},
                              {"canonical", canonical_form(result).word()},
                              {"before", counts_json(map)},
                              {"after", counts_json(moved)}}
                   .dump()
            << "\n";
      } else {
        out << result.to_string() << "\n";
      }
      return 0;
    }

    if (*interlace) {
      const ChordDiagram d = ChordDiagram::parse(diagram_text);
      const InterlaceMatrix m = interlace_graph(d);
      const InterlaceSequence s = interlace_sequence(d);
      if (o.json) {
        out << nlohmann::json{{"labels", d.labels()},
                              {"matrix", m},
                              {"sequence", s.counts()},
                              {"factors", s.factors},
                              {"text", s.to_string()}}
                   .dump()
            << "\n";
      } else {
        for (const auto& row : m) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << "\n";
        }
        out << s.to_string() << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace pdg::cli
