#include "pdg/weight_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pdg/error.hpp"

namespace pdg {

namespace {

std::vector<IntPolynomial> run_genus_kernel(std::span<const ChordDiagram> diagrams, GenusPath path,
                                            Execution exec) {
  return exec == Execution::Parallel ? kernels::omp::genus_polynomials(diagrams, path)
                                     : kernels::serial::genus_polynomials(diagrams, path);
}

std::vector<ChordDiagram> run_enumeration(int n, Execution exec) {
  return exec == Execution::Parallel ? kernels::omp::enumerate_diagrams(n)
                                     : kernels::serial::enumerate_diagrams(n);
}

nlohmann::json quadruple_words(const FourTermQuadruple& q) {
  nlohmann::json words = nlohmann::json::array();
  for (const auto& d : q.diagrams) words.push_back(d.word());
  return words;
}

}  // namespace

// ------------------------------------------------------ genus polynomials

IntPolynomial pd_genus_polynomial(const CombinatorialMap& map, GenusPath path, Execution exec) {
  return exec == Execution::Parallel ? kernels::omp::genus_polynomial(map, path)
                                     : kernels::serial::genus_polynomial(map, path);
}

IntPolynomial pd_genus_polynomial(const ChordDiagram& d, GenusPath path, Execution exec) {
  return pd_genus_polynomial(to_map(d), path, exec);
}

std::vector<GenusPolynomialResult> pd_genus_polynomials(std::span<const ChordDiagram> diagrams,
                                                        GenusPath path, Execution exec) {
  const std::vector<IntPolynomial> values = run_genus_kernel(diagrams, path, exec);
  std::vector<GenusPolynomialResult> out;
  out.reserve(diagrams.size());
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    out.push_back({canonical_form(diagrams[i]), values[i],
                   std::uint64_t{1} << diagrams[i].order()});
  }
  return out;
}

// ------------------------------------------------------------ quadruples

bool FourTermQuadruple::degenerate() const {
  std::map<ChordDiagram, int> total;
  for (std::size_t i = 0; i < diagrams.size(); ++i) total[diagrams[i]] += kSigns[i];
  return std::all_of(total.begin(), total.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<FourTermQuadruple> generate_4T_quadruples(int n) {
  std::set<FourTermQuadruple> found;
  if (n < 2) return {};
  for (const ChordDiagram& d : kernels::serial::enumerate_diagrams(n)) {
    const std::vector<int>& w = d.word();
    const int len = static_cast<int>(w.size());
    for (int moving = 0; moving < len; ++moving) {
      const int a = w[moving];
      std::vector<int> rest;
      rest.reserve(len - 1);
      for (int i = 0; i < len; ++i) {
        if (i != moving) rest.push_back(w[i]);
      }
      const auto place = [&](int gap) {
        std::vector<int> out(rest.begin(), rest.begin() + gap);
        out.push_back(a);
        out.insert(out.end(), rest.begin() + gap, rest.end());
        return canonical_form(ChordDiagram::from_word(std::move(out)));
      };
      for (int b = 1; b <= n; ++b) {
        if (b == a) continue;
        int x = -1;
        int y = -1;
        for (int i = 0; i < len - 1; ++i) {
          if (rest[i] == b) (x < 0 ? x : y) = i;
        }
        FourTermQuadruple q{{place(x + 1), place(x), place(y + 1), place(y)}};
        if (std::pair(q.diagrams[2], q.diagrams[3]) < std::pair(q.diagrams[0], q.diagrams[1])) {
          std::swap(q.diagrams[0], q.diagrams[2]);
          std::swap(q.diagrams[1], q.diagrams[3]);
        }
        found.insert(std::move(q));
      }
    }
  }
  return {found.begin(), found.end()};
}

// --------------------------------------------------------------- check_4T

nlohmann::json FourTermReport::summary_json() const {
  return {{"n", n}, {"quadruples", quadruples}, {"violations", violations.size()}};
}

std::vector<nlohmann::json> FourTermReport::violation_lines() const {
  std::vector<nlohmann::json> lines;
  for (const auto& v : violations) {
    lines.push_back({{"quadruple", quadruple_words(v.quadruple)}, {"residual", v.residual.to_json()}});
  }
  return lines;
}

FourTermReport check_4T(const DiagramInvariant& invariant, int n, Execution exec) {
  const std::vector<FourTermQuadruple> quadruples = generate_4T_quadruples(n);
  std::vector<DiagramQuadruple> raw;
  raw.reserve(quadruples.size());
  for (const auto& q : quadruples) raw.push_back(q.diagrams);
  const std::vector<IntPolynomial> sums = exec == Execution::Parallel
                                              ? kernels::omp::alternating_sums(raw, invariant)
                                              : kernels::serial::alternating_sums(raw, invariant);
  FourTermReport report;
  report.n = n;
  report.quadruples = quadruples.size();
  for (std::size_t i = 0; i < quadruples.size(); ++i) {
    if (!sums[i].is_zero()) report.violations.push_back({quadruples[i], sums[i]});
  }
  return report;
}

// -------------------------------------------------------------- quotient

FourTermQuotient::FourTermQuotient(int n)
    : FourTermQuotient(n, kernels::serial::enumerate_diagrams(n), generate_4T_quadruples(n)) {}

FourTermQuotient::FourTermQuotient(int n, std::vector<ChordDiagram> diagrams,
                                   std::span<const FourTermQuadruple> relations)
    : n_(n), diagrams_(std::move(diagrams)), echelon_(static_cast<int>(diagrams_.size())) {
  std::sort(diagrams_.begin(), diagrams_.end());
  add_relations(relations);
}

void FourTermQuotient::add_relations(std::span<const FourTermQuadruple> relations) {
  for (const auto& q : relations) {
    if (echelon_.rank() == echelon_.cols()) break;
    if (q.degenerate()) continue;
    echelon_.add(relation_vector(q));
  }
}

int FourTermQuotient::index_of(const ChordDiagram& d) const {
  const ChordDiagram c = canonical_form(d);
  const auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), c);
  if (it == diagrams_.end() || *it != c) {
    throw Error(ErrorCode::UnknownChord, "diagram '" + d.to_string() + "' is not of order " +
                                             std::to_string(n_));
  }
  return static_cast<int>(it - diagrams_.begin());
}

std::vector<Rational> FourTermQuotient::relation_vector(const FourTermQuadruple& q) const {
  std::vector<Rational> v(diagrams_.size());
  for (std::size_t i = 0; i < q.diagrams.size(); ++i) v[index_of(q.diagrams[i])] += q.kSigns[i];
  return v;
}

std::vector<Rational> FourTermQuotient::express(const ChordDiagram& d,
                                                std::span<const ChordDiagram> basis) const {
  const int size = static_cast<int>(diagrams_.size());
  const auto unit = [&](const ChordDiagram& x) {
    std::vector<Rational> v(size);
    v[index_of(x)] = 1;
    return reduce(std::move(v));
  };
  RationalMatrix columns(size, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto v = unit(basis[j]);
    for (int i = 0; i < size; ++i) columns(i, static_cast<int>(j)) = v[i];
  }
  if (rank(columns) != static_cast<int>(basis.size())) {
    throw Error(ErrorCode::NotABasis, "basis is linearly dependent modulo the 4T relations");
  }
  const auto target = unit(d);
  auto solution = solve_in_span(columns, target);
  if (!solution) {
    throw Error(ErrorCode::NoSolution, "'" + d.to_string() + "' is outside the span of the basis");
  }
  return *solution;
}

int dim_quotient(int n) { return FourTermQuotient(n).dimension(); }

std::vector<Rational> express_modulo_4T(const ChordDiagram& d, std::span<const ChordDiagram> basis) {
  return FourTermQuotient(d.order()).express(d, basis);
}

// ------------------------------------------------------ multiplicativity

nlohmann::json MultiplicativityReport::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations) {
    v.push_back({{"first", x.first.word()},
                 {"second", x.second.word()},
                 {"cuts", {x.cut1, x.cut2}},
                 {"product", x.product_value.to_json()},
                 {"expected", x.expected.to_json()}});
  }
  return {{"n1", n1}, {"n2", n2}, {"products", products}, {"violations", violations.size()},
          {"details", v}};
}

MultiplicativityReport check_multiplicativity(int n1, int n2, Execution exec) {
  const std::vector<ChordDiagram> first = run_enumeration(n1, exec);
  const std::vector<ChordDiagram> second = run_enumeration(n2, exec);
  const std::vector<IntPolynomial> first_values = run_genus_kernel(first, GenusPath::Fast, exec);
  const std::vector<IntPolynomial> second_values = run_genus_kernel(second, GenusPath::Fast, exec);

  struct Task {
    std::size_t i, j;
    int cut1, cut2;
  };
  std::vector<Task> tasks;
  std::vector<ChordDiagram> products;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      for (int c1 = 0; c1 < std::max(1, 2 * n1); ++c1) {
        for (int c2 = 0; c2 < std::max(1, 2 * n2); ++c2) {
          tasks.push_back({i, j, c1, c2});
          products.push_back(product(first[i], second[j], c1, c2));
        }
      }
    }
  }
  const std::vector<IntPolynomial> values = run_genus_kernel(products, GenusPath::Fast, exec);

  MultiplicativityReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.products = tasks.size();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const Task& task = tasks[t];
    const IntPolynomial expected = first_values[task.i] * second_values[task.j];
    if (values[t] != expected) {
      report.violations.push_back(
          {first[task.i], second[task.j], task.cut1, task.cut2, values[t], expected});
    }
  }
  return report;
}

// ------------------------------------------------- intersection graphs

std::vector<int> graph_canonical_code(const InterlaceMatrix& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best;
  std::vector<int> code;
  do {
    code.clear();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) code.push_back(adjacency[order[a]][order[b]]);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(order.begin(), order.end()));
  best.insert(best.begin(), n);
  return best;
}

bool IntersectionClass::consistent() const {
  return std::all_of(values.begin(), values.end(),
                     [&](const IntPolynomial& v) { return v == values.front(); });
}

std::size_t IntersectionInvarianceReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const auto& c) { return !c.consistent(); }));
}

nlohmann::json IntersectionInvarianceReport::to_json() const {
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& c : classes) {
    if (c.consistent()) continue;
    nlohmann::json entry = nlohmann::json::array();
    for (std::size_t i = 0; i < c.diagrams.size(); ++i) {
      entry.push_back({{"word", c.diagrams[i].word()}, {"value", c.values[i].to_json()}});
    }
    bad.push_back(entry);
  }
  return {{"n", n}, {"classes", classes.size()}, {"violations", violations()}, {"details", bad}};
}

IntersectionInvarianceReport check_intersection_graph_invariance(int n, Execution exec) {
  const std::vector<ChordDiagram> diagrams = run_enumeration(n, exec);
  const std::vector<IntPolynomial> values = run_genus_kernel(diagrams, GenusPath::Fast, exec);
  std::map<std::vector<int>, IntersectionClass> groups;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    auto& group = groups[graph_canonical_code(interlace_graph(diagrams[i]))];
    group.diagrams.push_back(diagrams[i]);
    group.values.push_back(values[i]);
  }
  IntersectionInvarianceReport report;
  report.n = n;
  for (auto& [code, group] : groups) report.classes.push_back(std::move(group));
  return report;
}

}  // namespace pdg
