#include "pdg/combinatorial_map.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <sstream>

#include "pdg/error.hpp"

namespace pdg {

// ---------------------------------------------------------------- EdgeSubset

EdgeSubset::EdgeSubset(std::uint64_t mask, int width) : mask_(mask), width_(width) {
  if (width < 0 || width > kMaxSubsetEdges) {
    throw Error(ErrorCode::EdgeOutOfRange, "subset width " + std::to_string(width) +
                                               " exceeds " + std::to_string(kMaxSubsetEdges));
  }
  if (width < kMaxSubsetEdges && (mask >> width) != 0) {
    throw Error(ErrorCode::EdgeOutOfRange, "subset mask has bits beyond width " +
                                               std::to_string(width));
  }
}

EdgeSubset EdgeSubset::all(int width) {
  const std::uint64_t mask = width >= kMaxSubsetEdges ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << width) - 1;
  return {mask, width};
}

EdgeSubset EdgeSubset::of(std::initializer_list<int> edges, int width) {
  EdgeSubset s = none(width);
  for (int e : edges) s = s.with(e);
  return s;
}

int EdgeSubset::size() const noexcept { return std::popcount(mask_); }

EdgeSubset EdgeSubset::with(int edge) const {
  if (edge < 0 || edge >= width_) {
    throw Error(ErrorCode::EdgeOutOfRange, "edge " + std::to_string(edge) +
                                               " outside [0, " + std::to_string(width_) + ")");
  }
  return {mask_ | (std::uint64_t{1} << edge), width_};
}

EdgeSubset EdgeSubset::complement() const { return {~mask_ & all(width_).mask(), width_}; }

EdgeSubset EdgeSubset::operator^(const EdgeSubset& other) const {
  if (other.width_ != width_) {
    throw Error(ErrorCode::SizeMismatch, "subsets of different widths");
  }
  return {mask_ ^ other.mask_, width_};
}

// ---------------------------------------------------------- CombinatorialMap

namespace {

void check_permutation(const Permutation& p, const char* name) {
  std::vector<char> hit(p.size(), 0);
  for (HalfEdge x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[x]) {
      throw Error(ErrorCode::NotPermutation, std::string(name) + " is not a permutation");
    }
    hit[x] = 1;
  }
}

}  // namespace

CombinatorialMap CombinatorialMap::make(Permutation sigma, Permutation alpha) {
  return make(std::move(sigma), std::move(alpha), {});
}

CombinatorialMap CombinatorialMap::make(Permutation sigma, Permutation alpha,
                                        std::vector<int> edge_labels) {
  if (sigma.size() != alpha.size()) {
    throw Error(ErrorCode::SizeMismatch, "sigma acts on " + std::to_string(sigma.size()) +
                                             " half-edges, alpha on " +
                                             std::to_string(alpha.size()));
  }
  check_permutation(sigma, "sigma");
  check_permutation(alpha, "alpha");
  const int n = static_cast<int>(alpha.size());
  for (int h = 0; h < n; ++h) {
    if (alpha[alpha[h]] != h) {
      throw Error(ErrorCode::NotInvolution, "alpha(alpha(" + std::to_string(h) + ")) != " +
                                                std::to_string(h));
    }
    if (alpha[h] == h) {
      throw Error(ErrorCode::HasFixedPoint, "alpha fixes half-edge " + std::to_string(h));
    }
  }

  CombinatorialMap map;
  map.sigma_ = std::move(sigma);
  map.alpha_ = std::move(alpha);
  map.edge_of_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (map.edge_of_[h] >= 0) continue;
    const int e = static_cast<int>(map.ends_.size());
    map.edge_of_[h] = map.edge_of_[map.alpha_[h]] = e;
    map.ends_.emplace_back(h, map.alpha_[h]);
  }
  if (edge_labels.empty()) {
    edge_labels.resize(map.ends_.size());
    for (std::size_t i = 0; i < edge_labels.size(); ++i) edge_labels[i] = static_cast<int>(i) + 1;
  } else if (edge_labels.size() != map.ends_.size()) {
    throw Error(ErrorCode::SizeMismatch, "edge label count differs from edge count");
  }
  map.edge_labels_ = std::move(edge_labels);
  return map;
}

int CombinatorialMap::edge_with_label(int label) const {
  const auto it = std::find(edge_labels_.begin(), edge_labels_.end(), label);
  return it == edge_labels_.end() ? -1 : static_cast<int>(it - edge_labels_.begin());
}

Permutation CombinatorialMap::face_permutation() const {
  Permutation phi(sigma_.size());
  for (std::size_t h = 0; h < sigma_.size(); ++h) phi[h] = sigma_[alpha_[h]];
  return phi;
}

// ------------------------------------------------------------------ counting

namespace {

// Orbits of h -> sigma(alpha(h)) when the edge of h is in `mask`, and of
// h -> sigma(h) otherwise.
int count_twisted_cycles(const CombinatorialMap& map, std::uint64_t mask) {
  const auto& sigma = map.sigma();
  const auto& alpha = map.alpha();
  const int n = map.half_edge_count();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int h = start; !seen[h];) {
      seen[h] = 1;
      h = ((mask >> map.edge_of(h)) & 1U) ? sigma[alpha[h]] : sigma[h];
    }
  }
  return cycles;
}

int count_components(const CombinatorialMap& map) {
  const int n = map.half_edge_count();
  std::vector<char> seen(n, 0);
  std::vector<HalfEdge> stack;
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const HalfEdge h = stack.back();
      stack.pop_back();
      for (HalfEdge next : {map.sigma()[h], map.alpha()[h]}) {
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
  }
  return components;
}

int genus_from_counts(int v, int e, int f, int c) {
  const int defect = 2 * c - (v - e + f);
  if (defect < 0 || defect % 2 != 0) {
    throw Error(ErrorCode::OddEulerDefect, "2c - (v - e + f) = " + std::to_string(defect));
  }
  return defect / 2;
}

void check_subset(const CombinatorialMap& map, const EdgeSubset& subset) {
  if (map.edge_count() > kMaxSubsetEdges) {
    throw Error(ErrorCode::EdgeOutOfRange, "subset operations support at most " +
                                               std::to_string(kMaxSubsetEdges) + " edges");
  }
  if (subset.width() > map.edge_count() ||
      (subset.width() < kMaxSubsetEdges && (subset.mask() >> map.edge_count()) != 0)) {
    throw Error(ErrorCode::EdgeOutOfRange, "subset references edges beyond " +
                                               std::to_string(map.edge_count()));
  }
}

}  // namespace

int count_cycles(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto h = static_cast<HalfEdge>(start); !seen[h]; h = p[h]) seen[h] = 1;
  }
  return cycles;
}

MapCounts counts(const CombinatorialMap& map) {
  return {count_cycles(map.sigma()), map.edge_count(), count_cycles(map.face_permutation()),
          count_components(map)};
}

int genus(const CombinatorialMap& map) {
  const MapCounts c = counts(map);
  return genus_from_counts(c.vertices, c.edges, c.faces, c.components);
}

int spanning_boundary_count(const CombinatorialMap& map, const EdgeSubset& subset) {
  check_subset(map, subset);
  return count_twisted_cycles(map, subset.mask());
}

int genus_of_partial_dual_fast(const CombinatorialMap& map, const EdgeSubset& subset) {
  check_subset(map, subset);
  const int e = map.edge_count();
  const std::uint64_t full = EdgeSubset::all(e).mask();
  const int v = count_twisted_cycles(map, subset.mask());
  const int f = count_twisted_cycles(map, ~subset.mask() & full);
  return genus_from_counts(v, e, f, count_components(map));
}

// ------------------------------------------------------------------- duality

CombinatorialMap partial_dual(const CombinatorialMap& map, const EdgeSubset& subset) {
  check_subset(map, subset);
  Permutation sigma = map.sigma();
  for (int h = 0; h < map.half_edge_count(); ++h) {
    if (subset.contains(map.edge_of(h))) sigma[h] = map.sigma()[map.alpha()[h]];
  }
  return CombinatorialMap::make(std::move(sigma), map.alpha(), map.edge_labels());
}

CombinatorialMap partial_dual_stepwise(const CombinatorialMap& map, const EdgeSubset& subset) {
  check_subset(map, subset);
  const int n = map.half_edge_count();
  // Points on the vertex boundary curves: 2h is where the marked segment of
  // half-edge h begins, 2h + 1 where it ends (counterclockwise).
  std::vector<int> next(2 * n);
  std::vector<int> segment_start(n);
  std::vector<int> segment_end(n);
  for (HalfEdge h = 0; h < n; ++h) {
    next[2 * h] = 2 * h + 1;
    next[2 * h + 1] = 2 * map.sigma()[h];
    segment_start[h] = 2 * h;
    segment_end[h] = 2 * h + 1;
  }

  for (int e = 0; e < map.edge_count(); ++e) {
    if (!subset.contains(e)) continue;
    const auto [a, b] = map.ends(e);
    // The ribbon meets the curves along segments a and b. Replace those by
    // the two long sides of the ribbon: side one runs from the start of a to
    // the end of b, side two from the start of b to the end of a.
    const int a_start = segment_start[a];
    const int a_end = segment_end[a];
    const int b_start = segment_start[b];
    const int b_end = segment_end[b];
    next[a_start] = b_end;
    next[b_start] = a_end;
    // The long sides become the attaching segments of the dual ribbon.
    segment_end[a] = b_end;
    segment_end[b] = a_end;
  }

  // Read the rotation back off the curves: after the segment of h the curve
  // runs along a vertex arc to the start of the next segment.
  std::vector<HalfEdge> owner_of_start(2 * n, -1);
  for (HalfEdge h = 0; h < n; ++h) owner_of_start[segment_start[h]] = h;
  Permutation sigma(n);
  for (HalfEdge h = 0; h < n; ++h) sigma[h] = owner_of_start[next[segment_end[h]]];
  return CombinatorialMap::make(std::move(sigma), map.alpha(), map.edge_labels());
}

CombinatorialMap euler_dual(const CombinatorialMap& map) {
  return partial_dual(map, EdgeSubset::all(map.edge_count()));
}

// --------------------------------------------------------------------- slide

CombinatorialMap slide(const CombinatorialMap& map, HalfEdge moving, int along_edge) {
  const int n = map.half_edge_count();
  if (along_edge < 0 || along_edge >= map.edge_count()) {
    throw Error(ErrorCode::EdgeOutOfRange, "edge " + std::to_string(along_edge));
  }
  if (moving < 0 || moving >= n) {
    throw Error(ErrorCode::NotAdjacent, "half-edge " + std::to_string(moving) + " does not exist");
  }
  if (map.edge_of(moving) == along_edge) {
    throw Error(ErrorCode::NotAdjacent, "cannot slide an edge along itself");
  }
  Permutation s = map.sigma();
  const HalfEdge succ = s[moving];
  HalfEdge pred = 0;
  while (s[pred] != moving) ++pred;

  const auto unlink = [&] { s[pred] = s[moving]; };
  if (map.edge_of(succ) == along_edge) {
    // `moving` sits just before `succ`; it comes out just after the far end.
    const HalfEdge far = map.alpha()[succ];
    unlink();
    s[moving] = s[far];
    s[far] = moving;
  } else if (map.edge_of(pred) == along_edge) {
    // `moving` sits just after `pred`; it comes out just before the far end.
    const HalfEdge far = map.alpha()[pred];
    unlink();
    HalfEdge before = 0;
    while (s[before] != far) ++before;
    s[before] = moving;
    s[moving] = far;
  } else {
    throw Error(ErrorCode::NotAdjacent, "half-edge " + std::to_string(moving) +
                                            " is not next to an end of edge " +
                                            std::to_string(along_edge));
  }
  return CombinatorialMap::make(std::move(s), map.alpha(), map.edge_labels());
}

// --------------------------------------------------------------- isomorphism

std::vector<int> canonical_code(const CombinatorialMap& map) {
  const int n = map.half_edge_count();
  std::vector<int> component(n, -1);
  std::vector<std::vector<HalfEdge>> members;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<HalfEdge> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const HalfEdge h = stack.back();
      stack.pop_back();
      members[id].push_back(h);
      for (HalfEdge next : {map.sigma()[h], map.alpha()[h]}) {
        if (component[next] < 0) {
          component[next] = id;
          stack.push_back(next);
        }
      }
    }
  }

  std::vector<std::vector<int>> codes;
  std::vector<int> label(n, -1);
  std::vector<HalfEdge> order;
  for (const auto& comp : members) {
    std::vector<int> best;
    for (HalfEdge start : comp) {
      for (HalfEdge h : comp) label[h] = -1;
      order.assign(1, start);
      label[start] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (HalfEdge next : {map.sigma()[order[i]], map.alpha()[order[i]]}) {
          if (label[next] < 0) {
            label[next] = static_cast<int>(order.size());
            order.push_back(next);
          }
        }
      }
      std::vector<int> code;
      code.reserve(2 * order.size());
      for (HalfEdge h : order) {
        code.push_back(label[map.sigma()[h]]);
        code.push_back(label[map.alpha()[h]]);
      }
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());

  std::vector<int> out;
  for (const auto& code : codes) {
    out.push_back(static_cast<int>(code.size()));
    out.insert(out.end(), code.begin(), code.end());
  }
  return out;
}

bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  return a.half_edge_count() == b.half_edge_count() && counts(a) == counts(b) &&
         canonical_code(a) == canonical_code(b);
}

// --------------------------------------------------------------- text format

namespace {

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in cycle notation '" + std::string(text) + "'");
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == '(') {
      ++i;
      std::vector<int> cycle;
      while (true) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                   text[i] == ',')) {
          ++i;
        }
        if (i >= text.size()) fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          if (value > 1'000'000) fail("half-edge index too large");
          ++i;
        }
        cycle.push_back(value);
      }
      if (cycle.empty()) fail("empty cycle");
      cycles.push_back(std::move(cycle));
    } else {
      fail("unexpected character");
    }
  }
  return cycles;
}

Permutation cycles_to_permutation(const std::vector<std::vector<int>>& cycles, int size) {
  Permutation p(size);
  for (int i = 0; i < size; ++i) p[i] = i;
  std::vector<char> used(size, 0);
  for (const auto& cycle : cycles) {
    // (k k ... k) is read as the fixed point k.
    if (std::all_of(cycle.begin(), cycle.end(), [&](int x) { return x == cycle.front(); })) {
      if (used[cycle.front()]) {
        throw Error(ErrorCode::NotPermutation, "half-edge listed twice");
      }
      used[cycle.front()] = 1;
      continue;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int x = cycle[j];
      if (used[x]) throw Error(ErrorCode::NotPermutation, "half-edge listed twice");
      used[x] = 1;
      p[x] = cycle[(j + 1) % cycle.size()];
    }
  }
  return p;
}

}  // namespace

CombinatorialMap parse_map(std::string_view text) {
  std::optional<std::vector<std::vector<int>>> sigma;
  std::optional<std::vector<std::vector<int>>> alpha;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error(ErrorCode::ParseError, "expected 'sigma:' or 'alpha:' in '" + line + "'");
    }
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              key.end());
    auto cycles = parse_cycles(std::string_view(line).substr(colon + 1));
    if (key == "sigma") {
      sigma = std::move(cycles);
    } else if (key == "alpha") {
      alpha = std::move(cycles);
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  }
  if (!sigma || !alpha) throw Error(ErrorCode::ParseError, "need both sigma and alpha lines");

  int size = 0;
  for (const auto* cycles : {&*sigma, &*alpha}) {
    for (const auto& cycle : *cycles) {
      for (int x : cycle) size = std::max(size, x + 1);
    }
  }
  return CombinatorialMap::make(cycles_to_permutation(*sigma, size),
                                cycles_to_permutation(*alpha, size));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    out += '(';
    bool first = true;
    for (auto h = static_cast<HalfEdge>(start); !seen[h]; h = p[h]) {
      seen[h] = 1;
      if (!first) out += ' ';
      out += std::to_string(h);
      first = false;
    }
    out += ')';
  }
  return out;
}

std::string format_map(const CombinatorialMap& map) {
  return "sigma: " + format_cycles(map.sigma()) + "\nalpha: " + format_cycles(map.alpha()) + "\n";
}

}  // namespace pdg
