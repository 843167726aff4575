#include "pdg/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "pdg/error.hpp"
#include "pdg/kernels.hpp"

namespace pdg {

// -------------------------------------------------------------- ChordDiagram

ChordDiagram ChordDiagram::from_word(std::vector<int> word) {
  if (word.size() % 2 != 0) {
    throw Error(ErrorCode::OddLength, "word has " + std::to_string(word.size()) + " endpoints");
  }
  std::map<int, int> occurrences;
  for (int label : word) {
    if (label < 1) throw Error(ErrorCode::InvalidToken, "label " + std::to_string(label) + " < 1");
    ++occurrences[label];
  }
  for (const auto& [label, count] : occurrences) {
    if (count != 2) {
      throw Error(ErrorCode::LabelCountNotTwo, "label " + std::to_string(label) + " occurs " +
                                                   std::to_string(count) + " times");
    }
  }
  return ChordDiagram(std::move(word));
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return from_json(j);
  }

  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) tokens.push_back(token);
  }
  const auto is_integer = [](const std::string& t) {
    return !t.empty() && t.size() <= 9 &&
           std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::vector<int> word;
  if (tokens.size() > 1 && std::all_of(tokens.begin(), tokens.end(), is_integer)) {
    for (const auto& t : tokens) word.push_back(std::stoi(t));
    return from_word(std::move(word));
  }

  std::string chars;
  for (const auto& t : tokens) chars += t;
  const bool digits_only = std::all_of(chars.begin(), chars.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  std::map<char, int> numbering;
  for (char c : chars) {
    if (digits_only) {
      word.push_back(c - '0');
    } else {
      if (!std::isgraph(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::InvalidToken, "unprintable character in diagram");
      }
      const auto [it, inserted] = numbering.emplace(c, static_cast<int>(numbering.size()) + 1);
      word.push_back(it->second);
    }
  }
  return from_word(std::move(word));
}

std::vector<int> ChordDiagram::labels() const {
  std::vector<int> out;
  for (int label : word_) {
    if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
  }
  return out;
}

std::vector<int> ChordDiagram::chord_at() const {
  const std::vector<int> order = labels();
  std::vector<int> out(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    out[i] = static_cast<int>(std::find(order.begin(), order.end(), word_[i]) - order.begin());
  }
  return out;
}

int ChordDiagram::chord_index(int label) const {
  const std::vector<int> order = labels();
  const auto it = std::find(order.begin(), order.end(), label);
  return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

std::string ChordDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

nlohmann::json ChordDiagram::to_json() const { return {{"word", word_}}; }

ChordDiagram ChordDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("word") || !j["word"].is_array()) {
    throw Error(ErrorCode::ParseError, "diagram JSON needs a \"word\" array");
  }
  std::vector<int> word;
  for (const auto& x : j["word"]) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidToken, "non-integer label " + x.dump());
    word.push_back(x.get<int>());
  }
  return from_word(std::move(word));
}

// ------------------------------------------------------- canonical forms etc.

ChordDiagram canonical_form(const ChordDiagram& d) {
  const auto& w = d.word();
  const std::size_t len = w.size();
  std::vector<int> best;
  std::vector<int> candidate(len);
  std::vector<int> relabel;
  int max_label = 0;
  for (int label : w) max_label = std::max(max_label, label);
  for (std::size_t r = 0; r < len; ++r) {
    relabel.assign(max_label + 1, 0);
    int next = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const int label = w[(r + i) % len];
      if (relabel[label] == 0) relabel[label] = ++next;
      candidate[i] = relabel[label];
    }
    if (best.empty() || candidate < best) best = candidate;
  }
  return ChordDiagram::from_word(std::move(best));
}

bool equivalent(const ChordDiagram& a, const ChordDiagram& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::vector<ChordDiagram> enumerate_diagrams(int n) { return kernels::serial::enumerate_diagrams(n); }

CombinatorialMap to_map(const ChordDiagram& d) {
  const auto& w = d.word();
  const int len = static_cast<int>(w.size());
  Permutation sigma(len);
  Permutation alpha(len, -1);
  for (int i = 0; i < len; ++i) {
    sigma[i] = (i + 1) % len;
    if (alpha[i] >= 0) continue;
    for (int j = i + 1; j < len; ++j) {
      if (w[j] == w[i]) {
        alpha[i] = j;
        alpha[j] = i;
        break;
      }
    }
  }
  return CombinatorialMap::make(std::move(sigma), std::move(alpha), d.labels());
}

// ------------------------------------------------------- MultiCircleDiagram

CombinatorialMap MultiCircleDiagram::to_map() const {
  int n = 0;
  for (const auto& c : circles) n += static_cast<int>(c.size());
  Permutation sigma(n, -1);
  for (const auto& circle : circles) {
    for (std::size_t i = 0; i < circle.size(); ++i) {
      const HalfEdge h = circle[i];
      if (h < 0 || h >= n || sigma[h] >= 0) {
        throw Error(ErrorCode::NotPermutation, "circles do not partition the half-edges");
      }
      sigma[h] = circle[(i + 1) % circle.size()];
    }
  }
  Permutation alpha(n, -1);
  for (const auto& [a, b] : pairing) {
    if (a < 0 || a >= n || b < 0 || b >= n || alpha[a] >= 0 || alpha[b] >= 0) {
      throw Error(ErrorCode::NotInvolution, "pairing is not an involution on the half-edges");
    }
    if (a == b) throw Error(ErrorCode::HasFixedPoint, "chord with a single end");
    alpha[a] = b;
    alpha[b] = a;
  }
  if (std::find(alpha.begin(), alpha.end(), -1) != alpha.end()) {
    throw Error(ErrorCode::HasFixedPoint, "half-edge without a chord");
  }
  CombinatorialMap raw = CombinatorialMap::make(sigma, alpha);
  // Carry the chord labels over to the map's edge order.
  std::vector<int> edge_labels(raw.edge_count());
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    edge_labels[raw.edge_of(pairing[i].first)] =
        i < labels.size() ? labels[i] : static_cast<int>(i) + 1;
  }
  return CombinatorialMap::make(std::move(sigma), std::move(alpha), std::move(edge_labels));
}

std::optional<ChordDiagram> MultiCircleDiagram::as_chord_diagram() const {
  if (circles.size() != 1) return std::nullopt;
  const CombinatorialMap map = to_map();
  std::vector<int> word;
  for (HalfEdge h : circles.front()) word.push_back(map.edge_labels()[map.edge_of(h)]);
  return ChordDiagram::from_word(std::move(word));
}

nlohmann::json MultiCircleDiagram::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : pairing) pairs.push_back({a, b});
  nlohmann::json sides = nlohmann::json::array();
  for (ChordSide s : side) sides.push_back(s == ChordSide::Inside ? "in" : "out");
  return {{"circles", circles}, {"pairing", pairs}, {"side", sides}, {"labels", labels}};
}

MultiCircleDiagram MultiCircleDiagram::from_json(const nlohmann::json& j) {
  MultiCircleDiagram d;
  try {
    d.circles = j.at("circles").get<std::vector<std::vector<HalfEdge>>>();
    for (const auto& p : j.at("pairing")) {
      if (p.size() != 2) throw Error(ErrorCode::ParseError, "pairing entries need two ends");
      d.pairing.emplace_back(p[0].get<HalfEdge>(), p[1].get<HalfEdge>());
    }
    if (j.contains("side")) {
      for (const auto& s : j.at("side")) {
        const auto text = s.get<std::string>();
        if (text != "in" && text != "out") throw Error(ErrorCode::ParseError, "side must be in/out");
        d.side.push_back(text == "in" ? ChordSide::Inside : ChordSide::Outside);
      }
    } else {
      d.side.assign(d.pairing.size(), ChordSide::Inside);
    }
    if (j.contains("labels")) {
      d.labels = j.at("labels").get<std::vector<int>>();
    } else {
      for (std::size_t i = 0; i < d.pairing.size(); ++i) d.labels.push_back(static_cast<int>(i) + 1);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (d.side.size() != d.pairing.size() || d.labels.size() != d.pairing.size()) {
    throw Error(ErrorCode::SizeMismatch, "side/labels must have one entry per chord");
  }
  (void)d.to_map();  // validates the structure
  return d;
}

MultiCircleDiagram from_map(const CombinatorialMap& map) {
  MultiCircleDiagram d;
  const int n = map.half_edge_count();
  std::vector<char> seen(n, 0);
  for (HalfEdge start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& circle = d.circles.emplace_back();
    for (HalfEdge h = start; !seen[h]; h = map.sigma()[h]) {
      seen[h] = 1;
      circle.push_back(h);
    }
  }
  for (int e = 0; e < map.edge_count(); ++e) d.pairing.push_back(map.ends(e));
  d.labels = map.edge_labels();
  d.side.assign(map.edge_count(), ChordSide::Inside);
  return d;
}

ChordDiagram diagram_of_one_vertex_map(const CombinatorialMap& map) {
  const MultiCircleDiagram d = from_map(map);
  if (d.circles.size() > 1) {
    throw Error(ErrorCode::SizeMismatch, "map has " + std::to_string(d.circles.size()) + " vertices");
  }
  if (d.circles.empty()) return {};
  return *d.as_chord_diagram();
}

// ---------------------------------------------------------------- products

ChordDiagram product(const ChordDiagram& d1, const ChordDiagram& d2, int cut1, int cut2) {
  const auto& w1 = d1.word();
  const auto& w2 = d2.word();
  const auto check = [](int cut, std::size_t len, const char* which) {
    if (cut < 0 || static_cast<std::size_t>(cut) > len) {
      throw Error(ErrorCode::CutOutOfRange, std::string(which) + " cut " + std::to_string(cut) +
                                                " outside [0, " + std::to_string(len) + "]");
    }
  };
  check(cut1, w1.size(), "first");
  check(cut2, w2.size(), "second");

  int shift = 0;
  for (int label : w1) shift = std::max(shift, label);
  std::vector<int> word;
  word.reserve(w1.size() + w2.size());
  for (std::size_t i = 0; i < w1.size(); ++i) word.push_back(w1[(cut1 + i) % w1.size()]);
  for (std::size_t i = 0; i < w2.size(); ++i) word.push_back(shift + w2[(cut2 + i) % w2.size()]);
  return ChordDiagram::from_word(std::move(word));
}

ChordDiagram caravan(int k, int g) {
  if (k < 0 || g < 0 || k + g < 1) {
    throw Error(ErrorCode::EmptyCaravan, "caravan needs k, g >= 0 and k + g >= 1");
  }
  std::vector<int> word;
  int label = 0;
  for (int i = 0; i < k; ++i) {
    ++label;
    word.insert(word.end(), {label, label});
  }
  for (int i = 0; i < g; ++i) {
    label += 2;
    word.insert(word.end(), {label - 1, label, label - 1, label});
  }
  return ChordDiagram::from_word(std::move(word));
}

// ---------------------------------------------------------- interlacement

InterlaceMatrix interlace_graph(const ChordDiagram& d) {
  const std::vector<int> chord = d.chord_at();
  const int n = d.order();
  std::vector<std::pair<int, int>> ends(n, {-1, -1});
  for (int i = 0; i < static_cast<int>(chord.size()); ++i) {
    auto& e = ends[chord[i]];
    (e.first < 0 ? e.first : e.second) = i;
  }
  InterlaceMatrix m(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto inside = [&](int p) { return ends[a].first < p && p < ends[a].second; };
      if (inside(ends[b].first) != inside(ends[b].second)) m[a][b] = m[b][a] = 1;
    }
  }
  return m;
}

std::vector<int> InterlaceSequence::counts() const {
  std::vector<int> out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string InterlaceSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "∨";
    out += '(';
    for (std::size_t j = 0; j < factors[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(factors[i][j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::vector<int> sorted_row_sums(const ChordDiagram& d) {
  std::vector<int> sums;
  for (const auto& row : interlace_graph(d)) {
    int s = 0;
    for (int x : row) s += x;
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

void split_prime_factors(const std::vector<int>& w, std::vector<ChordDiagram>& out) {
  const int len = static_cast<int>(w.size());
  if (len == 0) return;
  for (int arc = 2; arc < len; arc += 2) {
    for (int start = 0; start < len; ++start) {
      std::map<int, int> inside;
      for (int i = 0; i < arc; ++i) ++inside[w[(start + i) % len]];
      const bool closed = std::all_of(inside.begin(), inside.end(),
                                      [](const auto& kv) { return kv.second == 2; });
      if (!closed) continue;
      std::vector<int> factor;
      std::vector<int> rest;
      for (int i = 0; i < len; ++i) {
        const int pos = (start + i) % len;
        (i < arc ? factor : rest).push_back(w[pos]);
      }
      // A shortest closed arc cannot be split further.
      out.push_back(canonical_form(ChordDiagram::from_word(std::move(factor))));
      split_prime_factors(rest, out);
      return;
    }
  }
  out.push_back(canonical_form(ChordDiagram::from_word(w)));
}

}  // namespace

std::vector<ChordDiagram> join_decompose(const ChordDiagram& d) {
  std::vector<ChordDiagram> factors;
  split_prime_factors(d.word(), factors);
  std::sort(factors.begin(), factors.end(), [](const ChordDiagram& a, const ChordDiagram& b) {
    return std::pair(a.order(), a.word()) < std::pair(b.order(), b.word());
  });
  return factors;
}

InterlaceSequence interlace_sequence(const ChordDiagram& d) {
  InterlaceSequence seq;
  for (const auto& factor : join_decompose(d)) seq.factors.push_back(sorted_row_sums(factor));
  std::sort(seq.factors.begin(), seq.factors.end(), [](const auto& a, const auto& b) {
    return std::pair(a.size(), a) < std::pair(b.size(), b);
  });
  return seq;
}

// ---------------------------------------------------------- partial duality

MultiCircleDiagram partial_dual_diagram(const ChordDiagram& d, std::span<const int> chord_labels) {
  const CombinatorialMap map = to_map(d);
  EdgeSubset subset = EdgeSubset::none(map.edge_count());
  for (int label : chord_labels) {
    const int e = map.edge_with_label(label);
    if (e < 0) throw Error(ErrorCode::UnknownChord, "no chord labelled " + std::to_string(label));
    subset = subset.with(e);
  }
  MultiCircleDiagram out = from_map(partial_dual(map, subset));
  for (int e = 0; e < map.edge_count(); ++e) {
    if (subset.contains(e)) out.side[e] = ChordSide::Outside;
  }
  return out;
}

}  // namespace pdg
