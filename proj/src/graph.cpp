#include "xcr/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace xcr {

Count parse_count(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError("not a nonnegative integer: '" + text + "'");
  }
  return Count(text);
}

Graph::Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : incident_(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

VertexId Graph::add_vertex() {
  incident_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop");
  if (a > b) std::swap(a, b);
  if (lookup_.count({a, b})) throw std::invalid_argument("repeated edge");
  const EdgeId id = edge_count();
  edges_.push_back({a, b});
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  lookup_[{a, b}] = id;
  return id;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = lookup_.find({a, b});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident_[v]) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<int> comp(vertex_count(), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexId> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (EdgeId e : incident_[members[i]]) {
        VertexId w = edges_[e].other(members[i]);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& x) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

// Decides vertices in id order, trying "include" first, so the first cover
// found of a given size is the lexicographically least one.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, int budget)
      : g_(g), budget_(budget), state_(g.vertex_count(), kUndecided) {}

  std::optional<std::vector<VertexId>> run() {
    if (descend(0, 0)) {
      std::vector<VertexId> out;
      for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (state_[v] == kIn) out.push_back(v);
      return out;
    }
    return std::nullopt;
  }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  bool descend(VertexId v, int used) {
    if (used > budget_) return false;
    if (v == g_.vertex_count()) return true;
    if (state_[v] != kUndecided) return descend(v + 1, used);

    bool forced_in = false;
    bool useful = false;
    for (VertexId w : g_.neighbors(v)) {
      if (state_[w] == kOut) forced_in = true;
      if (state_[w] == kUndecided) useful = true;
    }
    if (forced_in || useful) {
      state_[v] = kIn;
      if (descend(v + 1, used + 1)) return true;
      state_[v] = kUndecided;
    }
    if (forced_in) return false;

    // Excluding v forces every undecided neighbour into the cover.
    std::vector<VertexId> forced;
    for (VertexId w : g_.neighbors(v))
      if (state_[w] == kUndecided) forced.push_back(w);
    state_[v] = kOut;
    for (VertexId w : forced) state_[w] = kIn;
    const bool ok = descend(v + 1, used + static_cast<int>(forced.size()));
    if (ok) return true;
    for (VertexId w : forced) state_[w] = kUndecided;
    state_[v] = kUndecided;
    return false;
  }

  const Graph& g_;
  int budget_;
  std::vector<char> state_;
};

}  // namespace

std::optional<VertexCover> find_vertex_cover(const Graph& g, int k_max) {
  for (int k = 0; k <= k_max; ++k) {
    if (auto found = CoverSearch(g, k).run()) return VertexCover{*found};
  }
  return std::nullopt;
}

std::vector<std::uint32_t> CompressedGraph::present() const {
  std::vector<std::uint32_t> out;
  for (const auto& [mask, c] : h)
    if (c > 0) out.push_back(mask);
  return out;
}

Count CompressedGraph::outside_vertices() const {
  Count total = 0;
  for (const auto& [mask, c] : h) total += c;
  return total;
}

CompressedGraph compress(const Graph& g, const VertexCover& x) {
  if (!is_vertex_cover(g, x.vertices))
    throw std::invalid_argument("compress: not a vertex cover");
  if (x.size() > 31) throw std::invalid_argument("compress: cover too large");
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < x.size(); ++i) index[x.vertices[i]] = i;

  CompressedGraph cg;
  cg.k = x.size();
  cg.cover_graph = Graph(cg.k);
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0)
      cg.cover_graph.add_edge(index[e.u], index[e.v]);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[v] >= 0) continue;
    std::uint32_t mask = 0;
    for (VertexId w : g.neighbors(v)) mask |= 1u << index[w];
    cg.h[mask] += 1;
  }
  return cg;
}

Graph expand(const CompressedGraph& cg) {
  if (cg.outside_vertices() + cg.k > kExpandLimit)
    throw std::length_error("expand: graph too large to materialise");
  Graph g(cg.k);
  for (const Edge& e : cg.cover_graph.edges()) g.add_edge(e.u, e.v);
  for (const auto& [mask, c] : cg.h) {
    const auto n = static_cast<std::int64_t>(c);
    for (std::int64_t i = 0; i < n; ++i) {
      VertexId v = g.add_vertex();
      for (int b = 0; b < cg.k; ++b)
        if (mask >> b & 1u) g.add_edge(b, v);
    }
  }
  return g;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

int parse_int(const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0 || v > 100'000'000) throw 0;
    return static_cast<int>(v);
  } catch (...) {
    throw ParseError("bad integer '" + tok + "'");
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> pairs;
  int declared = -1;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto t = tokens(strip_comment(line));
    if (t.empty()) continue;
    if (t.size() == 2 && t[0] == "n") {
      declared = parse_int(t[1]);
      continue;
    }
    if (t.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    pairs.emplace_back(parse_int(t[0]), parse_int(t[1]));
  }
  int n = std::max(declared, 0);
  for (auto [a, b] : pairs) n = std::max({n, a + 1, b + 1});
  if (declared >= 0 && n > declared)
    throw ParseError("vertex id exceeds declared vertex count");
  Graph g(n);
  for (auto [a, b] : pairs) {
    try {
      g.add_edge(a, b);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("edge list: ") + e.what());
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

CompressedGraph read_compressed(std::istream& in) {
  CompressedGraph cg;
  bool have_k = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto t = tokens(strip_comment(line));
    if (t.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_k) {
      if (t.size() != 1) throw ParseError(where + "expected cover size k");
      cg.k = parse_int(t[0]);
      if (cg.k > 31) throw ParseError(where + "cover size above 31");
      cg.cover_graph = Graph(cg.k);
      have_k = true;
    } else if (t[0] == "gx" && t.size() == 3) {
      try {
        cg.cover_graph.add_edge(parse_int(t[1]), parse_int(t[2]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(where + e.what());
      }
    } else if (t[0] == "h" && t.size() == 3) {
      const Count mc = parse_count(t[1]);
      if ((mc >> cg.k) != 0) throw ParseError(where + "bitmask outside the cover");
      const auto mask = static_cast<std::uint32_t>(mc);
      Count c = parse_count(t[2]);
      if (cg.h.count(mask)) throw ParseError(where + "repeated bitmask");
      if (c > 0) cg.h[mask] = c;
    } else {
      throw ParseError(where + "expected 'gx u v' or 'h <bitmask> <count>'");
    }
  }
  if (!have_k) throw ParseError("empty compressed input");
  return cg;
}

void write_compressed(std::ostream& out, const CompressedGraph& cg) {
  out << cg.k << '\n';
  for (const Edge& e : cg.cover_graph.edges())
    out << "gx " << e.u << ' ' << e.v << '\n';
  for (const auto& [mask, c] : cg.h)
    if (c > 0) out << "h " << mask << ' ' << c << '\n';
}

}  // namespace xcr
