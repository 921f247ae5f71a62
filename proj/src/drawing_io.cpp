#include "xcr/drawing_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace xcr {

void write_drawing(std::ostream& out, const Drawing& d) {
  const Graph& g = d.graph;
  out << "drawing\n";
  out << "vertices " << g.vertex_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge(e).u << ' ' << g.edge(e).v;
    if (!d.weight.empty()) out << " weight " << d.weight[e];
    out << '\n';
  }
  for (const Crossing& x : d.crossings)
    out << "crossing " << x.e << ' ' << x.f << ' ' << (x.flipped ? 1 : 0) << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "sequence " << e;
    for (CrossingId c : d.sequence[e]) out << ' ' << c;
    out << '\n';
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rotation " << v;
    for (EdgeId e : d.rotation[v]) out << ' ' << e;
    out << '\n';
  }
  out << "end\n";
}

namespace {

int to_int(const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0 || v > 2'000'000'000) throw 0;
    return static_cast<int>(v);
  } catch (...) {
    throw ParseError("drawing: bad integer '" + tok + "'");
  }
}

}  // namespace

Drawing read_drawing(std::istream& in) {
  Drawing d;
  bool started = false, finished = false, weighted = false;
  std::vector<Count> weights;
  for (std::string line; !finished && std::getline(in, line);) {
    std::istringstream ss(line);
    std::vector<std::string> t;
    for (std::string tok; ss >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    if (!started) {
      if (t[0] != "drawing") throw ParseError("drawing: missing header");
      started = true;
      continue;
    }
    const std::string& kind = t[0];
    if (kind == "vertices" && t.size() == 2) {
      d.graph = Graph(to_int(t[1]));
      d.rotation.assign(d.graph.vertex_count(), {});
    } else if (kind == "edge" && (t.size() == 3 || t.size() == 5)) {
      try {
        d.graph.add_edge(to_int(t[1]), to_int(t[2]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("drawing: ") + e.what());
      }
      if (t.size() == 5) {
        if (t[3] != "weight") throw ParseError("drawing: expected 'weight'");
        weighted = true;
        weights.push_back(parse_count(t[4]));
      } else {
        weights.push_back(1);
      }
      d.sequence.emplace_back();
    } else if (kind == "crossing" && t.size() == 4) {
      const int flag = to_int(t[3]);
      if (flag > 1) throw ParseError("drawing: flipped flag must be 0 or 1");
      d.crossings.push_back({to_int(t[1]), to_int(t[2]), flag == 1});
    } else if (kind == "sequence" && t.size() >= 2) {
      const int e = to_int(t[1]);
      if (e >= d.graph.edge_count()) throw ParseError("drawing: unknown edge");
      for (std::size_t i = 2; i < t.size(); ++i) d.sequence[e].push_back(to_int(t[i]));
    } else if (kind == "rotation" && t.size() >= 2) {
      const int v = to_int(t[1]);
      if (v >= d.graph.vertex_count()) throw ParseError("drawing: unknown vertex");
      for (std::size_t i = 2; i < t.size(); ++i) d.rotation[v].push_back(to_int(t[i]));
    } else if (kind == "end") {
      finished = true;
    } else {
      throw ParseError("drawing: unexpected line '" + line + "'");
    }
  }
  if (!finished) throw ParseError("drawing: missing 'end'");
  if (weighted) d.weight = std::move(weights);
  return d;
}

std::string drawing_to_string(const Drawing& d) {
  std::ostringstream out;
  write_drawing(out, d);
  return out.str();
}

Drawing drawing_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_drawing(in);
}

}  // namespace xcr
