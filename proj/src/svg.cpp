#include "xcr/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace xcr {

namespace {

constexpr double kRadius = 100.0;
constexpr double kGap = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const Planarization p = planarize(d);
  const int n = p.vertex_count();
  std::vector<double> x(n, 0), y(n, 0);

  // Longest face per component becomes its outer boundary.
  std::vector<int> outer(p.component_count, -1);
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const int c = p.component[p.faces[f].front()];
    if (outer[c] < 0 || p.faces[f].size() > p.faces[outer[c]].size()) outer[c] = static_cast<int>(f);
  }
  for (int c = 0; c < p.component_count; ++c) {
    const double cx = c * (2 * kRadius + kGap) + kRadius + kGap / 2;
    const double cy = kRadius + kGap / 2;
    std::vector<char> fixed(n, 0);
    std::vector<VertexId> ring;
    if (outer[c] >= 0)
      for (VertexId v : p.faces[outer[c]])
        if (!fixed[v]) {
          fixed[v] = 1;
          ring.push_back(v);
        }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
      x[ring[i]] = cx + kRadius * std::sin(a);
      y[ring[i]] = cy - kRadius * std::cos(a);
    }
    std::vector<VertexId> inner;
    std::map<VertexId, int> slot;
    for (VertexId v = 0; v < n; ++v)
      if (p.component[v] == c && !fixed[v]) {
        slot[v] = static_cast<int>(inner.size());
        inner.push_back(v);
      }
    if (inner.empty()) continue;
    if (ring.empty()) {
      x[inner[0]] = cx;
      y[inner[0]] = cy;
      continue;
    }
    // Every inner vertex at the average of its neighbours.
    const int m = static_cast<int>(inner.size());
    Eigen::SparseMatrix<double> a(m, m);
    std::vector<Eigen::Triplet<double>> t;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
      const auto& nb = p.rotation[inner[i]];
      t.emplace_back(i, i, static_cast<double>(nb.size()));
      for (VertexId w : nb) {
        if (fixed[w]) {
          bx[i] += x[w];
          by[i] += y[w];
        } else {
          t.emplace_back(i, slot.at(w), -1.0);
        }
      }
    }
    a.setFromTriplets(t.begin(), t.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw std::runtime_error("svg: layout system is singular");
    const Eigen::VectorXd sx = lu.solve(bx), sy = lu.solve(by);
    for (int i = 0; i < m; ++i) {
      x[inner[i]] = sx[i];
      y[inner[i]] = sy[i];
    }
  }

  const double width = std::max(1, p.component_count) * (2 * kRadius + kGap);
  const double height = 2 * kRadius + kGap;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
                    "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + ' ' +
                    fmt(height) + "\">\n";
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& path : p.edge_path)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      out += "<line x1=\"" + fmt(x[path[i]]) + "\" y1=\"" + fmt(y[path[i]]) + "\" x2=\"" +
             fmt(x[path[i + 1]]) + "\" y2=\"" + fmt(y[path[i + 1]]) + "\"/>\n";
  out += "</g>\n";
  for (VertexId v = 0; v < n; ++v) {
    if (p.is_dummy(v)) {
      out += "<circle class=\"crossing\" cx=\"" + fmt(x[v]) + "\" cy=\"" + fmt(y[v]) +
             "\" r=\"2\" fill=\"red\"/>\n";
    } else {
      out += "<circle class=\"vertex\" cx=\"" + fmt(x[v]) + "\" cy=\"" + fmt(y[v]) +
             "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
      out += "<text x=\"" + fmt(x[v] + 5) + "\" y=\"" + fmt(y[v] - 5) + "\" font-size=\"8\">" +
             std::to_string(v) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const Drawing& d, const std::string& path) {
  const std::string text = render_svg(d);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace xcr
