// Command-line front end. Exit codes:
//   0 success, 1 usage or I/O error, 2 parse error, 3 no vertex cover within
//   --k-max, 4 resource cap exceeded, 5 verification mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xcr/clustering.hpp"
#include "xcr/drawing_io.hpp"
#include "xcr/embedding.hpp"
#include "xcr/graph.hpp"
#include "xcr/iqp.hpp"
#include "xcr/oracle.hpp"
#include "xcr/pipeline.hpp"
#include "xcr/svg.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCover = 3, kCap = 4, kMismatch = 5 };

struct CoverExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  xcr::CompressedGraph cg;
  std::optional<xcr::Graph> graph;  // edge-list inputs
  std::optional<xcr::VertexCover> cover;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Input load(const std::string& path, const std::string& format, int k_max) {
  std::istringstream in(slurp(path));
  Input input;
  if (format == "compressed") {
    input.cg = xcr::read_compressed(in);
    return input;
  }
  input.graph = xcr::read_edge_list(in);
  input.cover = xcr::find_vertex_cover(*input.graph, k_max);
  if (!input.cover)
    throw CoverExceeded("no vertex cover of size at most " + std::to_string(k_max));
  input.cg = xcr::compress(*input.graph, *input.cover);
  return input;
}

// Written next to the target and renamed, so a failed run leaves no partial
// file behind.
void write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

xcr::Graph concrete(const Input& in) { return in.graph ? *in.graph : xcr::expand(in.cg); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact crossing numbers for graphs with a small vertex cover"};
  std::string mode = "solve", input, format = "edge-list", out_report, out_drawing, out_svg;
  int k_max = 8, budget_cap = 0, verbosity = 0;
  std::uint64_t iqp_cap = 0, enum_cap = 0;
  bool seed_free = false;
  app.add_option("--mode", mode, "solve | oracle | verify | dump-clusterings")
      ->check(CLI::IsMember({"solve", "oracle", "verify", "dump-clusterings"}));
  app.add_option("--input,input", input, "input file, '-' for standard input")->required();
  app.add_option("--format", format, "edge-list | compressed")
      ->check(CLI::IsMember({"edge-list", "compressed"}));
  app.add_option("--k-max", k_max, "largest vertex cover searched")->check(CLI::Range(0, 31));
  app.add_option("--budget-cap", budget_cap, "most crossings per clustering (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--iqp-cap", iqp_cap, "search nodes per IQP instance (0: none)");
  app.add_option("--enum-cap", enum_cap, "embedding nodes per representative set (0: none)");
  app.add_option("--out-report", out_report, "JSON report");
  app.add_option("--out-drawing", out_drawing, "drawing in interchange format");
  app.add_option("--out-svg", out_svg, "SVG rendering of the drawing");
  app.add_flag("--seed-free", seed_free, "assert that no randomness is configured");
  app.add_flag("-v,--verbose", verbosity, "progress on standard error");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Input in = load(input, format, k_max);
    xcr::SolveOptions opts;
    opts.budget_cap = budget_cap;
    opts.iqp_node_cap = iqp_cap;
    opts.enum_node_cap = enum_cap;
    opts.lift = !out_drawing.empty() || !out_svg.empty() || mode == "verify";

    if (mode == "oracle") {
      std::cout << xcr::oracle_cr(concrete(in)) << '\n';
      return kOk;
    }

    if (mode == "dump-clusterings") {
      const int budget = budget_cap > 0 ? budget_cap : 2;
      std::ostringstream out;
      int piece = 0;
      for (const auto& [cover, sub] : xcr::split_components(in.cg)) {
        int index = 0;
        for (const auto& c : xcr::enumerate_clusterings(sub, budget, enum_cap)) {
          out << "clustering " << piece << ' ' << index++ << '\n';
          for (const auto& r : c.reps.reps) out << "rep " << r.mask << ' ' << r.rotation << '\n';
          xcr::write_drawing(out, c.drawing);
          xcr::write_iqp(out, xcr::build_iqp(c, sub));
        }
        ++piece;
      }
      std::cout << out.str();
      return kOk;
    }

    xcr::SolveReport report = xcr::crossing_number(in.cg, opts);
    if (verbosity > 0)
      std::cerr << "clusterings solved: " << report.clusterings << '\n';

    if (mode == "verify") {
      const xcr::VerifyResult v = xcr::verify(report, in.cg);
      std::cout << "pipeline=" << report.crossing_number << " oracle="
                << (v.oracle ? xcr::to_string(*v.oracle) : std::string("skipped")) << '\n';
      if (!v.ok) {
        std::cerr << "mismatch: " << v.message << '\n';
        return kMismatch;
      }
      return kOk;
    }

    std::optional<xcr::Drawing> drawing = report.drawing;
    if (drawing && in.graph)
      drawing = xcr::relabel(*drawing, xcr::expansion_map(*in.graph, *in.cover), *in.graph);
    if ((!out_drawing.empty() || !out_svg.empty()) && !drawing)
      std::cerr << "drawing too large to emit; skipped\n";
    if (!out_report.empty()) write_file(out_report, xcr::report_to_json(report));
    if (drawing && !out_drawing.empty()) write_file(out_drawing, xcr::drawing_to_string(*drawing));
    if (drawing && !out_svg.empty()) write_file(out_svg, xcr::render_svg(*drawing));
    std::cout << report.crossing_number << '\n';
    return kOk;
  } catch (const xcr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CoverExceeded& e) {
    std::cerr << e.what() << '\n';
    return kCover;
  } catch (const xcr::ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const xcr::OracleLimitExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
