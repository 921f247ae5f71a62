#include "xcr/iqp.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "xcr/embedding.hpp"

namespace xcr {

std::vector<int> IqpInstance::group_of() const {
  std::vector<int> out;
  for (int g = 0; g < group_count(); ++g) out.insert(out.end(), group_size[g], g);
  return out;
}

IqpInstance build_iqp(const AbstractClustering& c, const CompressedGraph& cg) {
  IqpInstance inst;
  const auto& reps = c.reps.reps;
  const int n = static_cast<int>(reps.size());
  for (int i = 0; i < n; ++i) {
    if (i == 0 || reps[i].mask != reps[i - 1].mask) {
      inst.group_size.push_back(0);
      inst.h.push_back(cg.count(reps[i].mask));
    }
    ++inst.group_size.back();
  }
  inst.q.assign(n, std::vector<std::int64_t>(n, 0));
  inst.p.assign(n, 0);
  for (int i = 0; i < n; ++i) inst.q[i][i] = zee(std::popcount(reps[i].mask));

  const Graph& g = c.drawing.graph;
  auto owner = [&](EdgeId e) { return g.edge(e).v >= c.k ? g.edge(e).v - c.k : -1; };
  for (const Crossing& x : c.drawing.crossings) {
    const int a = owner(x.e);
    const int b = owner(x.f);
    if (a < 0 && b < 0) {
      ++inst.r;
    } else if (a < 0 || b < 0) {
      ++inst.p[a < 0 ? b : a];
    } else {
      ++inst.q[a][b];
      ++inst.q[b][a];
    }
  }
  return inst;
}

Count objective(const IqpInstance& inst, const std::vector<Count>& z) {
  Count f = 0;
  for (int a = 0; a < inst.size(); ++a) {
    Count row = 0;
    for (int b = 0; b < inst.size(); ++b) row += inst.q[a][b] * z[b];
    f += z[a] * (row + 2 * inst.p[a]);
  }
  return f;
}

Count true_value(const IqpInstance& inst, const std::vector<Count>& z) {
  Count t = inst.r;
  for (int a = 0; a < inst.size(); ++a) {
    t += inst.p[a] * z[a] + choose2(z[a]) * inst.q[a][a];
    for (int b = a + 1; b < inst.size(); ++b) t += inst.q[a][b] * z[a] * z[b];
  }
  return t;
}

namespace {

Count floor_div(const Count& a, const Count& b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Depth-first search over the free indices (every index but the last of its
// group, whose value is then forced). Values are tried in ascending order so
// the first optimum found is the lexicographically least.
class Solver {
 public:
  Solver(const IqpInstance& inst, const IqpOptions& opt) : inst_(inst), cap_(opt.node_cap) {
    const int n = inst.size();
    lower_ = opt.lower.empty() ? std::vector<Count>(n, 0) : opt.lower;
    if (static_cast<int>(lower_.size()) != n) throw std::invalid_argument("iqp: bad lower bounds");
    z_.assign(n, 0);
    grad_.assign(n, 0);
    for (int a = 0; a < n; ++a) grad_[a] = inst.p[a];
    int start = 0;
    for (int g = 0; g < inst.group_count(); ++g) {
      const int size = inst.group_size[g];
      Group grp{start, size, inst.h[g], 0};
      for (int j = 0; j < size; ++j) grp.lower_rest += lower_[start + j];
      if (grp.lower_rest > grp.remaining) throw std::invalid_argument("iqp: infeasible lower bounds");
      groups_.push_back(grp);
      for (int j = 0; j + 1 < size; ++j) free_.push_back({start + j, g});
      start += size;
    }
    if (start != n) throw std::invalid_argument("iqp: group sizes do not cover the indices");
    // Groups of one index are fixed from the outset.
    for (Group& grp : groups_)
      if (grp.size == 1) assign(grp.start, grp.remaining);
  }

  IqpSolution solve() {
    if (free_.empty()) {
      record();
    } else {
      descend(0);
    }
    IqpSolution s;
    s.z = best_z_;
    s.objective = best_;
    s.value = true_value(inst_, best_z_);
    return s;
  }

 private:
  struct Group {
    int start;
    int size;
    Count remaining;   // mass not yet assigned
    Count lower_rest;  // sum of lower bounds of unassigned indices
  };
  struct Free {
    int index;
    int group;
  };

  void assign(int a, const Count& v) {
    z_[a] = v;
    for (int b = 0; b < inst_.size(); ++b) grad_[b] += inst_.q[b][a] * v;
  }
  void unassign(int a) {
    const Count v = z_[a];
    for (int b = 0; b < inst_.size(); ++b) grad_[b] -= inst_.q[b][a] * v;
    z_[a] = 0;
  }

  void tick() {
    if (cap_ && ++nodes_ > cap_) throw ResourceCapExceeded("iqp node cap exceeded");
  }

  void record() {
    const Count f = objective(inst_, z_);
    if (!have_ || f < best_) {
      have_ = true;
      best_ = f;
      best_z_ = z_;
    }
  }

  // f of the assigned part plus a bound on the rest: the linear term is at
  // least R·min gradient per group and the diagonal at least min q·R²/|U|.
  Count bound(std::size_t next) const {
    Count lb = 0;
    for (int a = 0; a < inst_.size(); ++a)
      if (z_[a] != 0) lb += z_[a] * (grad_[a] + inst_.p[a]);
    std::vector<int> open(groups_.size(), 0);
    for (std::size_t i = next; i < free_.size(); ++i) ++open[free_[i].group];
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (open[g] == 0) continue;
      const Group& grp = groups_[g];
      const int u = open[g] + 1;
      const int first = grp.start + grp.size - u;
      Count mg = grad_[first];
      std::int64_t md = inst_.q[first][first];
      for (int j = first; j < grp.start + grp.size; ++j) {
        mg = std::min(mg, grad_[j]);
        md = std::min(md, inst_.q[j][j]);
      }
      const Count& R = grp.remaining;
      lb += 2 * R * mg + md * (R * R / u);
    }
    return lb;
  }

  void descend(std::size_t i) {
    tick();
    if (have_ && bound(i) >= best_) return;
    const Free fr = free_[i];
    Group& grp = groups_[fr.group];
    const int a = fr.index;
    const bool closes = a == grp.start + grp.size - 2;
    const int last = grp.start + grp.size - 1;
    const Count lo = lower_[a];
    const Count hi = grp.remaining - (grp.lower_rest - lower_[a]);
    const Count saved_rem = grp.remaining;
    const Count saved_low = grp.lower_rest;
    grp.lower_rest -= lower_[a];

    if (i + 1 == free_.size() && hi - lo > 2) {
      closed_form(a, last, lo, hi, grp);
    } else {
      for (Count v = lo; v <= hi; ++v) {
        assign(a, v);
        grp.remaining = saved_rem - v;
        if (closes) {
          assign(last, grp.remaining);
          if (i + 1 == free_.size()) {
            tick();
            record();
          } else {
            descend(i + 1);
          }
          unassign(last);
        } else {
          descend(i + 1);
        }
        unassign(a);
        grp.remaining = saved_rem;
      }
    }
    grp.lower_rest = saved_low;
  }

  // The last free index a and its group's forced index `last`: f is a
  // quadratic in s = z_a - lo, so three samples determine it.
  void closed_form(int a, int last, const Count& lo, const Count& hi, Group& grp) {
    const Count rem = grp.remaining;
    auto eval = [&](const Count& v) {
      assign(a, v);
      assign(last, rem - v);
      const Count f = objective(inst_, z_);
      unassign(last);
      unassign(a);
      return f;
    };
    const Count f0 = eval(lo), f1 = eval(lo + 1), f2 = eval(lo + 2);
    const Count A = (f2 - 2 * f1 + f0) / 2;
    const Count B = f1 - f0 - A;
    const Count S = hi - lo;
    std::vector<Count> cand{0, S};
    if (A > 0) {
      const Count s = floor_div(-B, 2 * A);
      const Count s1 = s + 1;
      for (const Count& c : {s, s1})
        if (c > 0 && c < S) cand.push_back(c);
    }
    std::sort(cand.begin(), cand.end());
    Count best_s = cand.front();
    Count best_f = A * best_s * best_s + B * best_s;
    for (const Count& c : cand) {
      const Count f = A * c * c + B * c;
      if (f < best_f) {
        best_f = f;
        best_s = c;
      }
    }
    tick();
    assign(a, lo + best_s);
    assign(last, rem - lo - best_s);
    record();
    unassign(last);
    unassign(a);
  }

  const IqpInstance& inst_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<Count> lower_;
  std::vector<Count> z_, grad_;
  std::vector<Group> groups_;
  std::vector<Free> free_;
  bool have_ = false;
  Count best_;
  std::vector<Count> best_z_;
};

}  // namespace

IqpSolution solve_iqp(const IqpInstance& inst, const IqpOptions& options) {
  return Solver(inst, options).solve();
}

void write_iqp(std::ostream& out, const IqpInstance& inst) {
  out << "iqp " << inst.size() << ' ' << inst.group_count() << '\n';
  for (int g = 0; g < inst.group_count(); ++g)
    out << "group " << inst.group_size[g] << ' ' << inst.h[g] << '\n';
  for (const auto& row : inst.q) {
    out << 'q';
    for (auto v : row) out << ' ' << v;
    out << '\n';
  }
  out << 'p';
  for (auto v : inst.p) out << ' ' << v;
  out << "\nr " << inst.r << "\nend\n";
}

namespace {

std::int64_t to_i64(const std::string& tok) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("iqp: bad integer '" + tok + "'");
  }
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

}  // namespace

IqpInstance read_iqp(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto w = words(line);
    if (!w.empty()) lines.push_back(std::move(w));
  }
  std::size_t at = 0;
  auto next = [&](const char* key, std::size_t min_size) -> const std::vector<std::string>& {
    if (at >= lines.size() || lines[at][0] != key || lines[at].size() < min_size)
      throw ParseError(std::string("iqp: expected '") + key + "'");
    return lines[at++];
  };
  const auto& head = next("iqp", 3);
  const int n = static_cast<int>(to_i64(head[1]));
  const int groups = static_cast<int>(to_i64(head[2]));
  IqpInstance inst;
  int total = 0;
  for (int g = 0; g < groups; ++g) {
    const auto& w = next("group", 3);
    inst.group_size.push_back(static_cast<int>(to_i64(w[1])));
    inst.h.push_back(parse_count(w[2]));
    total += inst.group_size.back();
  }
  if (total != n) throw ParseError("iqp: group sizes do not add up");
  for (int a = 0; a < n; ++a) {
    const auto& w = next("q", n + 1);
    std::vector<std::int64_t> row;
    for (int b = 0; b < n; ++b) row.push_back(to_i64(w[b + 1]));
    inst.q.push_back(std::move(row));
  }
  const auto& pw = next("p", n + 1);
  for (int a = 0; a < n; ++a) inst.p.push_back(to_i64(pw[a + 1]));
  inst.r = to_i64(next("r", 2)[1]);
  next("end", 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (inst.q[a][b] != inst.q[b][a]) throw ParseError("iqp: Q is not symmetric");
  return inst;
}

}  // namespace xcr
