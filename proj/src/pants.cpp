#include "pants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace surfcalc::pants {

namespace {

std::vector<int> leg_counts(const PantsDecomposition& pd) {
  std::vector<int> legs(pd.num_pants, 0);
  auto at = [&](int node) -> int& {
    if (node < 0 || node >= pd.num_pants) throw std::out_of_range("pants node out of range");
    return legs[node];
  };
  for (const auto& e : pd.two_sided) {
    at(e.a) += 1;
    at(e.b) += 1;
  }
  for (const auto& o : pd.one_sided) at(o.pants) += 1;
  for (const auto& [node, kind] : pd.stubs) {
    (void)kind;
    at(node) += 1;
  }
  return legs;
}

// Connected components of the pants nodes under two-sided gluings, with one
// edge optionally removed. Returns a component label per node.
std::vector<int> node_components(const PantsDecomposition& pd, int excluded_edge = -1) {
  std::vector<int> comp(pd.num_pants, -1);
  int next = 0;
  for (int start = 0; start < pd.num_pants; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : pd.two_sided) {
        if (e.id == excluded_edge) continue;
        int w = -1;
        if (e.a == v) w = e.b;
        else if (e.b == v) w = e.a;
        else continue;
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

const TwoSided* find_two_sided(const PantsDecomposition& pd, int curve) {
  for (const auto& e : pd.two_sided) {
    if (e.id == curve) return &e;
  }
  return nullptr;
}

const OneSided* find_one_sided(const PantsDecomposition& pd, int curve) {
  for (const auto& o : pd.one_sided) {
    if (o.id == curve) return &o;
  }
  return nullptr;
}

}  // namespace

bool glues_orientable(const PantsDecomposition& pd) {
  if (!pd.one_sided.empty()) return false;
  for (const auto& e : pd.two_sided) {
    if (e.a == e.b && e.reversing) return false;
  }
  // The reversing flags must be a coboundary: 2-color the nodes so each flag
  // equals the xor of its endpoint colors.
  std::vector<int> color(pd.num_pants, -1);
  for (int start = 0; start < pd.num_pants; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : pd.two_sided) {
        int w;
        if (e.a == v) w = e.b;
        else if (e.b == v) w = e.a;
        else continue;
        int want = color[v] ^ (e.reversing ? 1 : 0);
        if (color[w] == -1) {
          color[w] = want;
          stack.push_back(w);
        } else if (color[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Violation> validate_pants(const PantsDecomposition& pd, const FiniteSurface& f) {
  std::vector<Violation> out;
  std::vector<int> legs;
  try {
    legs = leg_counts(pd);
  } catch (const std::out_of_range&) {
    out.push_back({"structure", "edge or stub references a nonexistent pants node"});
    return out;
  }
  for (int i = 0; i < pd.num_pants; ++i) {
    if (legs[i] != 3) {
      out.push_back({"pants " + std::to_string(i),
                     "has " + std::to_string(legs[i]) + " legs, expected 3"});
    }
  }
  if (pd.num_pants != -f.euler_characteristic()) {
    out.push_back({"structure", "pants count does not equal -chi of the surface"});
  }
  int punctures = 0, boundary = 0;
  for (const auto& [node, kind] : pd.stubs) {
    (void)node;
    (kind == StubKind::Puncture ? punctures : boundary) += 1;
  }
  if (punctures != f.punctures || boundary != f.boundary) {
    out.push_back({"structure", "stub kinds do not match puncture/boundary counts"});
  }
  std::set<int> ids;
  for (const auto& e : pd.two_sided) ids.insert(e.id);
  for (const auto& o : pd.one_sided) ids.insert(o.id);
  if (ids.size() != pd.two_sided.size() + pd.one_sided.size()) {
    out.push_back({"structure", "duplicate curve ids"});
  }
  if (pd.num_pants > 0) {
    auto comp = node_components(pd);
    if (*std::max_element(comp.begin(), comp.end()) != 0) {
      out.push_back({"structure", "decomposition is disconnected"});
    }
  }
  if (glues_orientable(pd) != f.orientable) {
    out.push_back({"orientability",
                   f.orientable ? "decoration glues up non-orientable on an orientable surface"
                                : "decoration glues up orientable on a non-orientable surface"});
  }
  return out;
}

AdjacencyGraph adjacency_graph(const PantsDecomposition& pd) {
  std::map<int, std::set<int>> incident;  // pants node -> curve ids
  AdjacencyGraph g;
  for (const auto& e : pd.two_sided) {
    g.vertices.push_back(e.id);
    incident[e.a].insert(e.id);
    incident[e.b].insert(e.id);
  }
  for (const auto& o : pd.one_sided) {
    g.vertices.push_back(o.id);
    incident[o.pants].insert(o.id);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  std::set<std::pair<int, int>> edges;
  for (const auto& [node, curves] : incident) {
    (void)node;
    for (int a : curves) {
      for (int b : curves) {
        if (a < b) edges.insert({a, b});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool is_separating(int curve, const PantsDecomposition& pd) {
  if (find_one_sided(pd, curve)) return false;
  const TwoSided* e = find_two_sided(pd, curve);
  if (!e) throw UnknownCurve("is_separating: unknown curve " + std::to_string(curve));
  if (e->a == e->b) return false;
  auto comp = node_components(pd, curve);
  return comp[e->a] != comp[e->b];
}

bool is_outer(int curve, const PantsDecomposition& pd) {
  if (!is_separating(curve, pd)) {
    throw NotSeparating("is_outer: curve " + std::to_string(curve) + " is not separating");
  }
  const TwoSided* e = find_two_sided(pd, curve);
  auto comp = node_components(pd, curve);
  for (int side : {e->a, e->b}) {
    // The side is a twice-punctured disk iff it is the single pants `side`
    // with the remaining two legs both puncture stubs.
    bool alone = true;
    for (int v = 0; v < pd.num_pants; ++v) {
      if (v != side && comp[v] == comp[side]) alone = false;
    }
    if (!alone) continue;
    int punct = 0, other = 0;
    for (const auto& [node, kind] : pd.stubs) {
      if (node != side) continue;
      (kind == StubKind::Puncture ? punct : other) += 1;
    }
    for (const auto& o : pd.one_sided) {
      if (o.pants == side) ++other;
    }
    for (const auto& t : pd.two_sided) {
      if (t.id == curve) continue;
      if (t.a == side) ++other;
      if (t.b == side) ++other;
    }
    if (punct == 2 && other == 0) return true;
  }
  return false;
}

namespace {

int graph_components(const AdjacencyGraph& g, int skip_vertex) {
  std::map<int, std::vector<int>> adj;
  std::vector<int> verts;
  for (int v : g.vertices) {
    if (v != skip_vertex) verts.push_back(v);
  }
  for (auto [a, b] : g.edges) {
    if (a == skip_vertex || b == skip_vertex) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen;
  int comps = 0;
  for (int v : verts) {
    if (seen.count(v)) continue;
    ++comps;
    std::vector<int> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
  }
  return comps;
}

}  // namespace

CutVertexReport cut_vertex_check(const PantsDecomposition& pd) {
  CutVertexReport report;
  AdjacencyGraph g = adjacency_graph(pd);
  int base = graph_components(g, /*skip_vertex=*/-1);
  for (int v : g.vertices) {
    bool isolated = true;
    for (auto [a, b] : g.edges) {
      if (a == v || b == v) isolated = false;
    }
    int without = graph_components(g, v);
    int expected = isolated ? base - 1 : base;
    if (without > expected) report.cut_vertices.push_back(v);
  }
  for (const auto& e : pd.two_sided) {
    if (is_separating(e.id, pd) && !is_outer(e.id, pd)) {
      report.non_outer_separating.push_back(e.id);
    }
  }
  std::sort(report.non_outer_separating.begin(), report.non_outer_separating.end());
  report.coincide = report.cut_vertices == report.non_outer_separating;
  return report;
}

namespace {

// Enumeration candidate: nodes carry sorted attribute triples; edges are a
// symmetric multiplicity matrix with a per-class count of reversing flags.
struct Cand {
  int p = 0;
  std::vector<std::array<int, 3>> attr;  // punctures, boundary, one-sided legs
  std::vector<int> loops, revloops;
  std::vector<std::vector<int>> mult, rev;  // upper triangle used
};

using Encoding = std::vector<int>;

// Flag-free part of a candidate under a relabeling.
void graph_encode(const Cand& c, const std::vector<int>& perm, Encoding& out) {
  out.clear();
  out.push_back(c.p);
  for (int k = 0; k < c.p; ++k) {
    int v = perm[k];
    out.push_back(c.attr[v][0]);
    out.push_back(c.attr[v][1]);
    out.push_back(c.attr[v][2]);
    out.push_back(c.loops[v]);
  }
  for (int k = 0; k < c.p; ++k) {
    for (int l = k + 1; l < c.p; ++l) {
      int i = std::min(perm[k], perm[l]);
      int j = std::max(perm[k], perm[l]);
      out.push_back(c.mult[i][j]);
    }
  }
}

// Reversing data under a relabeling and a gauge (a node 2-coloring; flipping
// a node's color toggles the flag of every non-loop edge at it).
void flag_encode(const Cand& c, const std::vector<int>& perm, const std::vector<int>& gauge,
                 Encoding& out) {
  out.clear();
  for (int k = 0; k < c.p; ++k) out.push_back(c.revloops[perm[k]]);
  for (int k = 0; k < c.p; ++k) {
    for (int l = k + 1; l < c.p; ++l) {
      int i = std::min(perm[k], perm[l]);
      int j = std::max(perm[k], perm[l]);
      int r = c.rev[i][j];
      if (gauge[perm[k]] != gauge[perm[l]]) r = c.mult[i][j] - r;
      out.push_back(r);
    }
  }
}

bool any_flags(const Cand& c) {
  for (int v = 0; v < c.p; ++v) {
    if (c.revloops[v]) return true;
    for (int j = v + 1; j < c.p; ++j) {
      if (c.rev[v][j]) return true;
    }
  }
  return false;
}

Cand apply_perm_gauge(const Cand& c, const std::vector<int>& perm,
                      const std::vector<int>& gauge) {
  Cand r;
  r.p = c.p;
  r.attr.resize(c.p);
  r.loops.resize(c.p);
  r.revloops.resize(c.p);
  r.mult.assign(c.p, std::vector<int>(c.p, 0));
  r.rev.assign(c.p, std::vector<int>(c.p, 0));
  for (int k = 0; k < c.p; ++k) {
    int v = perm[k];
    r.attr[k] = c.attr[v];
    r.loops[k] = c.loops[v];
    r.revloops[k] = c.revloops[v];
  }
  for (int k = 0; k < c.p; ++k) {
    for (int l = k + 1; l < c.p; ++l) {
      int i = std::min(perm[k], perm[l]);
      int j = std::max(perm[k], perm[l]);
      int rr = c.rev[i][j];
      if (gauge[perm[k]] != gauge[perm[l]]) rr = c.mult[i][j] - rr;
      r.mult[k][l] = c.mult[i][j];
      r.rev[k][l] = rr;
    }
  }
  return r;
}

PantsDecomposition to_decomposition(const Cand& c) {
  PantsDecomposition pd;
  pd.num_pants = c.p;
  int id = 0;
  for (int v = 0; v < c.p; ++v) {
    for (int l = 0; l < c.loops[v]; ++l) {
      pd.two_sided.push_back({id++, v, v, l < c.revloops[v]});
    }
  }
  for (int i = 0; i < c.p; ++i) {
    for (int j = i + 1; j < c.p; ++j) {
      for (int m = 0; m < c.mult[i][j]; ++m) {
        pd.two_sided.push_back({id++, i, j, m < c.rev[i][j]});
      }
    }
  }
  for (int v = 0; v < c.p; ++v) {
    for (int o = 0; o < c.attr[v][2]; ++o) pd.one_sided.push_back({id++, v});
  }
  for (int v = 0; v < c.p; ++v) {
    for (int s = 0; s < c.attr[v][0]; ++s) pd.stubs.push_back({v, StubKind::Puncture});
    for (int s = 0; s < c.attr[v][1]; ++s) pd.stubs.push_back({v, StubKind::Boundary});
  }
  return pd;
}

bool cand_connected(const Cand& c) {
  if (c.p <= 1) return true;
  std::vector<int> seen(c.p, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < c.p; ++w) {
      int m = v < w ? c.mult[v][w] : c.mult[w][v];
      if (w != v && m > 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool cand_orientable(const Cand& c) {
  for (int v = 0; v < c.p; ++v) {
    if (c.attr[v][2] > 0 || c.revloops[v] > 0) return false;
  }
  // A class with mixed flags contains an orientation-reversing bigon cycle.
  for (int i = 0; i < c.p; ++i) {
    for (int j = i + 1; j < c.p; ++j) {
      if (c.rev[i][j] != 0 && c.rev[i][j] != c.mult[i][j]) return false;
    }
  }
  std::vector<int> color(c.p, -1);
  for (int start = 0; start < c.p; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < c.p; ++w) {
        if (w == v) continue;
        int i = std::min(v, w), j = std::max(v, w);
        if (c.mult[i][j] == 0) continue;
        int want = color[v] ^ (c.rev[i][j] == c.mult[i][j] ? 1 : 0);
        if (color[w] == -1) {
          color[w] = want;
          stack.push_back(w);
        } else if (color[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

struct Enumerator {
  const FiniteSurface& f;
  int p;
  std::map<Encoding, Cand> found;

  // Per attribute assignment: all relabelings preserving the attribute list.
  std::vector<std::vector<int>> attr_perms;
  // Per matrix: canonical flag-free encoding and the relabelings achieving it.
  Encoding graph_best;
  std::vector<std::vector<int>> graph_argmin;
  std::set<Encoding> flag_prededupe;
  Encoding scratch, scratch2;

  void run() {
    std::vector<std::array<int, 3>> acc;
    attrs(0, f.punctures, f.boundary, acc);
  }

  void attrs(int node, int pu_left, int bd_left, std::vector<std::array<int, 3>>& acc) {
    if (node == p) {
      if (pu_left == 0 && bd_left == 0) {
        compute_attr_perms(acc);
        edges_stage(acc);
      }
      return;
    }
    for (int pu = 0; pu <= std::min(3, pu_left); ++pu) {
      for (int bd = 0; bd + pu <= 3 && bd <= bd_left; ++bd) {
        int os_max = f.orientable ? 0 : 3 - pu - bd;
        for (int os = 0; os <= os_max; ++os) {
          std::array<int, 3> a{pu, bd, os};
          if (node > 0 && acc[node - 1] < a) continue;  // keep non-increasing
          acc.push_back(a);
          attrs(node + 1, pu_left - pu, bd_left - bd, acc);
          acc.pop_back();
        }
      }
    }
  }

  void compute_attr_perms(const std::vector<std::array<int, 3>>& attr) {
    attr_perms.clear();
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int k = 0; k < p; ++k) {
        if (attr[perm[k]] != attr[k]) ok = false;
      }
      if (ok) attr_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void edges_stage(const std::vector<std::array<int, 3>>& attr) {
    Cand c;
    c.p = p;
    c.attr = attr;
    c.loops.assign(p, 0);
    c.revloops.assign(p, 0);
    c.mult.assign(p, std::vector<int>(p, 0));
    c.rev.assign(p, std::vector<int>(p, 0));
    std::vector<int> deg(p);
    for (int v = 0; v < p; ++v) deg[v] = 3 - attr[v][0] - attr[v][1] - attr[v][2];
    loops_stage(c, deg, 0);
  }

  void loops_stage(Cand& c, std::vector<int> deg, int node) {
    if (node == p) {
      matrix_stage(c, deg, 0, 1);
      return;
    }
    for (int l = 0; 2 * l <= deg[node]; ++l) {
      c.loops[node] = l;
      auto d = deg;
      d[node] -= 2 * l;
      loops_stage(c, d, node + 1);
    }
    c.loops[node] = 0;
  }

  // Fill the upper triangle row by row, consuming each row's residual degree.
  void matrix_stage(Cand& c, std::vector<int>& deg, int i, int j) {
    if (i >= p - 1 || p == 1) {
      bool done = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
      if (done && cand_connected(c)) matrix_done(c);
      return;
    }
    if (j == p) {
      if (deg[i] == 0) matrix_stage(c, deg, i + 1, i + 2);
      return;
    }
    for (int m = 0; m <= std::min(deg[i], deg[j]); ++m) {
      c.mult[i][j] = m;
      deg[i] -= m;
      deg[j] -= m;
      matrix_stage(c, deg, i, j + 1);
      deg[i] += m;
      deg[j] += m;
    }
    c.mult[i][j] = 0;
  }

  void matrix_done(Cand& c) {
    graph_best.clear();
    graph_argmin.clear();
    for (const auto& perm : attr_perms) {
      graph_encode(c, perm, scratch);
      if (graph_best.empty() || scratch < graph_best) {
        graph_best = scratch;
        graph_argmin.clear();
        graph_argmin.push_back(perm);
      } else if (scratch == graph_best) {
        graph_argmin.push_back(perm);
      }
    }
    flag_prededupe.clear();
    if (f.orientable) {
      record(c);
    } else {
      flags_rec(c, 0, 0, 1);
    }
  }

  void flags_rec(Cand& c, int loop_node, int i, int j) {
    if (loop_node < p) {
      for (int r = 0; r <= c.loops[loop_node]; ++r) {
        c.revloops[loop_node] = r;
        flags_rec(c, loop_node + 1, i, j);
      }
      c.revloops[loop_node] = 0;
      return;
    }
    if (i >= p - 1 || p == 1) {
      if (!cand_orientable(c) && prededupe(c)) record(c);
      return;
    }
    if (j == p) {
      flags_rec(c, p, i + 1, i + 2);
      return;
    }
    for (int r = 0; r <= c.mult[i][j]; ++r) {
      c.rev[i][j] = r;
      flags_rec(c, p, i, j + 1);
    }
    c.rev[i][j] = 0;
  }

  // Cheap gauge-only dedupe under the identity relabeling, before the full
  // relabeling-and-gauge canonicalization.
  bool prededupe(const Cand& c) {
    std::vector<int> identity(p);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> gauge(p, 0);
    Encoding best;
    int gauges = any_flags(c) ? (1 << std::max(0, p - 1)) : 1;
    for (int g = 0; g < gauges; ++g) {
      for (int v = 1; v < p; ++v) gauge[v] = (g >> (v - 1)) & 1;
      flag_encode(c, identity, gauge, scratch);
      if (best.empty() || scratch < best) best = scratch;
    }
    return flag_prededupe.insert(std::move(best)).second;
  }

  void record(const Cand& c) {
    Encoding best_flags;
    std::vector<int> best_perm, best_gauge;
    std::vector<int> gauge(p, 0);
    int gauges = any_flags(c) ? (1 << std::max(0, p - 1)) : 1;
    for (const auto& perm : graph_argmin) {
      for (int g = 0; g < gauges; ++g) {
        for (int v = 1; v < p; ++v) gauge[v] = (g >> (v - 1)) & 1;
        flag_encode(c, perm, gauge, scratch2);
        if (best_flags.empty() || scratch2 < best_flags) {
          best_flags = scratch2;
          best_perm = perm;
          best_gauge = gauge;
        }
      }
    }
    Encoding key = graph_best;
    key.insert(key.end(), best_flags.begin(), best_flags.end());
    found.emplace(std::move(key), apply_perm_gauge(c, best_perm, best_gauge));
  }
};

}  // namespace

std::vector<PantsDecomposition> enumerate_pants_decompositions(const FiniteSurface& f,
                                                               std::size_t max_count) {
  int p = -f.euler_characteristic();
  if (p > 8) throw TooLarge("enumerate_pants_decompositions: -chi exceeds 8");
  if (p < 1) return {};
  Enumerator en{f, p, {}, {}, {}, {}, {}, {}, {}};
  en.run();
  std::vector<PantsDecomposition> out;
  for (const auto& [key, cand] : en.found) {
    (void)key;
    if (out.size() >= max_count) break;
    out.push_back(to_decomposition(cand));
  }
  return out;
}

}  // namespace surfcalc::pants
