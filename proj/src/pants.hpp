#pragma once

// Pants decompositions of finite-type surfaces as decorated multigraphs:
// nodes are pairs of pants, curve edges are two-sided (with an
// orientation-reversing flag) or one-sided, free legs are puncture or
// boundary stubs. Brute-force checks of the simplicial characterizations
// (separating, outer, cut vertices of the adjacency graph) live here.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surface.hpp"

namespace surfcalc::pants {

using endspace::Violation;
using surface::FiniteSurface;

enum class StubKind { Puncture, Boundary };

struct TwoSided {
  int id = 0;
  int a = 0, b = 0;     // incident pants, possibly equal (a self-gluing)
  bool reversing = false;
};

struct OneSided {
  int id = 0;
  int pants = 0;
};

struct PantsDecomposition {
  int num_pants = 0;  // nodes 0 .. num_pants-1
  std::vector<TwoSided> two_sided;
  std::vector<OneSided> one_sided;
  std::vector<std::pair<int, StubKind>> stubs;
};

struct AdjacencyGraph {
  std::vector<int> vertices;                 // sorted curve ids
  std::vector<std::pair<int, int>> edges;    // sorted pairs, first < second
};

struct UnknownCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSeparating : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checks the 3-leg rule, pants count = -chi, stub totals per kind,
// connectivity and the orientability of the glued-up surface.
std::vector<Violation> validate_pants(const PantsDecomposition& pd, const FiniteSurface& f);

// True iff the decorated multigraph glues up to an orientable surface: no
// one-sided curves and the reversing flags are a coboundary.
bool glues_orientable(const PantsDecomposition& pd);

// Two curves are adjacent iff some pants is incident to both; simple graph.
AdjacencyGraph adjacency_graph(const PantsDecomposition& pd);

// One-sided curves and self-gluings never separate; otherwise delete the
// edge and test connectivity.
bool is_separating(int curve, const PantsDecomposition& pd);

// True iff one side of the curve is a single pants whose other two legs are
// both puncture stubs.
bool is_outer(int curve, const PantsDecomposition& pd);

struct CutVertexReport {
  std::vector<int> cut_vertices;            // of the adjacency graph
  std::vector<int> non_outer_separating;    // by connectivity brute force
  bool coincide = false;
};

CutVertexReport cut_vertex_check(const PantsDecomposition& pd);

// All decompositions up to decorated-multigraph isomorphism, deterministic
// order, truncated at max_count. Requires -chi(f) <= 8.
std::vector<PantsDecomposition> enumerate_pants_decompositions(const FiniteSurface& f,
                                                               std::size_t max_count);

}  // namespace surfcalc::pants
