#pragma once

// Principal exhaustions: finite-depth towers of finite-type pieces whose
// boundary curves form a forest and whose complements stay infinite type,
// plus the declared-intersection curve system used for the Alexander method.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surface.hpp"

namespace surfcalc::exhaustion {

using CurveId = int;
using endspace::Violation;

struct PieceSignature {
  surface::FiniteSurface surface;
  std::vector<CurveId> inherited_boundary;  // curves shared with the previous level
  std::vector<CurveId> new_boundary;
};

struct ExhaustionLevel {
  int index = 0;
  std::vector<PieceSignature> pieces;
  std::vector<CurveId> b_j;  // new boundary curves introduced at this level
  // One spec per component of the complement of the union up to this level,
  // aligned with b_j (component cut off by that curve).
  std::vector<surface::SurfaceSpec> complements;
};

struct PrincipalExhaustion {
  surface::SurfaceSpec source;
  std::vector<ExhaustionLevel> levels;
  // Forest structure on boundary curves: maps a curve to the curve of the
  // previous level it sits behind; level-0 curves are roots (absent).
  std::map<CurveId, CurveId> parent;
  std::uint64_t punctures_absorbed = 0;  // isolated planar ends realized as piece punctures
};

struct AlexanderSystem {
  std::vector<CurveId> b;
  std::map<CurveId, CurveId> bstar;  // beta -> beta*
  // One entry per piece, in (level, piece) order: opaque ids of the finite
  // Alexander system for that signature.
  std::vector<std::vector<CurveId>> gamma;
  // Symmetric registry of declared geometric intersection numbers; absent
  // pairs are declared disjoint.
  std::map<std::pair<CurveId, CurveId>, int> intersections;

  bool registered(CurveId c) const;
  int declared(CurveId a, CurveId b) const;
};

struct DepthZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInfiniteType : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidExhaustion : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds a depth-level exhaustion realizing the spec. Pieces are padded with
// genus, or clusters split more finely, until every piece meets the
// complexity bounds (orientable 3g-3+n+b >= 5, non-orientable g+n+b >= 8).
PrincipalExhaustion build_exhaustion(const surface::SurfaceSpec& s, int depth,
                                     endspace::NormalizeOptions opts = {});

// Checks the five defining conditions; violation paths are tagged
// "condition1" .. "condition5".
std::vector<Violation> validate_exhaustion(const PrincipalExhaustion& pe,
                                           endspace::NormalizeOptions opts = {});

AlexanderSystem alexander_system(const PrincipalExhaustion& pe);

// Number of registered curves with nonzero declared intersection with probe.
std::size_t check_local_finiteness(const AlexanderSystem& sys, CurveId probe);

}  // namespace surfcalc::exhaustion
