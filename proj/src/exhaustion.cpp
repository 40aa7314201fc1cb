#include "exhaustion.hpp"

#include <algorithm>
#include <string>

namespace surfcalc::exhaustion {

using endspace::EndExpr;
using endspace::EndLabel;
using surface::FiniteSurface;
using surface::SurfaceSpec;

namespace {

bool finite_all_planar(const EndExpr& e) {
  auto c = endspace::count_ends(e);
  return !c.infinite && !endspace::contains_label(e, EndLabel::OrGenus) &&
         !endspace::contains_label(e, EndLabel::NonorGenus);
}

bool has_genus_end(const EndExpr& e) {
  return endspace::contains_label(e, EndLabel::OrGenus) ||
         endspace::contains_label(e, EndLabel::NonorGenus);
}

struct Refinement {
  std::vector<EndExpr> clusters;
  std::uint64_t punctures = 0;
};

// Splits an end block into the blocks of the next complement components.
// `mult` widens the split: more Cantor branches, more Seq copies peeled off.
// Finite all-planar fragments are realized as punctures of the piece.
void refine_into(const EndExpr& e, int mult, Refinement& out) {
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
      if (e.label() == EndLabel::Planar) {
        out.punctures += 1;
      } else {
        out.clusters.push_back(e);
      }
      return;
    case EndExpr::Kind::Cantor: {
      int copies = std::max(2, mult);
      for (int i = 0; i < copies; ++i) out.clusters.push_back(e);
      return;
    }
    case EndExpr::Kind::Union:
      for (const auto& p : e.parts()) refine_into(p, mult, out);
      return;
    case EndExpr::Kind::Seq: {
      for (int i = 0; i < mult; ++i) {
        if (finite_all_planar(e.body())) {
          out.punctures += endspace::count_ends(e.body()).n;
        } else {
          out.clusters.push_back(e.body());
        }
      }
      out.clusters.push_back(e);  // the tail, still a copy of the whole block
      return;
    }
  }
}

Refinement refine(const EndExpr& e, int mult) {
  Refinement r;
  refine_into(e, mult, r);
  return r;
}

bool meets_bound(const FiniteSurface& f) {
  if (f.orientable) return 3 * f.genus - 3 + f.punctures + f.boundary >= 5;
  return f.genus + f.punctures + f.boundary >= 8;
}

// Orientability and minimal genus seed for a piece, from the source class and
// whether the piece's block carries a non-orientable end.
struct PieceKind {
  bool orientable = true;
  int genus_seed = 0;   // minimum genus (crosscap parity seed for even/odd)
  int genus_step = 1;   // padding increment preserving the seed's parity
};

PieceKind piece_kind(const SurfaceSpec& src, bool level0, bool cluster_nonor) {
  PieceKind k;
  if (cluster_nonor) {
    k.orientable = false;
    k.genus_seed = 1;
    return k;
  }
  if (level0) {
    switch (src.orient) {
      case surface::OrientClass::Orientable:
        break;
      case surface::OrientClass::EvenNonorientable:
        k.orientable = false;
        k.genus_seed = 2;
        k.genus_step = 2;
        break;
      case surface::OrientClass::OddNonorientable:
        k.orientable = false;
        k.genus_seed = 1;
        k.genus_step = 2;
        break;
      case surface::OrientClass::InfinitelyNonorientable:
        k.orientable = false;
        k.genus_seed = 1;
        break;
    }
  }
  return k;
}

// Builds one piece over a block: pads genus when the block (or the level-0
// source) can supply it, otherwise widens the split until the bound holds.
PieceSignature make_piece(const SurfaceSpec& src, const EndExpr& block, bool level0,
                          bool genus_available, Refinement& ref_out, CurveId inherited,
                          CurveId& next_id) {
  PieceKind kind =
      piece_kind(src, level0, endspace::contains_label(block, EndLabel::NonorGenus));
  for (int mult = 1;; ++mult) {
    if (mult > 64) throw std::logic_error("piece split failed to reach complexity bound");
    Refinement ref = refine(block, mult);
    FiniteSurface f;
    f.orientable = kind.orientable;
    f.genus = kind.orientable ? 0 : kind.genus_seed;
    f.punctures = static_cast<int>(ref.punctures);
    f.boundary = static_cast<int>(ref.clusters.size()) + (level0 ? 0 : 1);
    if (genus_available || !kind.orientable) {
      while (!meets_bound(f)) f.genus += kind.genus_step;
    }
    if (!meets_bound(f)) continue;

    PieceSignature piece;
    piece.surface = f;
    if (!level0) piece.inherited_boundary.push_back(inherited);
    for (std::size_t i = 0; i < ref.clusters.size(); ++i) piece.new_boundary.push_back(next_id++);
    ref_out = std::move(ref);
    return piece;
  }
}

// Crosscaps, if any, end up inside the pieces, so a complement block is
// non-orientable exactly when it still carries a non-orientable end.
SurfaceSpec complement_spec(const EndExpr& block) {
  SurfaceSpec c;
  c.genus = has_genus_end(block) ? surface::Genus::inf() : surface::Genus::finite(0);
  c.orient = endspace::contains_label(block, EndLabel::NonorGenus)
                 ? surface::OrientClass::InfinitelyNonorientable
                 : surface::OrientClass::Orientable;
  c.boundary = 1;
  c.ends = block;
  return c;
}

std::string piece_path(int level, std::size_t piece) {
  return "level " + std::to_string(level) + " piece " + std::to_string(piece);
}

}  // namespace

PrincipalExhaustion build_exhaustion(const SurfaceSpec& s, int depth,
                                     endspace::NormalizeOptions opts) {
  if (depth <= 0) throw DepthZero("exhaustion depth must be positive");
  if (s.boundary != 0) {
    throw surface::BoundaryNotSupported("build_exhaustion: source must have empty boundary");
  }
  auto viol = surface::validate_surface(s);
  if (!viol.empty()) {
    throw std::invalid_argument("build_exhaustion: invalid surface spec: " + viol.front().message);
  }
  if (!surface::is_infinite_type(s)) {
    throw NotInfiniteType("build_exhaustion: surface is of finite type");
  }
  endspace::normalize(s.ends, opts);  // raises FragmentExceeded early

  PrincipalExhaustion pe;
  pe.source = s;
  CurveId next_id = 0;

  // Blocks of the current complement, each tagged with its separating curve.
  std::vector<std::pair<CurveId, EndExpr>> frontier;

  for (int j = 0; j < depth; ++j) {
    ExhaustionLevel level;
    level.index = j;
    if (j == 0) {
      Refinement ref;
      PieceSignature piece =
          make_piece(s, s.ends, true, s.genus.infinite, ref, -1, next_id);
      pe.punctures_absorbed += ref.punctures;
      for (std::size_t i = 0; i < ref.clusters.size(); ++i) {
        CurveId c = piece.new_boundary[i];
        level.b_j.push_back(c);
        level.complements.push_back(complement_spec(ref.clusters[i]));
        frontier.emplace_back(c, ref.clusters[i]);
      }
      level.pieces.push_back(std::move(piece));
    } else {
      std::vector<std::pair<CurveId, EndExpr>> next_frontier;
      for (auto& [curve, block] : frontier) {
        Refinement ref;
        PieceSignature piece =
            make_piece(s, block, false, has_genus_end(block), ref, curve, next_id);
        pe.punctures_absorbed += ref.punctures;
        for (std::size_t i = 0; i < ref.clusters.size(); ++i) {
          CurveId c = piece.new_boundary[i];
          pe.parent[c] = curve;
          level.b_j.push_back(c);
          level.complements.push_back(complement_spec(ref.clusters[i]));
          next_frontier.emplace_back(c, ref.clusters[i]);
        }
        level.pieces.push_back(std::move(piece));
      }
      frontier = std::move(next_frontier);
    }
    pe.levels.push_back(std::move(level));
  }
  return pe;
}

std::vector<Violation> validate_exhaustion(const PrincipalExhaustion& pe,
                                           endspace::NormalizeOptions opts) {
  std::vector<Violation> out;
  std::map<CurveId, int> curve_level;

  for (const auto& level : pe.levels) {
    for (std::size_t pi = 0; pi < level.pieces.size(); ++pi) {
      const auto& piece = level.pieces[pi];
      const auto& f = piece.surface;
      int listed = static_cast<int>(piece.inherited_boundary.size() + piece.new_boundary.size());
      if (listed != f.boundary) {
        out.push_back({"condition1: " + piece_path(level.index, pi),
                       "boundary curve list does not match the signature's boundary count"});
      }
      if (f.euler_characteristic() >= 0) {
        out.push_back({"condition1: " + piece_path(level.index, pi),
                       "piece has non-negative Euler characteristic"});
      }
      if (f.orientable) {
        if (3 * f.genus - 3 + f.punctures + f.boundary < 5) {
          out.push_back({"condition3: " + piece_path(level.index, pi),
                         "orientable piece with 3g-3+n+b < 5"});
        }
      } else {
        if (f.genus + f.punctures + f.boundary < 8) {
          out.push_back({"condition3: " + piece_path(level.index, pi),
                         "non-orientable piece with g+n+b < 8"});
        }
      }
    }
    for (std::size_t ci = 0; ci < level.complements.size(); ++ci) {
      if (!surface::is_infinite_type(level.complements[ci])) {
        out.push_back({"condition2: level " + std::to_string(level.index) + " complement " +
                           std::to_string(ci),
                       "complement component is of finite type"});
      }
    }
    for (CurveId c : level.b_j) {
      auto [it, fresh] = curve_level.emplace(c, level.index);
      if (!fresh) {
        out.push_back({"condition4: curve " + std::to_string(c),
                       "curve appears at more than one level"});
      }
      (void)it;
    }
  }

  for (const auto& [child, par] : pe.parent) {
    auto ci = curve_level.find(child);
    auto piit = curve_level.find(par);
    if (ci == curve_level.end() || piit == curve_level.end() || piit->second >= ci->second) {
      out.push_back({"condition4: curve " + std::to_string(child),
                     "parent curve does not live at an earlier level"});
    }
  }

  // Condition 5: the final complements plus the absorbed punctures carry
  // exactly the ends of the source.
  if (!pe.levels.empty() && !pe.levels.back().complements.empty()) {
    std::vector<EndExpr> parts;
    for (const auto& comp : pe.levels.back().complements) parts.push_back(comp.ends);
    for (std::uint64_t i = 0; i < pe.punctures_absorbed; ++i) {
      parts.push_back(EndExpr::pt(EndLabel::Planar));
    }
    EndExpr total = parts.size() == 1 ? parts.front() : EndExpr::unite(std::move(parts));
    if (endspace::equivalent(total, pe.source.ends, opts) == endspace::Verdict::Distinct) {
      out.push_back({"condition5", "complement ends do not reassemble the source end space"});
    }
  }
  return out;
}

bool AlexanderSystem::registered(CurveId c) const {
  if (std::find(b.begin(), b.end(), c) != b.end()) return true;
  for (const auto& [beta, star] : bstar) {
    if (star == c) return true;
  }
  for (const auto& g : gamma) {
    if (std::find(g.begin(), g.end(), c) != g.end()) return true;
  }
  return false;
}

int AlexanderSystem::declared(CurveId x, CurveId y) const {
  if (x == y) return 0;
  auto it = intersections.find(std::minmax(x, y));
  return it == intersections.end() ? 0 : it->second;
}

AlexanderSystem alexander_system(const PrincipalExhaustion& pe) {
  bool any_piece = false;
  for (const auto& level : pe.levels) any_piece = any_piece || !level.pieces.empty();
  if (pe.levels.empty() || !any_piece) {
    throw InvalidExhaustion("alexander_system: exhaustion has no pieces");
  }
  auto viol = validate_exhaustion(pe);
  if (!viol.empty()) {
    throw InvalidExhaustion("alexander_system: " + viol.front().path + ": " +
                            viol.front().message);
  }

  AlexanderSystem sys;
  CurveId next_id = 0;
  for (const auto& level : pe.levels) {
    for (CurveId c : level.b_j) {
      sys.b.push_back(c);
      next_id = std::max(next_id, c + 1);
    }
  }
  for (CurveId beta : sys.b) {
    CurveId star = next_id++;
    sys.bstar[beta] = star;
    sys.intersections[std::minmax(beta, star)] = 2;
  }
  for (const auto& level : pe.levels) {
    for (const auto& piece : level.pieces) {
      const auto& f = piece.surface;
      int count = f.orientable ? 3 * f.genus - 3 + f.punctures + f.boundary + f.boundary
                               : f.genus + f.punctures + f.boundary + f.boundary;
      std::vector<CurveId> g;
      for (int i = 0; i < count; ++i) g.push_back(next_id++);
      sys.gamma.push_back(std::move(g));
    }
  }
  return sys;
}

std::size_t check_local_finiteness(const AlexanderSystem& sys, CurveId probe) {
  if (!sys.registered(probe)) {
    throw UnknownCurve("check_local_finiteness: curve " + std::to_string(probe) +
                       " is not registered");
  }
  std::size_t count = 0;
  for (const auto& [pair, n] : sys.intersections) {
    if (n != 0 && (pair.first == probe || pair.second == probe)) ++count;
  }
  return count;
}

}  // namespace surfcalc::exhaustion
