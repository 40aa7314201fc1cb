#pragma once

// The recursive separating-curve basis on a surface with its planar ends
// forgotten, the handle-shifts it supports, the ends graph with its spanning
// tree, and a finite strip model for the handle/crosscap shift relation.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surface.hpp"

namespace surfcalc::shiftbasis {

using endspace::EndLabel;

// A genus end of the depth-truncated end tree, named by its tree address.
struct EndRef {
  std::vector<int> address;
  EndLabel label = EndLabel::OrGenus;

  bool operator==(const EndRef&) const = default;
  auto operator<=>(const EndRef& o) const { return address <=> o.address; }
};

struct BasisCurve {
  int id = 0;
  std::pair<int, int> level{0, 0};  // (recursion stage, index within stage)
  std::vector<EndRef> inside, outside;  // partition of the truncated genus ends
  int homology_index = 0;
};

struct GoodBasis {
  std::vector<BasisCurve> curves;
  std::vector<EndRef> genus_ends;  // sorted truncated vertex set
  bool ends_infinite = false;      // End_g infinite before truncation
};

enum class ShiftKind { Orientable, SemiOrientable, PseudoOrientable, Nonorientable };
const char* shift_kind_name(ShiftKind k);  // "or" | "semi" | "pseudo" | "nonor"

struct HandleShift {
  int id = 0;
  EndRef minus_end, plus_end;
  ShiftKind kind = ShiftKind::Orientable;
  int support_curve = 0;
};

struct EndsGraph {
  std::vector<EndRef> vertices;                 // complete graph on these
  std::vector<std::pair<EndRef, EndRef>> eg_edges() const;
};

struct SpanningTree {
  std::vector<EndRef> vertices;
  std::vector<HandleShift> edges;               // one per basis curve
};

struct FewerThanTwoGenusEnds : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GoodBasis good_basis(const surface::SurfaceSpec& s_hat, int depth);

// The ends of the complement regions cut out by the basis: one entry per
// curve (the region just inside it, minus deeper curves) plus a final entry
// for the outermost region. Computed from the inside-sets alone.
std::vector<std::vector<EndRef>> complement_regions(const GoodBasis& basis);

HandleShift classify_shift(const BasisCurve& c, const GoodBasis& basis);

EndsGraph ends_graph(const surface::SurfaceSpec& s_hat, int depth);

// Validates that the basis curves' shifts form a spanning tree of the ends
// graph; throws NotATree otherwise.
SpanningTree teg(const GoodBasis& basis);

// Edges of the non-orientable subtree; must connect all non-orientable ends.
std::vector<HandleShift> nteg(const SpanningTree& tree);
bool nteg_connected(const SpanningTree& tree);

endspace::EndCount rank_r(const GoodBasis& basis);

enum class GraphSel { EG, TEG, NTEG };
std::string graph_dot(const SpanningTree& tree, GraphSel sel);

// --- strip model ---------------------------------------------------------

enum class Token { Handle, Crosscap };

// If a column contains a crosscap, each handle rewrites to two crosscaps.
std::vector<Token> dyck_normal_form(std::vector<Token> column);

// Verifies that shifting three crosscap rows of a strip agrees, column by
// column on the window interior, with conjugating the handle-row and
// crosscap-row shifts through the column rewrite.
bool strip_relation_check(int window);

// The same comparison with the third crosscap shift dropped; must fail.
bool strip_relation_check_broken(int window);

}  // namespace surfcalc::shiftbasis
