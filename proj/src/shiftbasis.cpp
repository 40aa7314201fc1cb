#include "shiftbasis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace surfcalc::shiftbasis {

using endspace::EndExpr;

const char* shift_kind_name(ShiftKind k) {
  switch (k) {
    case ShiftKind::Orientable: return "or";
    case ShiftKind::SemiOrientable: return "semi";
    case ShiftKind::PseudoOrientable: return "pseudo";
    case ShiftKind::Nonorientable: return "nonor";
  }
  return "?";
}

namespace {

struct TruncNode {
  bool is_leaf = false;
  EndLabel label = EndLabel::Planar;
  std::vector<TruncNode> kids;
};

TruncNode truncate_expr(const EndExpr& e, int depth) {
  TruncNode n;
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
      n.is_leaf = true;
      n.label = e.label();
      return n;
    case EndExpr::Kind::Cantor: {
      int copies = std::max(2, depth);
      for (int i = 0; i < copies; ++i) {
        TruncNode leaf;
        leaf.is_leaf = true;
        leaf.label = e.label();
        n.kids.push_back(leaf);
      }
      return n;
    }
    case EndExpr::Kind::Union:
      for (const auto& p : e.parts()) n.kids.push_back(truncate_expr(p, depth));
      return n;
    case EndExpr::Kind::Seq: {
      for (int i = 0; i < depth; ++i) n.kids.push_back(truncate_expr(e.body(), depth));
      TruncNode limit;
      limit.is_leaf = true;
      limit.label = e.label();
      n.kids.push_back(limit);
      return n;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

void collect_leaves(const TruncNode& n, std::vector<int>& addr, std::vector<EndRef>& out) {
  if (n.is_leaf) {
    if (n.label != EndLabel::Planar) out.push_back({addr, n.label});
    return;
  }
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    addr.push_back(static_cast<int>(i));
    collect_leaves(n.kids[i], addr, out);
    addr.pop_back();
  }
}

std::vector<EndRef> leaves_of(const TruncNode& n, const std::vector<int>& addr) {
  std::vector<int> a = addr;
  std::vector<EndRef> out;
  collect_leaves(n, a, out);
  return out;
}

bool starts_with(const std::vector<int>& addr, const std::vector<int>& prefix) {
  if (addr.size() < prefix.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), addr.begin());
}

// The distinguished end the recursion keeps outermost: the least
// non-orientable leaf when one exists, else the least leaf.
EndRef pick_base_end(const std::vector<EndRef>& leaves) {
  for (const auto& l : leaves) {
    if (l.label == EndLabel::NonorGenus) return l;
  }
  return leaves.front();
}

struct Builder {
  GoodBasis gb;
  int next_id = 0;

  void add_curve(std::vector<EndRef> inside, int stage, int index) {
    BasisCurve c;
    c.id = next_id++;
    c.level = {stage, index};
    std::sort(inside.begin(), inside.end());
    c.inside = std::move(inside);
    for (const auto& e : gb.genus_ends) {
      if (!std::binary_search(c.inside.begin(), c.inside.end(), e)) c.outside.push_back(e);
    }
    gb.curves.push_back(std::move(c));
  }

  void recurse(const TruncNode& node, const std::vector<int>& addr, int stage) {
    std::vector<EndRef> leaves = leaves_of(node, addr);
    if (leaves.size() < 2) return;
    std::sort(leaves.begin(), leaves.end());
    EndRef base = pick_base_end(leaves);

    // Walk down to the first branching node on the path toward the base end.
    const TruncNode* cur = &node;
    std::vector<int> caddr = addr;
    while (!cur->is_leaf && cur->kids.size() == 1) {
      caddr.push_back(0);
      cur = &cur->kids.front();
    }
    int base_child = base.address[caddr.size()];
    int index = 0;
    for (std::size_t i = 0; i < cur->kids.size(); ++i) {
      if (static_cast<int>(i) == base_child) continue;
      std::vector<int> kaddr = caddr;
      kaddr.push_back(static_cast<int>(i));
      std::vector<EndRef> sub = leaves_of(cur->kids[i], kaddr);
      if (sub.empty()) continue;
      add_curve(sub, stage, index++);
    }
    for (std::size_t i = 0; i < cur->kids.size(); ++i) {
      std::vector<int> kaddr = caddr;
      kaddr.push_back(static_cast<int>(i));
      recurse(cur->kids[i], kaddr, stage + 1);
    }
  }
};

}  // namespace

GoodBasis good_basis(const surface::SurfaceSpec& s_hat, int depth) {
  if (depth <= 0) throw std::invalid_argument("good_basis: depth must be positive");
  auto viol = endspace::validate_closedness(s_hat.ends);
  if (!viol.empty()) {
    throw std::invalid_argument("good_basis: end expression violates closedness: " +
                                viol.front().message);
  }
  if (endspace::contains_label(s_hat.ends, EndLabel::Planar)) {
    throw std::invalid_argument("good_basis: expected a surface with planar ends forgotten");
  }
  TruncNode root = truncate_expr(s_hat.ends, depth);
  Builder b;
  b.gb.ends_infinite = endspace::count_genus_ends(s_hat.ends).infinite;
  b.gb.genus_ends = leaves_of(root, {});
  std::sort(b.gb.genus_ends.begin(), b.gb.genus_ends.end());
  std::size_t k = b.gb.genus_ends.size();
  if (k < 2) {
    throw FewerThanTwoGenusEnds("good_basis: fewer than two genus ends at this depth");
  }

  bool any_or = false, any_nonor = false;
  for (const auto& e : b.gb.genus_ends) {
    (e.label == EndLabel::NonorGenus ? any_nonor : any_or) = true;
  }
  if (!(any_or && any_nonor)) {
    // Uniform label: a nested chain generates everything.
    std::vector<EndRef> inside;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      inside.push_back(b.gb.genus_ends[i]);
      b.add_curve(inside, 0, static_cast<int>(i));
    }
  } else {
    b.recurse(root, {}, 0);
  }
  for (std::size_t i = 0; i < b.gb.curves.size(); ++i) {
    b.gb.curves[i].homology_index = static_cast<int>(i);
  }
  return b.gb;
}

namespace {

bool subset(const std::vector<EndRef>& a, const std::vector<EndRef>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<EndRef>> complement_regions(const GoodBasis& basis) {
  std::vector<std::vector<EndRef>> regions;
  auto region_of = [&](const std::vector<EndRef>& inside, std::size_t self) {
    std::set<EndRef> covered;
    for (std::size_t j = 0; j < basis.curves.size(); ++j) {
      if (j == self) continue;
      const auto& other = basis.curves[j].inside;
      if (other.size() < inside.size() && subset(other, inside)) {
        covered.insert(other.begin(), other.end());
      }
    }
    std::vector<EndRef> r;
    for (const auto& e : inside) {
      if (!covered.count(e)) r.push_back(e);
    }
    return r;
  };
  for (std::size_t i = 0; i < basis.curves.size(); ++i) {
    regions.push_back(region_of(basis.curves[i].inside, i));
  }
  // Outermost region: ends inside no curve at all.
  std::set<EndRef> covered;
  for (const auto& c : basis.curves) covered.insert(c.inside.begin(), c.inside.end());
  std::vector<EndRef> outer;
  for (const auto& e : basis.genus_ends) {
    if (!covered.count(e)) outer.push_back(e);
  }
  regions.push_back(outer);
  return regions;
}

HandleShift classify_shift(const BasisCurve& c, const GoodBasis& basis) {
  auto regions = complement_regions(basis);
  std::size_t self = basis.curves.size();
  for (std::size_t i = 0; i < basis.curves.size(); ++i) {
    if (basis.curves[i].id == c.id) self = i;
  }
  if (self == basis.curves.size()) {
    throw std::invalid_argument("classify_shift: curve is not part of the basis");
  }
  // Parent region: the one just outside the curve.
  std::size_t parent = basis.curves.size();  // outermost by default
  for (std::size_t j = 0; j < basis.curves.size(); ++j) {
    if (j == self) continue;
    const auto& other = basis.curves[j].inside;
    if (other.size() > c.inside.size() && subset(c.inside, other)) {
      if (parent == basis.curves.size() || basis.curves[j].inside.size() <
                                               basis.curves[parent].inside.size()) {
        parent = j;
      }
    }
  }
  const auto& inner = regions[self];
  const auto& outer = regions[parent];
  if (inner.size() != 1 || outer.size() != 1) {
    throw NotATree("classify_shift: a complement region does not carry exactly one end");
  }
  HandleShift h;
  h.id = c.id;
  h.support_curve = c.id;
  int nonor = (inner[0].label == EndLabel::NonorGenus ? 1 : 0) +
              (outer[0].label == EndLabel::NonorGenus ? 1 : 0);
  h.kind = nonor == 0   ? ShiftKind::Orientable
           : nonor == 1 ? ShiftKind::SemiOrientable
                        : ShiftKind::Nonorientable;
  if (inner[0] < outer[0]) {
    h.minus_end = inner[0];
    h.plus_end = outer[0];
  } else {
    h.minus_end = outer[0];
    h.plus_end = inner[0];
  }
  return h;
}

std::vector<std::pair<EndRef, EndRef>> EndsGraph::eg_edges() const {
  std::vector<std::pair<EndRef, EndRef>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      out.emplace_back(vertices[i], vertices[j]);
    }
  }
  return out;
}

EndsGraph ends_graph(const surface::SurfaceSpec& s_hat, int depth) {
  if (depth <= 0) throw std::invalid_argument("ends_graph: depth must be positive");
  TruncNode root = truncate_expr(s_hat.ends, depth);
  EndsGraph g;
  g.vertices = leaves_of(root, {});
  std::sort(g.vertices.begin(), g.vertices.end());
  if (g.vertices.size() < 2) {
    throw FewerThanTwoGenusEnds("ends_graph: fewer than two genus ends at this depth");
  }
  return g;
}

namespace {

struct UnionFind {
  std::map<EndRef, EndRef> up;
  EndRef find(EndRef x) {
    while (up.count(x) && !(up[x] == x)) x = up[x];
    return x;
  }
  void unite(const EndRef& a, const EndRef& b) {
    EndRef ra = find(a), rb = find(b);
    if (!(ra == rb)) up[ra] = rb;
  }
  void add(const EndRef& a) {
    if (!up.count(a)) up[a] = a;
  }
};

}  // namespace

SpanningTree teg(const GoodBasis& basis) {
  SpanningTree t;
  t.vertices = basis.genus_ends;
  for (const auto& c : basis.curves) t.edges.push_back(classify_shift(c, basis));
  if (t.edges.size() + 1 != t.vertices.size()) {
    throw NotATree("teg: edge count is not vertex count minus one");
  }
  UnionFind uf;
  for (const auto& v : t.vertices) uf.add(v);
  for (const auto& e : t.edges) uf.unite(e.minus_end, e.plus_end);
  EndRef root = uf.find(t.vertices.front());
  for (const auto& v : t.vertices) {
    if (!(uf.find(v) == root)) throw NotATree("teg: shift edges do not connect all ends");
  }
  return t;
}

std::vector<HandleShift> nteg(const SpanningTree& tree) {
  std::vector<HandleShift> out;
  for (const auto& e : tree.edges) {
    if (e.kind == ShiftKind::Nonorientable) out.push_back(e);
  }
  return out;
}

bool nteg_connected(const SpanningTree& tree) {
  std::vector<EndRef> nonor;
  for (const auto& v : tree.vertices) {
    if (v.label == EndLabel::NonorGenus) nonor.push_back(v);
  }
  if (nonor.size() < 2) return true;
  UnionFind uf;
  for (const auto& v : nonor) uf.add(v);
  for (const auto& e : nteg(tree)) {
    uf.add(e.minus_end);
    uf.add(e.plus_end);
    uf.unite(e.minus_end, e.plus_end);
  }
  EndRef root = uf.find(nonor.front());
  for (const auto& v : nonor) {
    if (!(uf.find(v) == root)) return false;
  }
  return true;
}

endspace::EndCount rank_r(const GoodBasis& basis) {
  if (basis.ends_infinite) return endspace::EndCount::inf();
  return endspace::EndCount::finite(basis.curves.size());
}

namespace {

std::string end_name(const EndRef& e) {
  std::string s = "e";
  for (int a : e.address) s += "_" + std::to_string(a);
  return s;
}

}  // namespace

std::string graph_dot(const SpanningTree& tree, GraphSel sel) {
  std::ostringstream os;
  const char* name = sel == GraphSel::EG ? "EG" : sel == GraphSel::TEG ? "TEG" : "nTEG";
  os << "graph " << name << " {\n";
  for (const auto& v : tree.vertices) {
    if (sel == GraphSel::NTEG && v.label != EndLabel::NonorGenus) continue;
    os << "  " << end_name(v) << " [label=\"" << endspace::label_name(v.label) << "\"];\n";
  }
  if (sel == GraphSel::EG) {
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < tree.vertices.size(); ++j) {
        os << "  " << end_name(tree.vertices[i]) << " -- " << end_name(tree.vertices[j])
           << ";\n";
      }
    }
  } else {
    for (const auto& e : tree.edges) {
      if (sel == GraphSel::NTEG && e.kind != ShiftKind::Nonorientable) continue;
      os << "  " << end_name(e.minus_end) << " -- " << end_name(e.plus_end) << " [kind=\""
         << shift_kind_name(e.kind) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

// --- strip model ---------------------------------------------------------

std::vector<Token> dyck_normal_form(std::vector<Token> column) {
  bool crosscap = std::find(column.begin(), column.end(), Token::Crosscap) != column.end();
  if (!crosscap) return column;
  std::vector<Token> out;
  for (Token t : column) {
    if (t == Token::Handle) {
      out.push_back(Token::Crosscap);
      out.push_back(Token::Crosscap);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

namespace {

// A token with provenance: which row it lives in and which column it came
// from. Provenance is what distinguishes a genuinely shifted row from an
// unshifted one with identical token kinds.
struct StripToken {
  Token kind = Token::Crosscap;
  int row = 0;
  int origin = 0;
  auto operator<=>(const StripToken&) const = default;
};

using Columns = std::map<int, std::vector<StripToken>>;

Columns crosscap_strip(int w) {
  Columns cols;
  for (int x = -w; x <= w; ++x) {
    cols[x] = {{Token::Crosscap, 0, x}, {Token::Crosscap, 1, x}, {Token::Crosscap, 2, x}};
  }
  return cols;
}

Columns shift_row(const Columns& cols, int row, int w) {
  Columns out;
  for (int x = -w; x <= w; ++x) out[x] = {};
  for (const auto& [x, toks] : cols) {
    for (const auto& t : toks) {
      int nx = t.row == row ? x + 1 : x;
      if (nx >= -w && nx <= w) out[nx].push_back(t);
    }
  }
  return out;
}

// Column reinterpretation: three crosscap rows become a handle row (rows 0
// and 1 merged) over a crosscap row (row 2 relabeled).
Columns rewrite_forward(const Columns& cols) {
  Columns out;
  for (const auto& [x, toks] : cols) {
    std::vector<StripToken>& o = out[x];
    for (const auto& t : toks) {
      if (t.row == 0) o.push_back({Token::Handle, 0, t.origin});
      if (t.row == 2) o.push_back({Token::Crosscap, 1, t.origin});
    }
  }
  return out;
}

Columns rewrite_back(const Columns& cols) {
  Columns out;
  for (const auto& [x, toks] : cols) {
    std::vector<StripToken>& o = out[x];
    for (const auto& t : toks) {
      if (t.row == 0) {
        o.push_back({Token::Crosscap, 0, t.origin});
        o.push_back({Token::Crosscap, 1, t.origin});
      } else {
        o.push_back({Token::Crosscap, 2, t.origin});
      }
    }
  }
  return out;
}

bool interior_equal(const Columns& a, const Columns& b, int w) {
  for (int x = -w + 1; x <= w - 1; ++x) {
    std::vector<StripToken> ta = a.count(x) ? a.at(x) : std::vector<StripToken>{};
    std::vector<StripToken> tb = b.count(x) ? b.at(x) : std::vector<StripToken>{};
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) return false;
  }
  return true;
}

bool run_strip_check(int window, bool drop_third) {
  if (window < 4) throw WindowTooSmall("strip relation needs a window of at least 4");
  Columns n1 = crosscap_strip(window);

  Columns lhs = shift_row(n1, 0, window);
  lhs = shift_row(lhs, 1, window);
  if (!drop_third) lhs = shift_row(lhs, 2, window);

  Columns rhs = rewrite_forward(n1);
  rhs = shift_row(rhs, 0, window);  // handle row
  rhs = shift_row(rhs, 1, window);  // crosscap row
  rhs = rewrite_back(rhs);

  return interior_equal(lhs, rhs, window);
}

}  // namespace

bool strip_relation_check(int window) { return run_strip_check(window, false); }

bool strip_relation_check_broken(int window) { return run_strip_check(window, true); }

}  // namespace surfcalc::shiftbasis
