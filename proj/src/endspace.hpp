#pragma once

// Symbolic end spaces: labeled closed subsets of the Cantor set, restricted to
// a decidable fragment (finite Cantor-Bendixson rank countable parts plus
// finitely many uniformly labeled Cantor blocks).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcalc::endspace {

enum class EndLabel { Planar, OrGenus, NonorGenus };

const char* label_name(EndLabel l);
EndLabel parse_label(const std::string& s);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an expression leaves the decidable fragment (Seq nesting past
// the configured bound, or a Cantor block inside a Seq body).
struct FragmentExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EndExpr {
 public:
  enum class Kind { Pt, Cantor, Union, Seq };

  static EndExpr pt(EndLabel l);
  static EndExpr cantor(EndLabel l);
  static EndExpr unite(std::vector<EndExpr> parts);  // parts nonempty
  static EndExpr seq(EndExpr body, EndLabel limit);

  Kind kind() const { return kind_; }
  EndLabel label() const { return label_; }          // Pt / Cantor / Seq limit
  const std::vector<EndExpr>& parts() const { return kids_; }  // Union
  const EndExpr& body() const { return kids_.front(); }        // Seq

  bool operator==(const EndExpr&) const = default;

 private:
  EndExpr() = default;
  Kind kind_ = Kind::Pt;
  EndLabel label_ = EndLabel::Planar;
  std::vector<EndExpr> kids_;
};

// Text grammar: pt(<label>) | cantor(<label>) | seq(<expr>; limit=<label>) |
// union(<expr>, <expr>, ...) with labels planar|or|nonor.
EndExpr parse_expr(const std::string& text);
std::string to_string(const EndExpr& e);

struct Violation {
  std::string path;
  std::string message;
};

// A Seq limit label must dominate the labels accumulating at it:
// any non-orientable end in the body forces a non-orientable limit, and any
// genus end in the body forbids a planar limit.
std::vector<Violation> validate_closedness(const EndExpr& e);

// Germ type of a point: its label plus the set of point types accumulating in
// every neighborhood (each with countably many copies). `accum` is sorted,
// unique and closed under membership.
struct GermType {
  EndLabel label = EndLabel::Planar;
  std::vector<GermType> accum;

  int rank() const;
  bool operator==(const GermType&) const;
  bool operator<(const GermType&) const;
};

struct ProfileRow {
  int rank = 0;
  EndLabel label = EndLabel::Planar;
  bool omega = false;       // countably infinite point class
  std::uint64_t count = 0;  // meaningful when !omega
  bool operator==(const ProfileRow&) const = default;
};

struct CanonicalForm {
  // Countable part as a finite multiset of germ types; finite copies of a
  // type already accumulated by a sibling are absorbed.
  std::vector<std::pair<GermType, std::uint64_t>> countable;
  std::vector<EndLabel> cantor;  // sorted, duplicates absorbed

  // Point counts per (Cantor-Bendixson rank, label) of the countable part.
  std::vector<ProfileRow> profile() const;
  bool operator==(const CanonicalForm&) const;
};

struct NormalizeOptions {
  int max_seq_depth = 16;
};

CanonicalForm normalize(const EndExpr& e, NormalizeOptions opts = {});

// Embeds a canonical form back into the expression language; re-normalizing
// the result reproduces the same form.
EndExpr to_expr(const CanonicalForm& form);

enum class Verdict { Homeomorphic, Distinct, Unknown };
const char* verdict_name(Verdict v);

Verdict equivalent(const EndExpr& a, const EndExpr& b, NormalizeOptions opts = {});

struct EndCount {
  bool infinite = false;
  std::uint64_t n = 0;

  static EndCount finite(std::uint64_t k) { return {false, k}; }
  static EndCount inf() { return {true, 0}; }
  EndCount& operator+=(const EndCount& o);
  bool operator==(const EndCount&) const = default;
};

// Cardinality of the subspace of ends labeled or/nonor.
EndCount count_genus_ends(const EndExpr& e);
// Cardinality of the whole end set.
EndCount count_ends(const EndExpr& e);

bool contains_label(const EndExpr& e, EndLabel l);

}  // namespace surfcalc::endspace
