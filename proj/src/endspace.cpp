#include "endspace.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace surfcalc::endspace {

const char* label_name(EndLabel l) {
  switch (l) {
    case EndLabel::Planar: return "planar";
    case EndLabel::OrGenus: return "or";
    case EndLabel::NonorGenus: return "nonor";
  }
  return "?";
}

EndLabel parse_label(const std::string& s) {
  if (s == "planar") return EndLabel::Planar;
  if (s == "or") return EndLabel::OrGenus;
  if (s == "nonor") return EndLabel::NonorGenus;
  throw ParseError("unknown end label: '" + s + "'");
}

EndExpr EndExpr::pt(EndLabel l) {
  EndExpr e;
  e.kind_ = Kind::Pt;
  e.label_ = l;
  return e;
}

EndExpr EndExpr::cantor(EndLabel l) {
  EndExpr e;
  e.kind_ = Kind::Cantor;
  e.label_ = l;
  return e;
}

EndExpr EndExpr::unite(std::vector<EndExpr> parts) {
  if (parts.empty()) throw ParseError("union() needs at least one member");
  EndExpr e;
  e.kind_ = Kind::Union;
  e.kids_ = std::move(parts);
  return e;
}

EndExpr EndExpr::seq(EndExpr body, EndLabel limit) {
  EndExpr e;
  e.kind_ = Kind::Seq;
  e.label_ = limit;
  e.kids_.push_back(std::move(body));
  return e;
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw ParseError("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected identifier at offset " + std::to_string(pos));
    return text.substr(start, pos - start);
  }

  EndExpr expr() {
    std::string head = ident();
    expect('(');
    if (head == "pt") {
      EndLabel l = parse_label(ident());
      expect(')');
      return EndExpr::pt(l);
    }
    if (head == "cantor") {
      EndLabel l = parse_label(ident());
      expect(')');
      return EndExpr::cantor(l);
    }
    if (head == "seq") {
      EndExpr body = expr();
      expect(';');
      std::string key = ident();
      if (key != "limit") throw ParseError("expected 'limit=' in seq()");
      expect('=');
      EndLabel l = parse_label(ident());
      expect(')');
      return EndExpr::seq(std::move(body), l);
    }
    if (head == "union") {
      std::vector<EndExpr> parts;
      parts.push_back(expr());
      while (eat(',')) parts.push_back(expr());
      expect(')');
      return EndExpr::unite(std::move(parts));
    }
    throw ParseError("unknown node kind: '" + head + "'");
  }
};

}  // namespace

EndExpr parse_expr(const std::string& text) {
  Parser p{text};
  EndExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw ParseError("trailing characters at offset " + std::to_string(p.pos));
  }
  return e;
}

std::string to_string(const EndExpr& e) {
  std::ostringstream out;
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
      out << "pt(" << label_name(e.label()) << ")";
      break;
    case EndExpr::Kind::Cantor:
      out << "cantor(" << label_name(e.label()) << ")";
      break;
    case EndExpr::Kind::Seq:
      out << "seq(" << to_string(e.body()) << "; limit=" << label_name(e.label()) << ")";
      break;
    case EndExpr::Kind::Union: {
      out << "union(";
      bool first = true;
      for (const auto& p : e.parts()) {
        if (!first) out << ", ";
        first = false;
        out << to_string(p);
      }
      out << ")";
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Closedness

namespace {

void collect_labels(const EndExpr& e, bool labels[3]) {
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
    case EndExpr::Kind::Cantor:
      labels[static_cast<int>(e.label())] = true;
      break;
    case EndExpr::Kind::Seq:
      labels[static_cast<int>(e.label())] = true;
      collect_labels(e.body(), labels);
      break;
    case EndExpr::Kind::Union:
      for (const auto& p : e.parts()) collect_labels(p, labels);
      break;
  }
}

void check_closedness(const EndExpr& e, const std::string& path, std::vector<Violation>& out) {
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
    case EndExpr::Kind::Cantor:
      break;
    case EndExpr::Kind::Seq: {
      bool labels[3] = {false, false, false};
      collect_labels(e.body(), labels);
      bool has_nonor = labels[static_cast<int>(EndLabel::NonorGenus)];
      bool has_genus = has_nonor || labels[static_cast<int>(EndLabel::OrGenus)];
      if (has_nonor && e.label() != EndLabel::NonorGenus) {
        out.push_back({path, "limit of a sequence containing non-orientable ends must be nonor"});
      } else if (has_genus && e.label() == EndLabel::Planar) {
        out.push_back({path, "limit of a sequence containing genus ends cannot be planar"});
      }
      check_closedness(e.body(), path + ".body", out);
      break;
    }
    case EndExpr::Kind::Union:
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        check_closedness(e.parts()[i], path + "[" + std::to_string(i) + "]", out);
      }
      break;
  }
}

}  // namespace

std::vector<Violation> validate_closedness(const EndExpr& e) {
  std::vector<Violation> out;
  check_closedness(e, "root", out);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

int GermType::rank() const {
  int r = 0;
  for (const auto& t : accum) r = std::max(r, t.rank() + 1);
  return r;
}

namespace {

int compare_types(const GermType& a, const GermType& b) {
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  if (a.accum.size() != b.accum.size()) return a.accum.size() < b.accum.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.accum.size(); ++i) {
    if (int c = compare_types(a.accum[i], b.accum[i])) return c;
  }
  return 0;
}

}  // namespace

bool GermType::operator==(const GermType& o) const { return compare_types(*this, o) == 0; }
bool GermType::operator<(const GermType& o) const { return compare_types(*this, o) < 0; }

bool CanonicalForm::operator==(const CanonicalForm& o) const {
  return countable == o.countable && cantor == o.cantor;
}

namespace {

using TypeMultiset = std::vector<std::pair<GermType, std::uint64_t>>;

void sort_unique_types(std::vector<GermType>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

bool accum_contains(const GermType& t, const GermType& u) {
  return std::binary_search(t.accum.begin(), t.accum.end(), u);
}

void merge_multiset(TypeMultiset& into, const TypeMultiset& from, std::uint64_t factor = 1) {
  for (const auto& [t, n] : from) {
    auto it = std::lower_bound(into.begin(), into.end(), t,
                               [](const auto& p, const GermType& q) { return p.first < q; });
    if (it != into.end() && it->first == t) {
      it->second += n * factor;
    } else {
      into.insert(it, {t, n * factor});
    }
  }
}

// Drop finite copies of a type that some other entry already accumulates.
void absorb(TypeMultiset& m) {
  TypeMultiset kept;
  for (const auto& entry : m) {
    bool absorbed = false;
    for (const auto& other : m) {
      if (accum_contains(other.first, entry.first)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(entry);
  }
  m = std::move(kept);
}

struct NormState {
  TypeMultiset countable;
  std::vector<EndLabel> cantor;
};

NormState normalize_rec(const EndExpr& e, int seq_depth, const NormalizeOptions& opts) {
  switch (e.kind()) {
    case EndExpr::Kind::Pt: {
      NormState s;
      s.countable.push_back({GermType{e.label(), {}}, 1});
      return s;
    }
    case EndExpr::Kind::Cantor: {
      NormState s;
      s.cantor.push_back(e.label());
      return s;
    }
    case EndExpr::Kind::Union: {
      NormState s;
      for (const auto& p : e.parts()) {
        NormState sub = normalize_rec(p, seq_depth, opts);
        merge_multiset(s.countable, sub.countable);
        s.cantor.insert(s.cantor.end(), sub.cantor.begin(), sub.cantor.end());
      }
      std::sort(s.cantor.begin(), s.cantor.end());
      s.cantor.erase(std::unique(s.cantor.begin(), s.cantor.end()), s.cantor.end());
      absorb(s.countable);
      return s;
    }
    case EndExpr::Kind::Seq: {
      if (seq_depth + 1 > opts.max_seq_depth) {
        throw FragmentExceeded("seq nesting exceeds the configured bound of " +
                               std::to_string(opts.max_seq_depth));
      }
      NormState body = normalize_rec(e.body(), seq_depth + 1, opts);
      if (!body.cantor.empty()) {
        throw FragmentExceeded("cantor block inside a seq body is outside the fragment");
      }
      GermType limit;
      limit.label = e.label();
      for (const auto& [t, n] : body.countable) {
        (void)n;
        limit.accum.push_back(t);
        limit.accum.insert(limit.accum.end(), t.accum.begin(), t.accum.end());
      }
      sort_unique_types(limit.accum);
      NormState s;
      s.countable.push_back({std::move(limit), 1});
      return s;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

CanonicalForm normalize(const EndExpr& e, NormalizeOptions opts) {
  if (!validate_closedness(e).empty()) {
    throw std::invalid_argument("normalize: expression violates closedness");
  }
  NormState s = normalize_rec(e, 0, opts);
  CanonicalForm form;
  form.countable = std::move(s.countable);
  form.cantor = std::move(s.cantor);
  return form;
}

std::vector<ProfileRow> CanonicalForm::profile() const {
  // rank/label -> (omega, finite count)
  std::map<std::pair<int, EndLabel>, std::pair<bool, std::uint64_t>> rows;
  auto add_finite = [&](int rank, EndLabel l, std::uint64_t n) {
    auto& cell = rows[{rank, l}];
    cell.second += n;
  };
  auto add_omega = [&](int rank, EndLabel l) { rows[{rank, l}].first = true; };

  for (const auto& [t, n] : countable) {
    add_finite(t.rank(), t.label, n);
    for (const auto& u : t.accum) add_omega(u.rank(), u.label);
  }
  std::vector<ProfileRow> out;
  for (const auto& [key, cell] : rows) {
    out.push_back({key.first, key.second, cell.first, cell.first ? 0 : cell.second});
  }
  return out;
}

namespace {

EndExpr type_to_expr(const GermType& t) {
  if (t.accum.empty()) return EndExpr::pt(t.label);
  std::vector<EndExpr> body;
  for (const auto& u : t.accum) body.push_back(type_to_expr(u));
  EndExpr b = body.size() == 1 ? std::move(body.front()) : EndExpr::unite(std::move(body));
  return EndExpr::seq(std::move(b), t.label);
}

}  // namespace

EndExpr to_expr(const CanonicalForm& form) {
  std::vector<EndExpr> parts;
  for (EndLabel l : form.cantor) parts.push_back(EndExpr::cantor(l));
  for (const auto& [t, n] : form.countable) {
    for (std::uint64_t i = 0; i < n; ++i) parts.push_back(type_to_expr(t));
  }
  if (parts.empty()) throw std::invalid_argument("empty canonical form");
  if (parts.size() == 1) return parts.front();
  return EndExpr::unite(std::move(parts));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Homeomorphic: return "homeomorphic";
    case Verdict::Distinct: return "distinct";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict equivalent(const EndExpr& a, const EndExpr& b, NormalizeOptions opts) {
  try {
    return normalize(a, opts) == normalize(b, opts) ? Verdict::Homeomorphic : Verdict::Distinct;
  } catch (const FragmentExceeded&) {
    return Verdict::Unknown;
  }
}

EndCount& EndCount::operator+=(const EndCount& o) {
  infinite = infinite || o.infinite;
  if (!infinite) n += o.n;
  return *this;
}

namespace {

EndCount count_matching(const EndExpr& e, bool genus_only) {
  auto matches = [&](EndLabel l) { return !genus_only || l != EndLabel::Planar; };
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
      return EndCount::finite(matches(e.label()) ? 1 : 0);
    case EndExpr::Kind::Cantor:
      return matches(e.label()) ? EndCount::inf() : EndCount::finite(0);
    case EndExpr::Kind::Union: {
      EndCount c = EndCount::finite(0);
      for (const auto& p : e.parts()) c += count_matching(p, genus_only);
      return c;
    }
    case EndExpr::Kind::Seq: {
      EndCount body = count_matching(e.body(), genus_only);
      if (body.infinite || body.n > 0) return EndCount::inf();
      return EndCount::finite(matches(e.label()) ? 1 : 0);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

EndCount count_genus_ends(const EndExpr& e) { return count_matching(e, true); }
EndCount count_ends(const EndExpr& e) { return count_matching(e, false); }

bool contains_label(const EndExpr& e, EndLabel l) {
  bool labels[3] = {false, false, false};
  collect_labels(e, labels);
  return labels[static_cast<int>(l)];
}

}  // namespace surfcalc::endspace
