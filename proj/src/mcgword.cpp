#include "mcgword.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace surfcalc::mcgword {

using endspace::ParseError;

Generator Generator::compact(std::vector<std::string> support, int pair_id) {
  Generator g;
  g.kind = Kind::Compact;
  g.support = std::move(support);
  g.pair_id = pair_id;
  return g;
}

Generator Generator::shift(int index, int exponent) {
  if (exponent != 1 && exponent != -1) {
    throw std::invalid_argument("shift exponent must be +1 or -1");
  }
  Generator g;
  g.kind = Kind::Shift;
  g.index = index;
  g.exponent = exponent;
  return g;
}

bool PhiVector::zero() const {
  for (const auto& [i, v] : coords) {
    (void)i;
    if (v != 0) return false;
  }
  return true;
}

PhiVector& PhiVector::operator+=(const PhiVector& o) {
  for (const auto& [i, v] : o.coords) {
    coords[i] += v;
    if (coords[i] == 0) coords.erase(i);
  }
  return *this;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char take() { return s[pos++]; }
};

int parse_int(Cursor& c) {
  std::size_t start = c.pos;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) c.take();
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
  if (c.pos == start) throw ParseError("expected an integer in word at offset " +
                                       std::to_string(start));
  return std::stoi(c.s.substr(start, c.pos - start));
}

Generator parse_compact(Cursor& c, bool inverse) {
  Generator g;
  g.kind = Generator::Kind::Compact;
  g.inverse = inverse;
  if (c.done() || c.take() != '{') throw ParseError("expected '{' after compact letter");
  std::string id;
  bool in_translation = false;
  auto flush = [&] {
    if (id.empty()) throw ParseError("empty support id in compact letter");
    g.support.push_back(id);
    id.clear();
  };
  while (true) {
    if (c.done()) throw ParseError("unterminated compact letter");
    char ch = c.take();
    if (ch == '}') {
      if (!in_translation) flush();
      break;
    }
    if (ch == '|' && !in_translation) {
      flush();
      in_translation = true;
      while (true) {
        int idx = parse_int(c);
        if (c.done() || c.take() != ':') throw ParseError("expected ':' in translation");
        g.translation[idx] = parse_int(c);
        if (c.done()) throw ParseError("unterminated compact letter");
        char sep = c.take();
        if (sep == '}') return g;
        if (sep != ',') throw ParseError("expected ',' or '}' in translation");
      }
    }
    if (ch == ',') {
      flush();
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '*') {
      id.push_back(ch);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "' in compact letter");
  }
  return g;
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string piece = text.substr(start, dot == std::string::npos ? dot : dot - start);
    if (piece.empty()) throw ParseError("empty letter in word");
    Cursor c{piece, 0};
    char head = c.take();
    if (head == 'h' || head == 'H') {
      Generator g = Generator::shift(parse_int(c), head == 'h' ? 1 : -1);
      if (!c.done()) throw ParseError("trailing characters after shift letter");
      w.letters.push_back(g);
    } else if (head == 'c' || head == 'C') {
      w.letters.push_back(parse_compact(c, head == 'C'));
      if (!c.done()) throw ParseError("trailing characters after compact letter");
    } else {
      throw ParseError(std::string("unknown letter '") + piece + "'");
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : w.letters) {
    if (!first) os << '.';
    first = false;
    if (g.kind == Generator::Kind::Shift) {
      os << (g.exponent > 0 ? 'h' : 'H') << g.index;
    } else {
      os << (g.inverse ? 'C' : 'c') << '{';
      for (std::size_t i = 0; i < g.support.size(); ++i) {
        if (i) os << ',';
        os << g.support[i];
      }
      if (!g.translation.empty()) {
        os << '|';
        bool tf = true;
        for (const auto& [idx, off] : g.translation) {
          if (!tf) os << ',';
          tf = false;
          os << idx << ':' << off;
        }
      }
      os << '}';
    }
  }
  return os.str();
}

PhiVector phi(const Word& w, int rank) {
  PhiVector v;
  for (const auto& g : w.letters) {
    if (g.kind != Generator::Kind::Shift) continue;
    if (g.index < 0 || g.index >= rank) {
      throw IndexOutOfRange("phi: shift index " + std::to_string(g.index) +
                            " outside basis of rank " + std::to_string(rank));
    }
    v.coords[g.index] += g.exponent;
    if (v.coords[g.index] == 0) v.coords.erase(g.index);
  }
  return v;
}

long long psi(const Word& w, int i, int rank) {
  if (i < 0 || i >= rank) {
    throw IndexOutOfRange("psi: coordinate " + std::to_string(i) + " outside rank " +
                          std::to_string(rank));
  }
  PhiVector v = phi(w, rank);
  auto it = v.coords.find(i);
  return it == v.coords.end() ? 0 : it->second;
}

Word conjugate_rewrite(const Word& w) {
  Word out;
  std::map<int, int> prefix;  // shift exponents seen so far
  std::vector<Generator> shifts;
  for (const auto& g : w.letters) {
    if (g.kind == Generator::Kind::Shift) {
      prefix[g.index] += g.exponent;
      shifts.push_back(g);
    } else {
      Generator c = g;
      for (const auto& [idx, off] : prefix) {
        if (off != 0) c.translation[idx] += off;
        if (c.translation.count(idx) && c.translation[idx] == 0) c.translation.erase(idx);
      }
      out.letters.push_back(std::move(c));
    }
  }
  // Freely reduce the shift tail.
  std::vector<Generator> reduced;
  for (const auto& g : shifts) {
    if (!reduced.empty() && reduced.back().index == g.index &&
        reduced.back().exponent == -g.exponent) {
      reduced.pop_back();
    } else {
      reduced.push_back(g);
    }
  }
  out.letters.insert(out.letters.end(), reduced.begin(), reduced.end());
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Generator> stack;
  for (const auto& g : w.letters) {
    bool cancel = false;
    if (!stack.empty()) {
      const Generator& top = stack.back();
      if (top.kind == Generator::Kind::Shift && g.kind == Generator::Kind::Shift) {
        cancel = top.index == g.index && top.exponent == -g.exponent;
      } else if (top.kind == Generator::Kind::Compact && g.kind == Generator::Kind::Compact) {
        cancel = top.pair_id == g.pair_id && top.inverse != g.inverse &&
                 top.support == g.support && top.translation == g.translation;
      }
    }
    if (cancel) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return Word{std::move(stack)};
}

Word substitute_compact(const Word& w, int i, const SupportWindow& window) {
  if (window.separated_shifts.count(i)) {
    throw WindowSeparates("substitute_compact: window separates the ends of shift " +
                          std::to_string(i));
  }
  Word out;
  for (const auto& g : w.letters) {
    if (g.kind == Generator::Kind::Shift && g.index == i) {
      Generator c;
      c.kind = Generator::Kind::Compact;
      c.support = window.curves;
      c.support.push_back("subst_h" + std::to_string(i));
      c.inverse = g.exponent < 0;
      out.letters.push_back(std::move(c));
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

bool kernel_coordinate_test(const Word& w, int rank) { return phi(w, rank).zero(); }

CohomologyResult cohomology(const surface::SurfaceSpec& s, int depth) {
  auto viol = surface::validate_surface(s);
  if (!viol.empty()) {
    throw std::invalid_argument("cohomology: invalid surface spec: " + viol.front().message);
  }
  if (!s.genus.infinite && s.genus.value < 3) {
    throw GenusTooSmall("cohomology: the argument needs genus at least 3");
  }
  auto genus_ends = endspace::count_genus_ends(s.ends);
  if (!genus_ends.infinite && genus_ends.n <= 1) {
    return CohomologyResult{true, {}};
  }
  auto basis = shiftbasis::good_basis(surface::forget_planar(s), depth);
  return CohomologyResult{false, shiftbasis::rank_r(basis)};
}

bool torsion_abelianization_gate(const surface::FiniteSurface& f) { return f.genus >= 3; }

}  // namespace surfcalc::mcgword
