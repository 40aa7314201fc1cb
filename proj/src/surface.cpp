#include "surface.hpp"

#include <json.hpp>

namespace surfcalc::surface {

using endspace::EndCount;

const char* orient_name(OrientClass c) {
  switch (c) {
    case OrientClass::Orientable: return "or";
    case OrientClass::EvenNonorientable: return "even";
    case OrientClass::OddNonorientable: return "odd";
    case OrientClass::InfinitelyNonorientable: return "infnonor";
  }
  return "?";
}

OrientClass parse_orient(const std::string& s) {
  if (s == "or") return OrientClass::Orientable;
  if (s == "even") return OrientClass::EvenNonorientable;
  if (s == "odd") return OrientClass::OddNonorientable;
  if (s == "infnonor") return OrientClass::InfinitelyNonorientable;
  throw endspace::ParseError("unknown orientability class: '" + s + "'");
}

std::vector<Violation> validate_surface(const SurfaceSpec& s) {
  std::vector<Violation> out = endspace::validate_closedness(s.ends);
  EndCount genus_ends = endspace::count_genus_ends(s.ends);
  bool has_genus_end = genus_ends.infinite || genus_ends.n > 0;
  bool has_nonor_end = endspace::contains_label(s.ends, EndLabel::NonorGenus);

  if (s.genus.infinite != has_genus_end) {
    out.push_back({"genus", s.genus.infinite
                                ? "infinite genus requires an end accumulated by genus"
                                : "finite genus forbids ends accumulated by genus"});
  }
  if ((s.orient == OrientClass::InfinitelyNonorientable) != has_nonor_end) {
    out.push_back({"orient", has_nonor_end
                                 ? "non-orientable ends force the infinitely non-orientable class"
                                 : "infinitely non-orientable class requires a non-orientable end"});
  }
  if ((s.orient == OrientClass::EvenNonorientable || s.orient == OrientClass::OddNonorientable) &&
      !s.genus.infinite) {
    out.push_back({"orient", "even/odd non-orientable class requires infinite genus"});
  }
  return out;
}

endspace::Verdict homeomorphic(const SurfaceSpec& a, const SurfaceSpec& b,
                               endspace::NormalizeOptions opts) {
  if (!(a.genus == b.genus) || a.orient != b.orient || a.boundary != b.boundary) {
    return endspace::Verdict::Distinct;
  }
  return endspace::equivalent(a.ends, b.ends, opts);
}

namespace {

std::optional<EndExpr> strip_planar(const EndExpr& e) {
  switch (e.kind()) {
    case EndExpr::Kind::Pt:
      if (e.label() == EndLabel::Planar) return std::nullopt;
      return e;
    case EndExpr::Kind::Cantor:
      if (e.label() == EndLabel::Planar) return std::nullopt;
      return e;
    case EndExpr::Kind::Union: {
      std::vector<EndExpr> kept;
      for (const auto& p : e.parts()) {
        if (auto sub = strip_planar(p)) kept.push_back(std::move(*sub));
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return kept.front();
      return EndExpr::unite(std::move(kept));
    }
    case EndExpr::Kind::Seq: {
      auto body = strip_planar(e.body());
      if (!body) {
        if (e.label() == EndLabel::Planar) return std::nullopt;
        return EndExpr::pt(e.label());
      }
      return EndExpr::seq(std::move(*body), e.label());
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

SurfaceSpec forget_planar(const SurfaceSpec& s) {
  EndCount genus_ends = endspace::count_genus_ends(s.ends);
  if (!genus_ends.infinite && genus_ends.n == 0) {
    throw NoGenusEnds("forget_planar: surface has no ends accumulated by genus");
  }
  auto stripped = strip_planar(s.ends);
  if (!stripped) throw NoGenusEnds("forget_planar: end expression reduced to nothing");
  SurfaceSpec out = s;
  out.ends = std::move(*stripped);
  out.boundary = 0;
  return out;
}

bool alexander_applicable(const FiniteSurface& f) {
  if (f.orientable) return 3 * f.genus - 3 + f.punctures + f.boundary >= 4;
  return f.genus + f.punctures + f.boundary >= 5;
}

bool excluded_for_rigidity(const FiniteSurface& f) {
  if (f.boundary > 0) throw BoundaryNotSupported("excluded_for_rigidity: boundary must be 0");
  if (!f.orientable) return false;
  const std::pair<int, int> excluded[] = {{0, 4}, {1, 1}, {0, 5}, {1, 2}, {0, 6}, {2, 0}};
  for (auto [g, n] : excluded) {
    if (f.genus == g && f.punctures == n) return true;
  }
  return false;
}

bool is_infinite_type(const SurfaceSpec& s) {
  if (s.genus.infinite) return true;
  return endspace::count_ends(s.ends).infinite;
}

SurfaceSpec spec_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  SurfaceSpec s;
  const auto& g = j.at("genus");
  if (g.is_string()) {
    if (g.get<std::string>() != "inf") {
      throw endspace::ParseError("genus must be \"inf\" or a non-negative integer");
    }
    s.genus = Genus::inf();
  } else {
    s.genus = Genus::finite(g.get<std::uint64_t>());
  }
  s.orient = parse_orient(j.at("orient").get<std::string>());
  s.boundary = j.at("boundary").get<std::uint64_t>();
  s.ends = endspace::parse_expr(j.at("ends").get<std::string>());
  return s;
}

std::string spec_to_json(const SurfaceSpec& s) {
  nlohmann::json j;
  if (s.genus.infinite) {
    j["genus"] = "inf";
  } else {
    j["genus"] = s.genus.value;
  }
  j["orient"] = orient_name(s.orient);
  j["boundary"] = s.boundary;
  j["ends"] = endspace::to_string(s.ends);
  return j.dump();
}

FiniteSurface finite_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  FiniteSurface f;
  f.orientable = j.at("orientable").get<bool>();
  f.genus = j.at("genus").get<int>();
  f.punctures = j.at("punctures").get<int>();
  f.boundary = j.at("boundary").get<int>();
  if (!f.orientable && f.genus < 1) {
    throw endspace::ParseError("non-orientable genus counts crosscaps and must be >= 1");
  }
  return f;
}

std::string finite_to_json(const FiniteSurface& f) {
  nlohmann::json j;
  j["orientable"] = f.orientable;
  j["genus"] = f.genus;
  j["punctures"] = f.punctures;
  j["boundary"] = f.boundary;
  return j.dump();
}

}  // namespace surfcalc::surface
