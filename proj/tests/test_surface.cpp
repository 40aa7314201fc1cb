#include <doctest.h>

#include "surface.hpp"

using namespace surfcalc;
using namespace surfcalc::surface;
using endspace::EndExpr;
using endspace::EndLabel;
using endspace::parse_expr;
using endspace::Verdict;

namespace {

SurfaceSpec spec(const char* genus, const char* orient, std::uint64_t boundary,
                 const char* ends) {
  SurfaceSpec s;
  s.genus = std::string(genus) == "inf" ? Genus::inf() : Genus::finite(std::stoull(genus));
  s.orient = parse_orient(orient);
  s.boundary = boundary;
  s.ends = parse_expr(ends);
  return s;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("spec validation couples genus, orientability and ends") {
  CHECK(validate_surface(spec("inf", "or", 0, "union(pt(or), pt(or))")).empty());
  CHECK(validate_surface(spec("0", "or", 0, "pt(planar)")).empty());
  CHECK(validate_surface(spec("inf", "infnonor", 0, "pt(nonor)")).empty());
  CHECK(validate_surface(spec("inf", "even", 0, "pt(or)")).empty());
  CHECK(validate_surface(spec("inf", "odd", 2, "pt(or)")).empty());

  // Finite genus with a genus end, and vice versa.
  CHECK(!validate_surface(spec("2", "or", 0, "pt(or)")).empty());
  CHECK(!validate_surface(spec("inf", "or", 0, "pt(planar)")).empty());
  // A non-orientable end forces the infinitely non-orientable class.
  CHECK(!validate_surface(spec("inf", "or", 0, "pt(nonor)")).empty());
  CHECK(!validate_surface(spec("inf", "infnonor", 0, "pt(or)")).empty());
  // Even/odd classes need infinite genus.
  CHECK(!validate_surface(spec("3", "even", 0, "pt(planar)")).empty());
  // Closedness violations surface through spec validation too.
  CHECK(!validate_surface(spec("inf", "or", 0, "seq(pt(or); limit=planar)")).empty());
}

TEST_CASE("homeomorphy verdicts") {
  auto ladder = spec("inf", "or", 0, "union(pt(or), pt(or))");
  auto ladder2 = spec("inf", "or", 0, "union(pt(or), union(pt(or)))");
  auto loch = spec("inf", "or", 0, "pt(or)");
  CHECK(homeomorphic(ladder, ladder2) == Verdict::Homeomorphic);
  CHECK(homeomorphic(ladder, loch) == Verdict::Distinct);
  CHECK(homeomorphic(ladder, spec("inf", "even", 0, "union(pt(or), pt(or))")) ==
        Verdict::Distinct);
  CHECK(homeomorphic(ladder, spec("inf", "or", 1, "union(pt(or), pt(or))")) ==
        Verdict::Distinct);
}

TEST_CASE("forget_planar strips planar ends and caps boundary") {
  auto s = spec("inf", "or", 2, "union(cantor(planar), pt(or), seq(pt(planar); limit=or))");
  auto hat = forget_planar(s);
  CHECK(hat.boundary == 0);
  CHECK(endspace::to_string(hat.ends) == "union(pt(or), pt(or))");

  auto t = spec("inf", "infnonor", 0, "seq(union(pt(planar), pt(nonor)); limit=nonor)");
  CHECK(endspace::to_string(forget_planar(t).ends) == "seq(pt(nonor); limit=nonor)");

  CHECK_THROWS_AS(forget_planar(spec("0", "or", 0, "cantor(planar)")), NoGenusEnds);
}

TEST_CASE("finite-type thresholds and exclusions") {
  CHECK(alexander_applicable({true, 1, 2, 2}));    // 3g-3+n+b = 4
  CHECK(!alexander_applicable({true, 1, 2, 1}));   // 3
  CHECK(alexander_applicable({false, 2, 2, 1}));   // g+n+b = 5
  CHECK(!alexander_applicable({false, 2, 2, 0}));  // 4

  CHECK(excluded_for_rigidity({true, 0, 4, 0}));
  CHECK(excluded_for_rigidity({true, 1, 1, 0}));
  CHECK(excluded_for_rigidity({true, 2, 0, 0}));
  CHECK(!excluded_for_rigidity({true, 0, 7, 0}));
  CHECK(!excluded_for_rigidity({false, 2, 0, 0}));
  CHECK_THROWS_AS(excluded_for_rigidity({true, 0, 4, 1}), BoundaryNotSupported);
}

TEST_CASE("infinite type detection") {
  CHECK(is_infinite_type(spec("inf", "or", 0, "pt(or)")));
  CHECK(is_infinite_type(spec("0", "or", 0, "cantor(planar)")));
  CHECK(!is_infinite_type(spec("2", "or", 0, "union(pt(planar), pt(planar))")));
}

TEST_CASE("JSON round trips") {
  const char* text =
      "{\"genus\":\"inf\",\"orient\":\"infnonor\",\"boundary\":1,"
      "\"ends\":\"union(pt(nonor), cantor(planar))\"}";
  auto s = spec_from_json(text);
  CHECK(s.genus.infinite);
  CHECK(s.orient == OrientClass::InfinitelyNonorientable);
  CHECK(s.boundary == 1);
  auto again = spec_from_json(spec_to_json(s));
  CHECK(again.ends == s.ends);
  CHECK(again.orient == s.orient);

  auto f = finite_from_json("{\"orientable\":false,\"genus\":3,\"punctures\":1,\"boundary\":0}");
  CHECK(f.euler_characteristic() == -2);
  CHECK(finite_from_json(finite_to_json(f)) == f);

  CHECK_THROWS_AS(spec_from_json("{\"genus\":\"lots\"}"), endspace::ParseError);
  CHECK_THROWS(spec_from_json("not json"));
  CHECK_THROWS_AS(
      finite_from_json("{\"orientable\":false,\"genus\":0,\"punctures\":4,\"boundary\":0}"),
      endspace::ParseError);
}

}  // TEST_SUITE
