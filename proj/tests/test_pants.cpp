#include <doctest.h>

#include <algorithm>

#include "pants.hpp"

using namespace surfcalc;
using namespace surfcalc::pants;
using surface::FiniteSurface;

namespace {

// Chain of pants: p0 -c0- p1 -c1- p2 -c2- p3 with the free legs filled by
// puncture stubs; the closed-up surface is a sphere with 6 punctures per
// extra pants pair.
PantsDecomposition chain(int pants) {
  PantsDecomposition pd;
  pd.num_pants = pants;
  for (int i = 0; i + 1 < pants; ++i) pd.two_sided.push_back({i, i, i + 1, false});
  for (int i = 0; i < pants; ++i) {
    int legs_used = (i > 0) + (i + 1 < pants);
    for (int s = legs_used; s < 3; ++s) pd.stubs.push_back({i, StubKind::Puncture});
  }
  return pd;
}

}  // namespace

TEST_SUITE("pants") {

TEST_CASE("validation accepts hand-built decompositions") {
  // Four-punctured sphere: two pants along one curve.
  CHECK(validate_pants(chain(2), {true, 0, 4, 0}).empty());

  // Once-punctured torus: one pants, self-glued.
  PantsDecomposition torus;
  torus.num_pants = 1;
  torus.two_sided.push_back({0, 0, 0, false});
  torus.stubs.push_back({0, StubKind::Puncture});
  CHECK(validate_pants(torus, {true, 1, 1, 0}).empty());
  CHECK(!is_separating(0, torus));

  // Twice-punctured projective plane: one pants with a one-sided curve.
  PantsDecomposition proj;
  proj.num_pants = 1;
  proj.one_sided.push_back({0, 0});
  proj.stubs.push_back({0, StubKind::Puncture});
  proj.stubs.push_back({0, StubKind::Puncture});
  CHECK(validate_pants(proj, {false, 1, 2, 0}).empty());
  CHECK(!is_separating(0, proj));
}

TEST_CASE("validation flags mismatched gluings") {
  auto pd = chain(2);
  CHECK(!validate_pants(pd, {true, 0, 5, 0}).empty());   // wrong pants count
  CHECK(!validate_pants(pd, {false, 1, 3, 0}).empty());  // orientability mismatch
  pd.stubs.pop_back();
  CHECK(!validate_pants(pd, {true, 0, 4, 0}).empty());   // leg count broken
  auto pd2 = chain(2);
  pd2.stubs.back().second = StubKind::Boundary;
  CHECK(!validate_pants(pd2, {true, 0, 4, 0}).empty());  // stub totals per kind
}

TEST_CASE("orientability of the glued surface") {
  auto pd = chain(3);
  CHECK(glues_orientable(pd));
  // A reversing flag on a chain edge is a gauge artifact, still orientable.
  pd.two_sided[0].reversing = true;
  CHECK(glues_orientable(pd));
  // A reversing self-gluing is a Klein-bottle handle.
  PantsDecomposition klein;
  klein.num_pants = 1;
  klein.two_sided.push_back({0, 0, 0, true});
  klein.stubs.push_back({0, StubKind::Puncture});
  CHECK(!glues_orientable(klein));
  // One-sided curves always obstruct orientability.
  PantsDecomposition onesided;
  onesided.num_pants = 1;
  onesided.one_sided.push_back({0, 0});
  onesided.stubs.push_back({0, StubKind::Puncture});
  onesided.stubs.push_back({0, StubKind::Puncture});
  CHECK(!glues_orientable(onesided));
}

TEST_CASE("separating, outer and cut vertices agree on a chain") {
  auto pd = chain(4);  // curves c0, c1, c2; c1 is the interesting one
  for (int c = 0; c < 3; ++c) CHECK(is_separating(c, pd));
  CHECK(is_outer(0, pd));
  CHECK(is_outer(2, pd));
  CHECK(!is_outer(1, pd));

  auto graph = adjacency_graph(pd);
  CHECK(graph.vertices == std::vector<int>{0, 1, 2});
  CHECK(graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  auto report = cut_vertex_check(pd);
  CHECK(report.cut_vertices == std::vector<int>{1});
  CHECK(report.non_outer_separating == std::vector<int>{1});
  CHECK(report.coincide);
}

TEST_CASE("enumeration matches hand counts on small surfaces") {
  CHECK(enumerate_pants_decompositions({true, 0, 4, 0}, 100).size() == 1);
  CHECK(enumerate_pants_decompositions({true, 1, 1, 0}, 100).size() == 1);
  CHECK(enumerate_pants_decompositions({false, 1, 2, 0}, 100).size() == 1);
  CHECK(enumerate_pants_decompositions({true, 0, 5, 0}, 100).size() == 1);
  CHECK(enumerate_pants_decompositions({true, 2, 0, 0}, 100).size() == 2);
  CHECK(enumerate_pants_decompositions({true, 0, 3, 1}, 100).size() == 1);

  for (const auto& pd : enumerate_pants_decompositions({false, 3, 1, 0}, 1000)) {
    CHECK(validate_pants(pd, {false, 3, 1, 0}).empty());
    CHECK(cut_vertex_check(pd).coincide);
  }

  CHECK(enumerate_pants_decompositions({true, 0, 10, 0}, 5).size() == 5);  // truncation
  CHECK_THROWS_AS(enumerate_pants_decompositions({true, 4, 3, 0}, 10), TooLarge);
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_pants_decompositions({false, 2, 2, 0}, 1000);
  auto b = enumerate_pants_decompositions({false, 2, 2, 0}, 1000);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].num_pants == b[i].num_pants);
    CHECK(a[i].two_sided.size() == b[i].two_sided.size());
    CHECK(a[i].one_sided.size() == b[i].one_sided.size());
  }
}

}  // TEST_SUITE
