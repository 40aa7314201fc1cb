#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "shiftbasis.hpp"

using namespace surfcalc;
using namespace surfcalc::shiftbasis;
using endspace::EndLabel;
using endspace::parse_expr;

namespace {

surface::SurfaceSpec hat(const char* orient, const char* ends) {
  surface::SurfaceSpec s;
  s.genus = surface::Genus::inf();
  s.orient = surface::parse_orient(orient);
  s.ends = parse_expr(ends);
  return s;
}

// Indicator matrix of the curves' inside sets over the genus ends.
std::vector<std::vector<long long>> indicator_matrix(const GoodBasis& basis) {
  std::vector<std::vector<long long>> m;
  for (const auto& c : basis.curves) {
    std::vector<long long> row(basis.genus_ends.size(), 0);
    for (std::size_t i = 0; i < basis.genus_ends.size(); ++i) {
      for (const auto& e : c.inside) {
        if (e == basis.genus_ends[i]) row[i] = 1;
      }
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_SUITE("shiftbasis") {

TEST_CASE("two-ended ladder yields a single orientable shift") {
  auto basis = good_basis(hat("or", "union(pt(or), pt(or))"), 4);
  REQUIRE(basis.curves.size() == 1);
  CHECK(!basis.ends_infinite);
  CHECK(rank_r(basis) == endspace::EndCount::finite(1));
  auto tree = teg(basis);
  REQUIRE(tree.edges.size() == 1);
  CHECK(tree.edges[0].kind == ShiftKind::Orientable);
  CHECK(nteg(tree).empty());
  CHECK(nteg_connected(tree));
}

TEST_CASE("uniform labels produce a nested chain") {
  auto basis = good_basis(hat("or", "union(pt(or), pt(or), pt(or), pt(or))"), 4);
  CHECK(basis.curves.size() == 3);
  for (std::size_t i = 0; i + 1 < basis.curves.size(); ++i) {
    CHECK(basis.curves[i].inside.size() == i + 1);
  }
  for (const auto& region : complement_regions(basis)) CHECK(region.size() == 1);
  CHECK_NOTHROW(teg(basis));
}

TEST_CASE("mixed labels keep the non-orientable ends connected") {
  auto basis = good_basis(hat("infnonor", "union(pt(or), pt(nonor), pt(nonor))"), 4);
  CHECK(basis.curves.size() == 2);
  auto tree = teg(basis);
  std::set<ShiftKind> kinds;
  for (const auto& e : tree.edges) kinds.insert(e.kind);
  CHECK(kinds.count(ShiftKind::Nonorientable) == 1);
  CHECK(nteg_connected(tree));
  for (const auto& region : complement_regions(basis)) CHECK(region.size() == 1);

  auto big = good_basis(
      hat("infnonor",
          "union(seq(pt(nonor); limit=nonor), pt(or), cantor(nonor), union(pt(or), pt(nonor)))"),
      3);
  auto big_tree = teg(big);
  CHECK(nteg_connected(big_tree));
  for (const auto& region : complement_regions(big)) CHECK(region.size() == 1);
}

TEST_CASE("truncation depth controls the visible end set") {
  auto cantor = good_basis(hat("or", "cantor(or)"), 4);
  CHECK(cantor.genus_ends.size() == 4);
  CHECK(cantor.curves.size() == 3);
  CHECK(cantor.ends_infinite);
  CHECK(rank_r(cantor) == endspace::EndCount::inf());

  auto seq2 = good_basis(hat("infnonor", "seq(pt(nonor); limit=nonor)"), 2);
  auto seq5 = good_basis(hat("infnonor", "seq(pt(nonor); limit=nonor)"), 5);
  CHECK(seq2.genus_ends.size() == 3);
  CHECK(seq5.genus_ends.size() == 6);
  CHECK(seq5.curves.size() == 5);
}

TEST_CASE("rank agrees with the row-reduction oracle") {
  const char* suites[] = {
      "union(pt(or), pt(or))",
      "union(pt(or), pt(or), pt(or), pt(or), pt(or))",
      "union(pt(nonor), pt(nonor), pt(nonor))",
  };
  for (const char* ends : suites) {
    bool nonor = std::string(ends).find("nonor") != std::string::npos;
    auto basis = good_basis(hat(nonor ? "infnonor" : "or", ends), 4);
    auto r = rank_r(basis);
    REQUIRE(!r.infinite);
    CHECK(r.n == static_cast<std::uint64_t>(oracles::integer_matrix_rank(indicator_matrix(basis))));
    CHECK(r.n == basis.genus_ends.size() - 1);
  }
}

TEST_CASE("degenerate inputs are refused") {
  CHECK_THROWS_AS(good_basis(hat("or", "pt(or)"), 4), FewerThanTwoGenusEnds);
  CHECK_THROWS_AS(good_basis(hat("or", "union(pt(or), pt(planar))"), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(good_basis(hat("or", "union(pt(or), pt(or))"), 0), std::invalid_argument);
}

TEST_CASE("dot output lists vertices and shift kinds") {
  auto basis = good_basis(hat("infnonor", "union(pt(or), pt(nonor), pt(nonor))"), 4);
  auto tree = teg(basis);
  auto dot = graph_dot(tree, GraphSel::TEG);
  CHECK(dot.find("graph TEG {") == 0);
  CHECK(dot.find("kind=\"nonor\"") != std::string::npos);
  auto nt = graph_dot(tree, GraphSel::NTEG);
  CHECK(nt.find("kind=\"semi\"") == std::string::npos);
  auto eg = graph_dot(tree, GraphSel::EG);
  CHECK(eg.find("kind=") == std::string::npos);
}

TEST_CASE("strip relation holds and its broken variant fails") {
  CHECK(dyck_normal_form({Token::Handle, Token::Handle}) ==
        std::vector<Token>{Token::Handle, Token::Handle});
  CHECK(dyck_normal_form({Token::Handle, Token::Crosscap}) ==
        std::vector<Token>{Token::Crosscap, Token::Crosscap, Token::Crosscap});

  for (int w : {4, 5, 8, 16}) {
    CAPTURE(w);
    CHECK(strip_relation_check(w));
    CHECK(!strip_relation_check_broken(w));
  }
  CHECK_THROWS_AS(strip_relation_check(3), WindowTooSmall);
}

}  // TEST_SUITE
