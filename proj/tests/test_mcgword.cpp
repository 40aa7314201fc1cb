#include <doctest.h>

#include <random>

#include "mcgword.hpp"

using namespace surfcalc;
using namespace surfcalc::mcgword;

namespace {

surface::SurfaceSpec spec(const char* genus, const char* orient, const char* ends) {
  surface::SurfaceSpec s;
  s.genus = std::string(genus) == "inf" ? surface::Genus::inf()
                                        : surface::Genus::finite(std::stoull(genus));
  s.orient = surface::parse_orient(orient);
  s.ends = endspace::parse_expr(ends);
  return s;
}

// Exponent sums recomputed by a plain counting loop.
PhiVector counted_phi(const Word& w) {
  PhiVector v;
  for (const auto& g : w.letters) {
    if (g.kind != Generator::Kind::Shift) continue;
    v.coords[g.index] += g.exponent;
    if (v.coords[g.index] == 0) v.coords.erase(g.index);
  }
  return v;
}

Word random_word(std::mt19937_64& rng, int length, int rank) {
  Word w;
  for (int i = 0; i < length; ++i) {
    switch (rng() % 3) {
      case 0:
        w.letters.push_back(Generator::shift(static_cast<int>(rng() % rank), 1));
        break;
      case 1:
        w.letters.push_back(Generator::shift(static_cast<int>(rng() % rank), -1));
        break;
      default:
        w.letters.push_back(
            Generator::compact({"x" + std::to_string(rng() % 5)}, static_cast<int>(rng() % 4)));
        break;
    }
  }
  return w;
}

}  // namespace

TEST_SUITE("mcgword") {

TEST_CASE("word text round trip") {
  const char* texts[] = {
      "c{a}.h0.c{b}.H0",
      "h3.H3.h1",
      "c{a,b|0:1,2:-1}.C{a,b}",
      "c{subst_h0}",
  };
  for (const char* t : texts) {
    CHECK(to_string(parse_word(t)) == t);
  }
  CHECK_THROWS_AS(parse_word(""), endspace::ParseError);
  CHECK_THROWS_AS(parse_word("h0..h1"), endspace::ParseError);
  CHECK_THROWS_AS(parse_word("q5"), endspace::ParseError);
  CHECK_THROWS_AS(parse_word("c{}"), endspace::ParseError);
  CHECK_THROWS_AS(parse_word("h0x"), endspace::ParseError);
}

TEST_CASE("phi is the shift exponent sum") {
  Word w = parse_word("c{a}.h0.h0.c{b}.H1.h2");
  auto v = phi(w, 4);
  CHECK(v.coords == std::map<int, long long>{{0, 2}, {1, -1}, {2, 1}});
  CHECK(psi(w, 0, 4) == 2);
  CHECK(psi(w, 3, 4) == 0);
  CHECK(!kernel_coordinate_test(w, 4));
  CHECK(kernel_coordinate_test(parse_word("c{a}.h0.c{b}.H0"), 4));
  CHECK_THROWS_AS(phi(w, 2), IndexOutOfRange);
  CHECK_THROWS_AS(psi(w, 9, 4), IndexOutOfRange);
}

TEST_CASE("conjugate rewrite pushes compacts left and preserves phi") {
  Word w = parse_word("h0.c{a}.H0.h1.c{b}");
  Word n = conjugate_rewrite(w);
  // Compacts first, annotated with the shift prefix they crossed.
  REQUIRE(n.letters.size() >= 2);
  CHECK(n.letters[0].kind == Generator::Kind::Compact);
  CHECK(n.letters[0].translation == std::map<int, int>{{0, 1}});
  CHECK(n.letters[1].kind == Generator::Kind::Compact);
  CHECK(n.letters[1].translation == std::map<int, int>{{1, 1}});
  CHECK(phi(n, 4).coords == phi(w, 4).coords);
  // The shift tail freely reduces: h0.H0.h1 -> h1.
  CHECK(to_string(n) == "c{a|0:1}.c{b|1:1}.h1");
}

TEST_CASE("free reduction cancels marked inverse pairs only") {
  CHECK(to_string(free_reduce(parse_word("h0.H0"))).empty());
  CHECK(to_string(free_reduce(parse_word("h0.h1.H1.H0"))).empty());
  CHECK(to_string(free_reduce(parse_word("c{a}.C{a}"))).empty());
  CHECK(to_string(free_reduce(parse_word("c{a}.C{b}"))) == "c{a}.C{b}");
  Word w;
  w.letters.push_back(Generator::compact({"a"}, 1));
  Word inv = w;
  inv.letters[0].inverse = true;
  inv.letters[0].pair_id = 2;  // different pairing: must not cancel
  Word both;
  both.letters = {w.letters[0], inv.letters[0]};
  CHECK(free_reduce(both).letters.size() == 2);
}

TEST_CASE("relator insertion and reduction leave phi unchanged") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 1 + rng() % 12, 5);
    auto before = phi(w, 5);
    CHECK(before == counted_phi(w));

    Word inserted = w;
    std::size_t pos = rng() % (w.letters.size() + 1);
    int idx = static_cast<int>(rng() % 5);
    inserted.letters.insert(inserted.letters.begin() + pos, Generator::shift(idx, -1));
    inserted.letters.insert(inserted.letters.begin() + pos, Generator::shift(idx, 1));
    CHECK(phi(inserted, 5) == before);
    CHECK(phi(free_reduce(inserted), 5) == before);
    CHECK(phi(conjugate_rewrite(inserted), 5) == before);
  }
}

TEST_CASE("substitution kills a coordinate unless the window separates") {
  Word w = parse_word("h0.c{a}.h0.h1");
  SupportWindow window;
  window.curves = {"k1", "k2"};
  Word sub = substitute_compact(w, 0, window);
  CHECK(psi(sub, 0, 4) == 0);
  CHECK(psi(sub, 1, 4) == 1);
  CHECK(to_string(sub) == "c{k1,k2,subst_h0}.c{a}.c{k1,k2,subst_h0}.h1");

  window.separated_shifts = {0};
  CHECK_THROWS_AS(substitute_compact(w, 0, window), WindowSeparates);
}

TEST_CASE("cohomology by end count") {
  auto one = cohomology(spec("inf", "or", "pt(or)"), 4);
  CHECK(one.trivial);
  auto two = cohomology(spec("inf", "or", "union(pt(or), pt(or))"), 4);
  CHECK(!two.trivial);
  CHECK(two.rank == endspace::EndCount::finite(1));
  auto cantor = cohomology(spec("inf", "or", "cantor(or)"), 4);
  CHECK(!cantor.trivial);
  CHECK(cantor.rank.infinite);
  // Planar ends do not count, but survive the forgetting step.
  auto planar = cohomology(spec("inf", "or", "union(pt(or), pt(or), cantor(planar))"), 4);
  CHECK(planar.rank == endspace::EndCount::finite(1));

  CHECK_THROWS_AS(cohomology(spec("2", "or", "pt(planar)"), 4), GenusTooSmall);
  CHECK_THROWS_AS(cohomology(spec("2", "or", "pt(or)"), 4), std::invalid_argument);

  CHECK(torsion_abelianization_gate({false, 3, 1, 0}));
  CHECK(!torsion_abelianization_gate({true, 2, 1, 0}));
}

}  // TEST_SUITE
