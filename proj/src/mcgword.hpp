#pragma once

// Words over compactly supported mapping classes and handle-shift letters,
// the exponent-sum homomorphism onto Z^r, the conjugation and substitution
// rewrites, and the first-cohomology report derived from the shift basis.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftbasis.hpp"
#include "surface.hpp"

namespace surfcalc::mcgword {

struct Generator {
  enum class Kind { Compact, Shift };
  Kind kind = Kind::Compact;

  // Compact letters: opaque support ids, an accumulated translation along
  // shift strips (shift index -> offset), a formal-inverse flag and a pairing
  // id so free reduction cancels a letter only against its own inverse.
  std::vector<std::string> support;
  std::map<int, int> translation;
  bool inverse = false;
  int pair_id = 0;

  // Shift letters.
  int index = 0;
  int exponent = 1;  // +1 or -1

  static Generator compact(std::vector<std::string> support, int pair_id = 0);
  static Generator shift(int index, int exponent);
  bool operator==(const Generator&) const = default;
};

struct Word {
  std::vector<Generator> letters;
  bool operator==(const Word&) const = default;
};

struct PhiVector {
  std::map<int, long long> coords;  // finitely supported

  bool zero() const;
  bool operator==(const PhiVector&) const = default;
  PhiVector& operator+=(const PhiVector& o);
};

struct CohomologyResult {
  bool trivial = false;
  endspace::EndCount rank;  // meaningful when !trivial
  bool operator==(const CohomologyResult&) const = default;
};

struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowSeparates : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenusTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format: letters separated by '.', with h<i> / H<i> for the shift with
// exponent +1 / -1 and c{a,b,...} for a compact letter. A translated compact
// renders as c{a,b|0:1,2:-1} and a formal inverse with a leading C.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

PhiVector phi(const Word& w, int rank);
long long psi(const Word& w, int i, int rank);

// Pushes every compact letter to the front, conjugating it through the shift
// prefix it crosses (recorded in its translation), then freely reduces the
// remaining shift letters. Preserves phi.
Word conjugate_rewrite(const Word& w);

// Cancels adjacent inverse pairs (shift letters with opposite exponents,
// compact letters against their own marked inverse) until stable.
Word free_reduce(const Word& w);

struct SupportWindow {
  std::vector<std::string> curves;
  std::set<int> separated_shifts;  // shift indices whose end pair it splits
};

// Replaces every letter of shift i by a compact letter supported on the
// window; requires the window not to separate the shift's ends.
Word substitute_compact(const Word& w, int i, const SupportWindow& window);

bool kernel_coordinate_test(const Word& w, int rank);

CohomologyResult cohomology(const surface::SurfaceSpec& s, int depth);

// True iff the finite-type abelianization torsion argument applies: genus at
// least 3, for either orientability.
bool torsion_abelianization_gate(const surface::FiniteSurface& f);

}  // namespace surfcalc::mcgword
