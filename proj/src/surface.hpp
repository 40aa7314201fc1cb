#pragma once

// Invariant tuples for infinite-type surfaces (genus, orientability class,
// boundary count, end space) and elementary numerology of finite-type ones.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endspace.hpp"

namespace surfcalc::surface {

using endspace::EndExpr;
using endspace::EndLabel;
using endspace::Violation;

enum class OrientClass { Orientable, EvenNonorientable, OddNonorientable, InfinitelyNonorientable };

const char* orient_name(OrientClass c);          // "or" | "even" | "odd" | "infnonor"
OrientClass parse_orient(const std::string& s);

struct Genus {
  bool infinite = false;
  std::uint64_t value = 0;

  static Genus finite(std::uint64_t g) { return {false, g}; }
  static Genus inf() { return {true, 0}; }
  bool operator==(const Genus&) const = default;
};

struct SurfaceSpec {
  Genus genus;
  OrientClass orient = OrientClass::Orientable;
  std::uint64_t boundary = 0;
  EndExpr ends = EndExpr::pt(EndLabel::Planar);
};

struct FiniteSurface {
  bool orientable = true;
  int genus = 0;      // handles when orientable, crosscaps otherwise
  int punctures = 0;
  int boundary = 0;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - punctures - boundary : 2 - genus - punctures - boundary;
  }
  bool operator==(const FiniteSurface&) const = default;
};

struct NoGenusEnds : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundaryNotSupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Violation> validate_surface(const SurfaceSpec& s);

endspace::Verdict homeomorphic(const SurfaceSpec& a, const SurfaceSpec& b,
                               endspace::NormalizeOptions opts = {});

// The surface obtained by deleting every planar end and capping boundary.
SurfaceSpec forget_planar(const SurfaceSpec& s);

// True iff the finite-type Alexander method applies to the signature.
bool alexander_applicable(const FiniteSurface& f);

// True iff the surface is on the finite list excluded from curve-graph
// rigidity: S_{0,4}, S_{1,1}, S_{0,5}, S_{1,2}, S_{0,6}, S_{2,0}.
bool excluded_for_rigidity(const FiniteSurface& f);

bool is_infinite_type(const SurfaceSpec& s);

// JSON: {"genus": "inf"|int, "orient": "or"|"even"|"odd"|"infnonor",
//        "boundary": int, "ends": "<end expression>"}
SurfaceSpec spec_from_json(const std::string& json_text);
std::string spec_to_json(const SurfaceSpec& s);

// JSON: {"orientable": bool, "genus": int, "punctures": int, "boundary": int}
FiniteSurface finite_from_json(const std::string& json_text);
std::string finite_to_json(const FiniteSurface& f);

}  // namespace surfcalc::surface
