#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "pathforge/enumerate.hpp"
#include "pathforge/path.hpp"

namespace pathforge {

/// The four doubling constructions.
///   A: Dyck pair + rise from altitude i in p1 + fall from i+1 in p2
///      -> Dyck path of length 4k, middle altitude 2i+2.
///   B: Dyck pair + a vertex at altitude i in each
///      -> Dyck path of length 4k+2, middle altitude 2i+1.
///   C: alternating Motzkin pair + rise/fall marks as in A
///      -> alternating Motzkin path of length 4k, middle altitude 2i+2.
///   D: alternating Motzkin pair + an even-step level at altitude i in p1 and
///      an odd-step level at altitude i in p2
///      -> alternating Motzkin path of length 4k, middle altitude 2i+1.
enum class Construction { A, B, C, D };

std::string_view to_string(Construction c);
Construction parse_construction(std::string_view text);
PathKind kind_of(Construction c);

class BijectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Marks are 1-indexed step numbers for A, C and D, and vertex indices
/// 0..2k for B.
struct FiveTuple {
  Construction construction;
  Path first;
  Path second;
  int altitude;
  int mark1;
  int mark2;

  friend bool operator==(const FiveTuple&, const FiveTuple&) = default;
};

struct MidPath {
  Path path;
  int middle_altitude;

  friend bool operator==(const MidPath&, const MidPath&) = default;
};

/// Throws BijectionError describing the first broken requirement.
void validate(const FiveTuple& t);

MidPath construct(const FiveTuple& t);
FiveTuple invert(Construction c, const Path& path);

inline MidPath construct_a(const FiveTuple& t) { return construct(t); }
inline MidPath construct_b(const FiveTuple& t) { return construct(t); }
inline MidPath construct_c(const FiveTuple& t) { return construct(t); }
inline MidPath construct_d(const FiveTuple& t) { return construct(t); }
inline FiveTuple invert_a(const Path& p) { return invert(Construction::A, p); }
inline FiveTuple invert_b(const Path& p) { return invert(Construction::B, p); }
inline FiveTuple invert_c(const Path& p) { return invert(Construction::C, p); }
inline FiveTuple invert_d(const Path& p) { return invert(Construction::D, p); }

/// Altitude between the two halves (after step length/2).
int middle_altitude(const Path& path);

/// Whether `path` lies in the image of the construction:
/// A: Dyck, length 4k, middle > 0.     B: Dyck, length 4k+2.
/// C: alt. Motzkin, length 4k, middle even and > 0.
/// D: alt. Motzkin, length 4k, middle odd.
bool in_image(Construction c, const Path& path);

/// Admissible marks for a single path, as used by FiveTuple (1-indexed steps
/// or vertex indices). `first` selects the p1 role, otherwise the p2 role.
std::vector<int> admissible_marks(Construction c, const Path& p, int altitude, bool first);

/// Calls f(tuple) for every valid input of the construction at half-length k.
template <class F>
void for_each_input(Construction c, int k, F&& f) {
  const auto paths = collect_paths(kind_of(c), k);
  const int top = c == Construction::B ? k : k - 1;
  for (const auto& p1 : paths) {
    for (const auto& p2 : paths) {
      for (int i = 0; i <= top; ++i) {
        const auto m1 = admissible_marks(c, p1, i, true);
        if (m1.empty()) continue;
        const auto m2 = admissible_marks(c, p2, i, false);
        for (int a : m1) {
          for (int b : m2) f(FiveTuple{c, p1, p2, i, a, b});
        }
      }
    }
  }
}

nlohmann::json to_json(const FiveTuple& t);
/// Reads {construction?, p1, p2, i, mark1, mark2}. `c` is used when the
/// object has no construction field; a conflicting field is an error.
FiveTuple five_tuple_from_json(const nlohmann::json& j, Construction c);
nlohmann::json to_json(const MidPath& m);

}  // namespace pathforge
