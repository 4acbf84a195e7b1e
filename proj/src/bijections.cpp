#include "pathforge/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathforge {

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::A: return "A";
    case Construction::B: return "B";
    case Construction::C: return "C";
    case Construction::D: return "D";
  }
  return "?";
}

Construction parse_construction(std::string_view text) {
  if (text == "A" || text == "a") return Construction::A;
  if (text == "B" || text == "b") return Construction::B;
  if (text == "C" || text == "c") return Construction::C;
  if (text == "D" || text == "d") return Construction::D;
  throw std::invalid_argument("unknown construction '" + std::string(text) + "' (expected A, B, C or D)");
}

PathKind kind_of(Construction c) {
  return c == Construction::A || c == Construction::B ? PathKind::Dyck : PathKind::AltMotzkin;
}

namespace {

using Steps = std::vector<Step>;

[[noreturn]] void internal_error(const std::string& what) {
  throw std::logic_error("bijection invariant broken: " + what);
}

// Nearest rise strictly left of `vertex` that starts at `altitude`.
std::size_t nearest_rise_left(const Steps& s, const std::vector<int>& alt, std::size_t vertex, int altitude) {
  for (std::size_t q = vertex; q-- > 0;) {
    if (s[q] == Step::Rise && alt[q] == altitude) return q;
  }
  internal_error("no rise from altitude " + std::to_string(altitude) + " to the left");
}

// The matching fall of the rise at q: first later step returning to alt[q].
std::size_t closing_fall(const Steps& s, const std::vector<int>& alt, std::size_t q) {
  for (std::size_t t = q + 1; t < s.size(); ++t) {
    if (s[t] == Step::Fall && alt[t + 1] == alt[q]) return t;
  }
  internal_error("rise at step " + std::to_string(q + 1) + " has no closing fall");
}

// Starting at `vertex`, walks left through the nearest rises from altitude
// levels-1, levels-2, ..., 0 and returns their closing falls, highest first.
std::vector<std::size_t> chain_closings(const Steps& s, const std::vector<int>& alt, std::size_t vertex, int levels) {
  std::vector<std::size_t> closings;
  closings.reserve(static_cast<std::size_t>(levels));
  std::size_t pos = vertex;
  for (int j = levels - 1; j >= 0; --j) {
    pos = nearest_rise_left(s, alt, pos, j);
    closings.push_back(closing_fall(s, alt, pos));
  }
  return closings;
}

std::size_t rightmost_rise(const Steps& s, const std::vector<int>& alt, int altitude) {
  for (std::size_t q = s.size(); q-- > 0;) {
    if (s[q] == Step::Rise && alt[q] == altitude) return q;
  }
  internal_error("no rise from altitude " + std::to_string(altitude));
}

// Nearest level step at `altitude` strictly right of t; it is always on an
// even-numbered step.
std::size_t closest_level_right(const Steps& s, const std::vector<int>& alt, std::size_t t, int altitude) {
  for (std::size_t q = t + 1; q < s.size(); ++q) {
    if (s[q] == Step::Level && alt[q] == altitude) {
      if (!is_even_step(q)) internal_error("closest level step is on an odd step");
      return q;
    }
  }
  internal_error("no level step at altitude " + std::to_string(altitude) + " to the right");
}

std::size_t closest_level_left(const Steps& s, const std::vector<int>& alt, std::size_t q, int altitude) {
  for (std::size_t t = q; t-- > 0;) {
    if (s[t] == Step::Level && alt[t] == altitude) return t;
  }
  internal_error("no level step at altitude " + std::to_string(altitude) + " to the left");
}

// --- forward half maps: closed path -> path from 0 up to the middle -------

// A: x is a rise from altitude i. Flips the i+1 closing falls of the chain.
Steps raise_rise(Steps s, std::size_t x, int i) {
  const auto alt = prefix_altitudes(s);
  for (auto t : chain_closings(s, alt, x + 1, i + 1)) s[t] = Step::Rise;
  return s;
}

// B: v is a vertex at altitude i. Flips the i closing falls of the chain
// below v, then inserts a rise at v.
Steps raise_vertex(Steps s, std::size_t v, int i) {
  const auto alt = prefix_altitudes(s);
  for (auto t : chain_closings(s, alt, v, i)) s[t] = Step::Rise;
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(v), Step::Rise);
  return s;
}

// Moves each closing fall onto the nearest level step at its lower altitude
// as a rise, leaving a level step behind. `lowest` is the altitude the first
// closing fall descends to; the rest follow one below each other.
void switch_and_flip(Steps& out, const Steps& s, const std::vector<int>& alt, const std::vector<std::size_t>& closings,
                     int lowest) {
  int j = lowest;
  for (auto t : closings) {
    const auto q = closest_level_right(s, alt, t, j);
    out[t] = Step::Level;
    out[q] = Step::Rise;
    --j;
  }
}

// C: x is a rise from altitude i in an alternating Motzkin path.
Steps raise_alt_rise(const Steps& s, std::size_t x, int i) {
  const auto alt = prefix_altitudes(s);
  Steps out = s;
  switch_and_flip(out, s, alt, chain_closings(s, alt, x + 1, i + 1), i);
  return out;
}

// D: y is an even-step level at altitude i; it becomes a rise, then the
// chain below y is processed as in C.
Steps raise_alt_level(const Steps& s, std::size_t y, int i) {
  const auto alt = prefix_altitudes(s);
  Steps out = s;
  out[y] = Step::Rise;
  switch_and_flip(out, s, alt, chain_closings(s, alt, y, i), i - 1);
  return out;
}

// --- inverse half maps: path from 0 up to the middle -> closed path --------

struct Lowered {
  Steps steps;
  std::size_t mark;  // 0-indexed step, or vertex index for B
  int altitude;
};

std::size_t matching_rise(const Steps& s, std::size_t fall) {
  const auto alt = prefix_altitudes(s);
  return nearest_rise_left(s, alt, fall, alt[fall] - 1);
}

Lowered lower_rise(Steps h) {
  const auto alt = prefix_altitudes(h);
  const int i = (alt.back() - 2) / 2;
  std::vector<std::size_t> flips;
  for (int a = i + 1; a <= 2 * i + 1; ++a) flips.push_back(rightmost_rise(h, alt, a));
  for (auto q : flips) h[q] = Step::Fall;
  const auto x = matching_rise(h, flips.front());
  return {std::move(h), x, i};
}

Lowered lower_vertex(Steps h) {
  const auto alt = prefix_altitudes(h);
  const int i = (alt.back() - 1) / 2;
  const auto inserted = rightmost_rise(h, alt, i);
  std::vector<std::size_t> flips;
  for (int a = i + 1; a <= 2 * i; ++a) flips.push_back(rightmost_rise(h, alt, a));
  for (auto q : flips) h[q] = Step::Fall;
  h.erase(h.begin() + static_cast<std::ptrdiff_t>(inserted));
  return {std::move(h), inserted, i};
}

// Undo of switch_and_flip for the rightmost rises from altitudes
// first..last: each swaps back with its closest level step on the left.
// Returns the restored fall positions, lowest altitude first.
std::vector<std::size_t> unswitch(Steps& h, const std::vector<int>& alt, int first, int last) {
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (int a = first; a <= last; ++a) {
    const auto q = rightmost_rise(h, alt, a);
    moves.emplace_back(q, closest_level_left(h, alt, q, a));
  }
  std::vector<std::size_t> falls;
  for (auto [q, t] : moves) {
    h[q] = Step::Level;
    h[t] = Step::Fall;
    falls.push_back(t);
  }
  return falls;
}

Lowered lower_alt_rise(Steps h) {
  const auto alt = prefix_altitudes(h);
  const int i = (alt.back() - 2) / 2;
  const auto falls = unswitch(h, alt, i + 1, 2 * i + 1);
  const auto x = matching_rise(h, falls.front());
  return {std::move(h), x, i};
}

Lowered lower_alt_level(Steps h) {
  const auto alt = prefix_altitudes(h);
  const int i = (alt.back() - 1) / 2;
  const auto y = rightmost_rise(h, alt, i);
  unswitch(h, alt, i + 1, 2 * i);
  h[y] = Step::Level;
  return {std::move(h), y, i};
}

Steps raise(Construction c, const Steps& s, std::size_t mark0, int i) {
  switch (c) {
    case Construction::A: return raise_rise(s, mark0, i);
    case Construction::B: return raise_vertex(s, mark0, i);
    case Construction::C: return raise_alt_rise(s, mark0, i);
    case Construction::D: return raise_alt_level(s, mark0, i);
  }
  internal_error("unknown construction");
}

Lowered lower(Construction c, Steps h) {
  switch (c) {
    case Construction::A: return lower_rise(std::move(h));
    case Construction::B: return lower_vertex(std::move(h));
    case Construction::C: return lower_alt_rise(std::move(h));
    case Construction::D: return lower_alt_level(std::move(h));
  }
  internal_error("unknown construction");
}

// Converts a FiveTuple mark on a path of length 2k to a 0-indexed position
// and back; mirror_mark reflects it onto the mirrored path.
std::size_t to_index(Construction c, int mark) {
  return c == Construction::B ? static_cast<std::size_t>(mark) : static_cast<std::size_t>(mark - 1);
}
int to_mark(Construction c, std::size_t index) {
  return c == Construction::B ? static_cast<int>(index) : static_cast<int>(index) + 1;
}
std::size_t mirror_index(Construction c, std::size_t index, std::size_t length) {
  return c == Construction::B ? length - index : length - 1 - index;
}

std::string role(bool first) { return first ? "mark1" : "mark2"; }

}  // namespace

std::vector<int> admissible_marks(Construction c, const Path& p, int altitude, bool first) {
  const auto alt = p.altitudes();
  std::vector<int> marks;
  if (c == Construction::B) {
    for (std::size_t v = 0; v < alt.size(); ++v) {
      if (alt[v] == altitude) marks.push_back(static_cast<int>(v));
    }
    return marks;
  }
  for (std::size_t j = 0; j < p.length(); ++j) {
    bool ok = false;
    if (c == Construction::A || c == Construction::C) {
      ok = first ? (p[j] == Step::Rise && alt[j] == altitude) : (p[j] == Step::Fall && alt[j] == altitude + 1);
    } else {
      ok = p[j] == Step::Level && alt[j] == altitude && is_even_step(j) == first;
    }
    if (ok) marks.push_back(static_cast<int>(j) + 1);
  }
  return marks;
}

void validate(const FiveTuple& t) {
  const auto kind = kind_of(t.construction);
  const std::string name = "construction " + std::string(to_string(t.construction));
  if (t.first.kind() != kind || t.second.kind() != kind) {
    throw BijectionError(name + " requires " + std::string(to_string(kind)) + " paths");
  }
  if (t.first.length() != t.second.length()) throw BijectionError(name + ": p1 and p2 differ in length");
  const int k = t.first.half_length();
  if (k < 1) throw BijectionError(name + ": paths must have k >= 1");
  const int top = t.construction == Construction::B ? k : k - 1;
  if (t.altitude < 0 || t.altitude > top) {
    throw BijectionError(name + ": altitude i=" + std::to_string(t.altitude) + " outside 0.." + std::to_string(top));
  }
  auto check = [&](const Path& p, int mark, bool first) {
    const auto marks = admissible_marks(t.construction, p, t.altitude, first);
    if (std::find(marks.begin(), marks.end(), mark) != marks.end()) return;
    std::string want;
    switch (t.construction) {
      case Construction::A:
      case Construction::C:
        want = first ? "a rise from altitude " + std::to_string(t.altitude)
                     : "a fall from altitude " + std::to_string(t.altitude + 1);
        break;
      case Construction::B: want = "a vertex at altitude " + std::to_string(t.altitude); break;
      case Construction::D:
        want = std::string("a level step at altitude ") + std::to_string(t.altitude) +
               (first ? " on an even step" : " on an odd step");
        break;
    }
    throw BijectionError(name + ": " + role(first) + "=" + std::to_string(mark) + " is not " + want);
  };
  check(t.first, t.mark1, true);
  check(t.second, t.mark2, false);
}

int middle_altitude(const Path& path) {
  const auto alt = path.altitudes();
  return alt[path.length() / 2];
}

bool in_image(Construction c, const Path& path) {
  if (path.kind() != kind_of(c) || path.length() < 4) return false;
  const auto len = path.length();
  const int mid = middle_altitude(path);
  switch (c) {
    case Construction::A: return len % 4 == 0 && mid > 0;
    case Construction::B: return len % 4 == 2;
    case Construction::C: return len % 4 == 0 && mid > 0 && mid % 2 == 0;
    case Construction::D: return len % 4 == 0 && mid % 2 == 1;
  }
  return false;
}

MidPath construct(const FiveTuple& t) {
  validate(t);
  const auto c = t.construction;
  const std::size_t length = t.first.length();
  const Steps p1(t.first.steps().begin(), t.first.steps().end());
  const Steps p2m = mirror(t.second.steps());

  Steps out = raise(c, p1, to_index(c, t.mark1), t.altitude);
  const Steps right = mirror(raise(c, p2m, mirror_index(c, to_index(c, t.mark2), length), t.altitude));
  const int middle = prefix_altitudes(out).back();
  out.insert(out.end(), right.begin(), right.end());
  return MidPath{Path::from_steps(std::move(out), kind_of(c)), middle};
}

FiveTuple invert(Construction c, const Path& path) {
  const std::string name = "construction " + std::string(to_string(c));
  if (path.kind() != kind_of(c)) {
    throw BijectionError(name + " inverts " + std::string(to_string(kind_of(c))) + " paths");
  }
  if (!in_image(c, path)) {
    const int mid = path.length() >= 2 ? middle_altitude(path) : 0;
    throw BijectionError(name + ": path " + path.render() + " (length " + std::to_string(path.length()) +
                         ", middle altitude " + std::to_string(mid) + ") is not in the image");
  }
  const std::size_t half = path.length() / 2;
  const auto steps = path.steps();
  Steps left(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(half));
  Steps right_m = mirror(steps.subspan(half));

  auto l1 = lower(c, std::move(left));
  auto l2 = lower(c, std::move(right_m));
  if (l1.altitude != l2.altitude) internal_error("halves disagree on the altitude");

  Path p1 = Path::from_steps(std::move(l1.steps), kind_of(c));
  Path p2 = Path::from_steps(mirror(l2.steps), kind_of(c));
  const int m1 = to_mark(c, l1.mark);
  const int m2 = to_mark(c, mirror_index(c, l2.mark, p2.length()));
  return FiveTuple{c, std::move(p1), std::move(p2), l1.altitude, m1, m2};
}

nlohmann::json to_json(const FiveTuple& t) {
  return nlohmann::json{{"construction", std::string(to_string(t.construction))},
                        {"p1", t.first.render()},
                        {"p2", t.second.render()},
                        {"i", t.altitude},
                        {"mark1", t.mark1},
                        {"mark2", t.mark2}};
}

FiveTuple five_tuple_from_json(const nlohmann::json& j, Construction c) {
  if (!j.is_object()) throw BijectionError("five-tuple JSON must be an object");
  if (j.contains("construction")) {
    const auto named = parse_construction(j.at("construction").get<std::string>());
    if (named != c) {
      throw BijectionError("five-tuple names construction " + std::string(to_string(named)) + " but " +
                           std::string(to_string(c)) + " was requested");
    }
  }
  for (const char* key : {"p1", "p2", "i", "mark1", "mark2"}) {
    if (!j.contains(key)) throw BijectionError(std::string("five-tuple JSON is missing '") + key + "'");
  }
  const auto kind = kind_of(c);
  try {
    return FiveTuple{c,
                     Path::parse(j.at("p1").get<std::string>(), kind),
                     Path::parse(j.at("p2").get<std::string>(), kind),
                     j.at("i").get<int>(),
                     j.at("mark1").get<int>(),
                     j.at("mark2").get<int>()};
  } catch (const nlohmann::json::exception& e) {
    throw BijectionError(std::string("malformed five-tuple JSON: ") + e.what());
  }
}

nlohmann::json to_json(const MidPath& m) {
  return nlohmann::json{{"path", m.path.render()}, {"middle_altitude", m.middle_altitude}};
}

}  // namespace pathforge
