#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathforge {

enum class Step : std::uint8_t { Rise, Fall, Level };

enum class PathKind { Dyck, AltMotzkin };

char to_char(Step s);
int delta(Step s);
std::string_view to_string(PathKind kind);
PathKind parse_kind(std::string_view text);

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Positions are 1-indexed in every message and in every API that speaks of
// "step numbers"; storage is 0-indexed. Parity rules for alternating Motzkin
// paths use the 1-indexed position.
inline bool is_even_step(std::size_t index0) { return (index0 + 1) % 2 == 0; }

/// Returns a description of the first violated rule, or nullopt if `steps`
/// is a valid path of the given kind.
std::optional<std::string> validation_error(std::span<const Step> steps, PathKind kind);

/// A validated Dyck or alternating Motzkin path of even length 2k.
class Path {
 public:
  static Path from_steps(std::vector<Step> steps, PathKind kind);
  /// Text over {U, D, L}; surrounding whitespace is ignored.
  static Path parse(std::string_view text, PathKind kind);

  /// The empty path of the given kind (k = 0).
  static Path empty(PathKind kind) { return Path({}, kind); }

  std::string render() const;

  PathKind kind() const { return kind_; }
  std::span<const Step> steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  int half_length() const { return static_cast<int>(steps_.size() / 2); }

  Step operator[](std::size_t index0) const { return steps_[index0]; }
  /// 1-indexed access.
  Step step_number(std::size_t position) const { return steps_.at(position - 1); }

  /// Altitude at each of the length()+1 vertices.
  std::vector<int> altitudes() const;
  int rise_count() const;

  friend bool operator==(const Path& a, const Path& b) { return a.steps_ == b.steps_; }

 private:
  Path(std::vector<Step> steps, PathKind kind) : steps_(std::move(steps)), kind_(kind) {}

  std::vector<Step> steps_;
  PathKind kind_;
};

std::vector<Step> parse_steps(std::string_view text);
std::string render_steps(std::span<const Step> steps);

/// Reverses the step order and swaps rises with falls.
std::vector<Step> mirror(std::span<const Step> steps);

std::vector<int> prefix_altitudes(std::span<const Step> steps, int start = 0);

}  // namespace pathforge

template <>
struct std::hash<pathforge::Path> {
  std::size_t operator()(const pathforge::Path& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : p.steps()) {
      h ^= static_cast<std::size_t>(s) + 1;
      h *= 1099511628211ull;
    }
    return h ^ p.length();
  }
};
