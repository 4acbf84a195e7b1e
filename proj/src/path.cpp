#include "pathforge/path.hpp"

#include <algorithm>
#include <cctype>

namespace pathforge {

char to_char(Step s) {
  switch (s) {
    case Step::Rise: return 'U';
    case Step::Fall: return 'D';
    case Step::Level: return 'L';
  }
  return '?';
}

int delta(Step s) {
  switch (s) {
    case Step::Rise: return 1;
    case Step::Fall: return -1;
    case Step::Level: return 0;
  }
  return 0;
}

std::string_view to_string(PathKind kind) { return kind == PathKind::Dyck ? "dyck" : "altmotzkin"; }

PathKind parse_kind(std::string_view text) {
  if (text == "dyck") return PathKind::Dyck;
  if (text == "altmotzkin") return PathKind::AltMotzkin;
  throw std::invalid_argument("unknown path kind '" + std::string(text) + "' (expected dyck or altmotzkin)");
}

std::vector<Step> parse_steps(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Rise); break;
      case 'D': steps.push_back(Step::Fall); break;
      case 'L': steps.push_back(Step::Level); break;
      default:
        throw PathError("invalid character '" + std::string(1, text[i]) + "' at step " + std::to_string(i + 1) +
                        " (expected U, D or L)");
    }
  }
  return steps;
}

std::string render_steps(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (auto s : steps) out.push_back(to_char(s));
  return out;
}

std::optional<std::string> validation_error(std::span<const Step> steps, PathKind kind) {
  if (steps.size() % 2 != 0) return "odd length " + std::to_string(steps.size());
  int altitude = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto pos = std::to_string(i + 1);
    if (kind == PathKind::Dyck && steps[i] == Step::Level) return "level step at step " + pos + " in a Dyck path";
    if (kind == PathKind::AltMotzkin) {
      if (steps[i] == Step::Rise && !is_even_step(i)) return "alternation violated: rise at odd step " + pos;
      if (steps[i] == Step::Fall && is_even_step(i)) return "alternation violated: fall at even step " + pos;
    }
    altitude += delta(steps[i]);
    if (altitude < 0) return "negative altitude after step " + pos;
  }
  if (altitude != 0) return "nonzero final altitude " + std::to_string(altitude);
  return std::nullopt;
}

Path Path::from_steps(std::vector<Step> steps, PathKind kind) {
  if (auto err = validation_error(steps, kind)) {
    throw PathError("invalid " + std::string(to_string(kind)) + " path: " + *err);
  }
  return Path(std::move(steps), kind);
}

Path Path::parse(std::string_view text, PathKind kind) { return from_steps(parse_steps(text), kind); }

std::string Path::render() const { return render_steps(steps_); }

std::vector<int> prefix_altitudes(std::span<const Step> steps, int start) {
  std::vector<int> alt;
  alt.reserve(steps.size() + 1);
  alt.push_back(start);
  for (auto s : steps) alt.push_back(alt.back() + delta(s));
  return alt;
}

std::vector<int> Path::altitudes() const { return prefix_altitudes(steps_); }

int Path::rise_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Rise));
}

std::vector<Step> mirror(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (*it) {
      case Step::Rise: out.push_back(Step::Fall); break;
      case Step::Fall: out.push_back(Step::Rise); break;
      case Step::Level: out.push_back(Step::Level); break;
    }
  }
  return out;
}

}  // namespace pathforge
