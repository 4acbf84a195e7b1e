#include "pathforge/enumerate.hpp"

#include <stdexcept>

namespace pathforge {

namespace {

constexpr Step kOrder[] = {Step::Rise, Step::Fall, Step::Level};
constexpr int kOptions = 3;

std::size_t odd_positions_in(std::size_t from0, std::size_t length) {
  // 1-indexed positions from0+1 .. length; odd ones are where falls may go.
  std::size_t count = 0;
  for (std::size_t j = from0; j < length; ++j) count += is_even_step(j) ? 0 : 1;
  return count;
}

}  // namespace

PathStream::PathStream(PathKind kind, int k, std::vector<Step> prefix)
    : kind_(kind), length_(static_cast<std::size_t>(2 * k)), fixed_(prefix.size()) {
  if (k < 0) throw std::invalid_argument("enumeration requires k >= 0");
  if (prefix.size() > length_) throw std::invalid_argument("prefix longer than the path");
  steps_.reserve(length_);
  altitude_.reserve(length_ + 1);
  altitude_.push_back(0);
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    const int a = altitude_.back() + delta(prefix[j]);
    bool allowed = a >= 0 && feasible(j, a);
    if (kind_ == PathKind::Dyck && prefix[j] == Step::Level) allowed = false;
    if (kind_ == PathKind::AltMotzkin && prefix[j] == Step::Rise && !is_even_step(j)) allowed = false;
    if (kind_ == PathKind::AltMotzkin && prefix[j] == Step::Fall && is_even_step(j)) allowed = false;
    if (!allowed) {
      done_ = true;
      return;
    }
    steps_.push_back(prefix[j]);
    altitude_.push_back(a);
  }
}

bool PathStream::feasible(std::size_t index0, int altitude_after) const {
  if (altitude_after < 0) return false;
  const std::size_t remaining = length_ - index0 - 1;
  if (kind_ == PathKind::Dyck) return static_cast<std::size_t>(altitude_after) <= remaining;
  return static_cast<std::size_t>(altitude_after) <= odd_positions_in(index0 + 1, length_);
}

bool PathStream::try_option(std::size_t index0, int option) {
  const Step s = kOrder[option];
  if (kind_ == PathKind::Dyck && s == Step::Level) return false;
  if (kind_ == PathKind::AltMotzkin) {
    if (s == Step::Rise && !is_even_step(index0)) return false;
    if (s == Step::Fall && is_even_step(index0)) return false;
  }
  const int a = altitude_[index0] + delta(s);
  if (!feasible(index0, a)) return false;
  steps_.push_back(s);
  altitude_.push_back(a);
  return true;
}

bool PathStream::extend_greedy() {
  while (steps_.size() < length_) {
    const std::size_t j = steps_.size();
    bool placed = false;
    for (int opt = 0; opt < kOptions && !placed; ++opt) placed = try_option(j, opt);
    if (!placed) return false;
  }
  return true;
}

std::optional<Path> PathStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!extend_greedy()) {
      done_ = true;
      return std::nullopt;
    }
    return Path::from_steps(steps_, kind_);
  }
  // Backtrack: advance the deepest free position that has a later option.
  while (steps_.size() > fixed_) {
    const std::size_t j = steps_.size() - 1;
    const Step last = steps_.back();
    steps_.pop_back();
    altitude_.pop_back();
    int opt = 0;
    while (kOrder[opt] != last) ++opt;
    for (++opt; opt < kOptions; ++opt) {
      if (try_option(j, opt)) {
        if (extend_greedy()) return Path::from_steps(steps_, kind_);
        // Feasibility is exact, so a placed step always extends.
        throw std::logic_error("path enumeration reached a dead end");
      }
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<std::vector<Step>> feasible_prefixes(PathKind kind, int k, std::size_t depth) {
  const std::size_t length = static_cast<std::size_t>(2 * k);
  if (depth > length) depth = length;
  std::vector<std::vector<Step>> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, int altitude) -> void {
    const std::size_t j = cur.size();
    if (j == depth) {
      out.push_back(cur);
      return;
    }
    for (Step s : kOrder) {
      if (kind == PathKind::Dyck && s == Step::Level) continue;
      if (kind == PathKind::AltMotzkin && s == Step::Rise && !is_even_step(j)) continue;
      if (kind == PathKind::AltMotzkin && s == Step::Fall && is_even_step(j)) continue;
      const int a = altitude + delta(s);
      if (a < 0) continue;
      const std::size_t bound =
          kind == PathKind::Dyck ? length - j - 1 : odd_positions_in(j + 1, length);
      if (static_cast<std::size_t>(a) > bound) continue;
      cur.push_back(s);
      self(self, a);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pathforge
