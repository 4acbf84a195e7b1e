#include "pathforge/walks.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "pathforge/enumerate.hpp"

namespace pathforge {

Walk::Walk(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw WalkError("a walk has at least one node");
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (nodes_[j] < 0) throw WalkError("negative node label at time " + std::to_string(j));
    if (j > 0 && std::abs(nodes_[j] - nodes_[j - 1]) > 1) {
      throw WalkError("move " + std::to_string(j) + " jumps from node " + std::to_string(nodes_[j - 1]) + " to " +
                      std::to_string(nodes_[j]));
    }
  }
  if (nodes_.front() != nodes_.back()) throw WalkError("walk is not closed");
}

Walk Walk::parse(std::string_view text) {
  std::vector<int> nodes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw WalkError("invalid node label '" + std::string(token) + "'");
    }
    nodes.push_back(value);
    pos = comma + 1;
  }
  return Walk(std::move(nodes));
}

std::string Walk::render() const {
  std::string out;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(nodes_[j]);
  }
  return out;
}

namespace {

Walk path_to_walk(const Path& path, int start) {
  if (start < 0) throw WalkError("start node must be nonnegative");
  return Walk(prefix_altitudes(path.steps(), start));
}

std::vector<Step> walk_steps(const Walk& walk) {
  const auto& n = walk.nodes();
  std::vector<Step> steps;
  steps.reserve(walk.moves());
  for (std::size_t j = 1; j < n.size(); ++j) {
    const int d = n[j] - n[j - 1];
    steps.push_back(d > 0 ? Step::Rise : d < 0 ? Step::Fall : Step::Level);
  }
  return steps;
}

}  // namespace

Walk dyck_to_walk(const Path& path, int start) {
  if (path.kind() != PathKind::Dyck) throw WalkError("dyck_to_walk requires a Dyck path");
  return path_to_walk(path, start);
}

Walk alt_motzkin_to_walk(const Path& path, int start) {
  if (path.kind() != PathKind::AltMotzkin) throw WalkError("alt_motzkin_to_walk requires an alternating Motzkin path");
  return path_to_walk(path, start);
}

Path walk_to_dyck(const Walk& walk) {
  const auto steps = walk_steps(walk);
  const int start = walk.nodes().front();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == Step::Level) throw WalkError("walk has a loop at move " + std::to_string(j + 1));
    if (walk.nodes()[j + 1] < start) throw WalkError("walk drops below its start node at move " + std::to_string(j + 1));
  }
  return Path::from_steps(steps, PathKind::Dyck);
}

Path walk_to_alt_motzkin(const Walk& walk) {
  const auto steps = walk_steps(walk);
  const int start = walk.nodes().front();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == Step::Rise && !is_even_step(j)) {
      throw WalkError("parity violated: move right at odd move " + std::to_string(j + 1));
    }
    if (steps[j] == Step::Fall && is_even_step(j)) {
      throw WalkError("parity violated: move left at even move " + std::to_string(j + 1));
    }
    if (walk.nodes()[j + 1] < start) throw WalkError("walk drops below its start node at move " + std::to_string(j + 1));
  }
  return Path::from_steps(steps, PathKind::AltMotzkin);
}

WalkStatistics walk_statistics(const Walk& walk) {
  const auto& n = walk.nodes();
  const auto top = static_cast<std::size_t>(*std::max_element(n.begin(), n.end()));
  WalkStatistics s;
  s.time_at_node.assign(top + 1, 0);
  s.advances.assign(top, 0);
  s.loops.assign(top + 1, 0);
  for (std::size_t j = 0; j < n.size(); ++j) {
    s.time_at_node[static_cast<std::size_t>(n[j])] += 1;
    if (j == 0) continue;
    if (n[j] == n[j - 1] + 1) s.advances[static_cast<std::size_t>(n[j - 1])] += 1;
    if (n[j] == n[j - 1]) s.loops[static_cast<std::size_t>(n[j])] += 1;
  }
  return s;
}

WalkIdentitySummary walk_identity_summary(int k) {
  if (k < 1) throw std::invalid_argument("walk summary requires k >= 1");
  const auto n = static_cast<std::size_t>(k);
  std::vector<std::int64_t> advances(n), time(n + 1);
  std::int64_t count = 0;
  for_each_path(PathKind::Dyck, k, [&](const Path& p) {
    const auto s = walk_statistics(dyck_to_walk(p));
    ++count;
    for (std::size_t i = 0; i < s.advances.size(); ++i) advances[i] += s.advances[i];
    for (std::size_t i = 0; i < s.time_at_node.size(); ++i) time[i] += s.time_at_node[i];
  });
  auto square_norm_of_mean = [count](const std::vector<std::int64_t>& totals) {
    BigInt acc = 0;
    for (auto t : totals) acc += BigInt(t) * t;
    return Rational(acc, BigInt(count) * count);
  };
  const BigInt ck = catalan(k);
  WalkIdentitySummary out;
  out.k = k;
  out.square_average_advances = square_norm_of_mean(advances);
  out.advances_closed_form = Rational(catalan(2 * k), ck * ck) - 1;
  out.square_average_time = square_norm_of_mean(time);
  out.time_closed_form = Rational(catalan(2 * k + 1), ck * ck);
  return out;
}

}  // namespace pathforge
