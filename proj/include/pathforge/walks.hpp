#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathforge/numeric.hpp"
#include "pathforge/path.hpp"

namespace pathforge {

class WalkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed walk on the nonnegative integers with moves -1, 0, +1. A move of
/// 0 is a loop. Move j (1-indexed) goes from nodes[j-1] to nodes[j].
class Walk {
 public:
  explicit Walk(std::vector<int> nodes);
  /// Comma-separated node labels, e.g. "0,1,0".
  static Walk parse(std::string_view text);

  const std::vector<int>& nodes() const { return nodes_; }
  std::size_t moves() const { return nodes_.size() - 1; }
  std::string render() const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::vector<int> nodes_;
};

Walk dyck_to_walk(const Path& path, int start = 0);
/// Rejects walks with loops or that drop below their start node.
Path walk_to_dyck(const Walk& walk);

Walk alt_motzkin_to_walk(const Path& path, int start = 0);
/// Rejects walks that move right on an odd move or left on an even move.
Path walk_to_alt_motzkin(const Walk& walk);

/// Occupation statistics indexed by node label 0..max node. `advances` has
/// one entry fewer (no advance from the top node).
struct WalkStatistics {
  std::vector<std::int64_t> time_at_node;  // time points spent at node i
  std::vector<std::int64_t> advances;      // moves from node i to i+1
  std::vector<std::int64_t> loops;         // loops at node i

  friend bool operator==(const WalkStatistics&, const WalkStatistics&) = default;
};

WalkStatistics walk_statistics(const Walk& walk);

/// Identities 1 and 2 restated for closed loop-free walks of length 2k from
/// node 0, drawn uniformly: the squared norm of the mean advance vector and of
/// the mean occupation-time vector, each next to its closed form.
struct WalkIdentitySummary {
  int k = 0;
  Rational square_average_advances;
  Rational advances_closed_form;  // C_{2k}/C_k^2 - 1
  Rational square_average_time;
  Rational time_closed_form;      // C_{2k+1}/C_k^2
};

WalkIdentitySummary walk_identity_summary(int k);

}  // namespace pathforge
