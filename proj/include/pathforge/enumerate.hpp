#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "pathforge/path.hpp"

namespace pathforge {

/// Lazy backtracking generator over all paths of one kind and length 2k.
///
/// Paths come out in lexicographic order of their step strings with
/// U < D < L. An optional prefix restricts the stream to paths beginning
/// with it, which is how folds are partitioned across threads. Each stream
/// is single-consumer; independent streams share nothing.
class PathStream {
 public:
  PathStream(PathKind kind, int k, std::vector<Step> prefix = {});

  std::optional<Path> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Path;
    using difference_type = std::ptrdiff_t;
    using pointer = const Path*;
    using reference = const Path&;

    iterator() = default;
    explicit iterator(PathStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    PathStream* stream_ = nullptr;
    std::optional<Path> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool feasible(std::size_t index0, int altitude_after) const;
  bool try_option(std::size_t index0, int option);
  bool extend_greedy();

  PathKind kind_;
  std::size_t length_;
  std::size_t fixed_;
  std::vector<Step> steps_;
  std::vector<int> altitude_;  // altitude_[j] = altitude after the first j steps
  bool started_ = false;
  bool done_ = false;
};

/// Calls f(path) for every path of the given kind and length 2k.
template <class F>
void for_each_path(PathKind kind, int k, F&& f, std::vector<Step> prefix = {}) {
  PathStream stream(kind, k, std::move(prefix));
  while (auto p = stream.next()) f(*p);
}

/// Every prefix of the given depth that extends to at least one full path,
/// in stream order. depth is clamped to 2k.
std::vector<std::vector<Step>> feasible_prefixes(PathKind kind, int k, std::size_t depth);

inline std::vector<Path> collect_paths(PathKind kind, int k) {
  std::vector<Path> out;
  for_each_path(kind, k, [&](const Path& p) { out.push_back(p); });
  return out;
}

}  // namespace pathforge
