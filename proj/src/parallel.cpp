#include "pathforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pathforge {

unsigned thread_count() {
  if (const char* env = std::getenv("PATHFORGE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Unparseable values fall back to auto.
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace pathforge
