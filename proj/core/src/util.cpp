#include "voa/util.hpp"

#include <cstdlib>

namespace voa {

int thread_count() {
  static const int n = [] {
    const char* env = std::getenv("VOA_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    if (v > 256) return 256;
    return static_cast<int>(v);
  }();
  return n;
}

}  // namespace voa
