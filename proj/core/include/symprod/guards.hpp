#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace symprod {

// Raised when a brute-force enumeration would exceed its configured bound.
// The CLI maps this to exit code 2 (validation errors map to 1).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Bound for exhaustive symmetric-group enumeration (closure, induced
// characters, induction products). Overridable via SYMPROD_GUARD_N.
inline int default_guard_n() {
  if (const char* env = std::getenv("SYMPROD_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 8;
}

inline void check_guard(int n, int guard, const std::string& op) {
  if (n > guard)
    throw guard_error(op + ": n = " + std::to_string(n) + " exceeds brute-force guard " +
                      std::to_string(guard));
}

}  // namespace symprod
