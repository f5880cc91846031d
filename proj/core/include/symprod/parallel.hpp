#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace symprod {

// Applies fn(i) for i in [0, count) on up to `threads` workers and returns
// the results in index order. Slots are written once and collected in index
// order, so the result (and anything serialized from it) is byte-identical
// for every thread count.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using T = decltype(fn(std::size_t{0}));
  if (threads < 1) throw std::invalid_argument("parallel_map: thread count must be >= 1");
  std::vector<T> out;
  out.reserve(count);
  if (count == 0) return out;
  if (threads == 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::optional<T>> slots(count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) slots[i].emplace(fn(i));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Worker-pool width for the CLI: SYMPROD_THREADS env, else hardware.
inline int default_thread_count() {
  if (const char* env = std::getenv("SYMPROD_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace symprod
