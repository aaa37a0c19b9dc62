#include "vects1/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace vects1 {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VECTS1_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // unparsable value: keep the hardware default
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace vects1
