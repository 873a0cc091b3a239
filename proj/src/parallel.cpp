#include "hyperarea/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hyperarea::parallel {

namespace {

std::atomic<int> g_threads{0};
// nested calls from a worker run serially
thread_local bool t_in_worker = false;

int environment_threads() {
  const char* env = std::getenv("HYPERAREA_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (...) {
    return 1;
  }
}

}  // namespace

int thread_count() {
  const int t = g_threads.load();
  return t > 0 ? t : environment_threads();
}

void set_thread_count(int threads) { g_threads.store(std::max(0, threads)); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
  if (workers <= 1 || t_in_worker) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      t_in_worker = true;
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hyperarea::parallel
