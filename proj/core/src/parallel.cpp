#include "bsy/parallel.hpp"

#include <atomic>

namespace bsy {

namespace {
std::atomic<std::size_t> g_workers{0};
}

std::size_t worker_count() noexcept {
  const std::size_t configured = g_workers.load(std::memory_order_relaxed);
  if (configured != 0) return configured;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_worker_count(std::size_t workers) noexcept {
  g_workers.store(workers, std::memory_order_relaxed);
}

}  // namespace bsy
