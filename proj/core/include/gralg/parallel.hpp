#pragma once

#include <cstddef>
#include <functional>

namespace gralg {

// Runs index-parallel loops on a fixed number of threads; 0 or 1 means inline execution.
class WorkerPool {
public:
  explicit WorkerPool(std::size_t threads = 1) : threads_(threads == 0 ? 1 : threads) {}

  std::size_t threads() const { return threads_; }

  // Calls body(i) for every i in [0, count); the first exception thrown is rethrown after all workers stop.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const;

private:
  std::size_t threads_;
};

} // namespace gralg
