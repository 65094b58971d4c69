// parallel.hpp — tiny deterministic fork/join helper.
//
// Work is split into contiguous index blocks; callers write results into
// per-index slots and reduce sequentially afterwards, so results are
// bit-identical for every worker count.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace lopt {

// 0 means "resolve from hardware_concurrency()". Thread-safe setters/getters.
void set_worker_count(int workers);
int worker_count();           // configured value (may be 0 = auto)
int resolved_worker_count();  // actual number of workers that will run

// Calls body(i) for every i in [0, n). body must only touch slot i of any
// shared output. Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lopt
