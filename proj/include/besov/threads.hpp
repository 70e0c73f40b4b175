#pragma once

#include <cstddef>
#include <functional>

namespace besov {

// Worker count: override value if set, else BESOV_THREADS, else hardware.
int thread_count();
// 0 restores the environment/hardware default.
void set_thread_override(int n);

// Runs body(i) for i in [0, n). Work items are claimed from an atomic counter
// and each writes only its own pre-sized slot, so results never depend on the
// worker count; any reduction happens sequentially afterwards.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

} // namespace besov
