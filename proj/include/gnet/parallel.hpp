#pragma once

#include <functional>

namespace gnet {

// Worker cap: GNET_THREADS env var, overridable programmatically.
int thread_cap();
void set_thread_cap(int n);  // n <= 0 restores the env/hardware default

// Runs f(i) for i in [0, n) on up to thread_cap() threads.
// Work items must be independent and write only to their own slots;
// the static block partition keeps results identical for any cap.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace gnet
