#pragma once

#include <cstddef>

namespace twomode {

enum class Execution { serial, parallel };

// Runs fn(i) for i in [0, n). Each index writes only its own slot, so the
// result does not depend on the thread count.
template <class Fn>
void for_each_index(Execution exec, std::size_t n, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

int max_threads();
void set_threads(int n);

}  // namespace twomode
