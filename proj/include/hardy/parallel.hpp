#pragma once

#include <optional>

namespace hardy {

// Reads HARDY_INTERP_THREADS and, when it holds a positive integer, caps the
// OpenMP team size. Returns the cap that was applied.
std::optional<int> apply_thread_cap_from_env();

int max_threads();

}  // namespace hardy
