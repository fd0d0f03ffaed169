#include "hardy/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace hardy {

std::optional<int> apply_thread_cap_from_env() {
  const char* raw = std::getenv("HARDY_INTERP_THREADS");
  if (raw == nullptr) return std::nullopt;
  try {
    const int cap = std::stoi(raw);
    if (cap <= 0) return std::nullopt;
    omp_set_num_threads(cap);
    return cap;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace hardy
