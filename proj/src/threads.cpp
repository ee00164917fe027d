#include "gsp/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace gsp {

int worker_count() {
  const char* env = std::getenv("GRAPHON_SAMPLE_THREADS");
  if (env) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

void apply_thread_cap() { omp_set_num_threads(worker_count()); }

}  // namespace gsp
