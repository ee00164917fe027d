#pragma once

namespace gsp {

/// Worker count for parallel kernels: GRAPHON_SAMPLE_THREADS if set and
/// positive, otherwise the OpenMP default (0 in the variable means auto).
int worker_count();

/// Apply worker_count() to the OpenMP runtime. Called by the CLI at startup;
/// library code only reads omp_get_max_threads().
void apply_thread_cap();

}  // namespace gsp
