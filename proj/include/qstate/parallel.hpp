#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qstate/state_vector.hpp"

namespace qstate {

/// Controls how a gate kernel distributes its loop over workers.
struct ExecPolicy {
  /// Worker count; 0 selects the OpenMP default (hardware concurrency).
  int threads = 0;
  /// Loops with at most this many iterations run serially.
  index_t serialCutoff = index_t{1} << 12;
};

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

/// Runs body(j) for j in [0, count). Iterations must touch disjoint data.
template <class Body>
void parallel_for(index_t count, const ExecPolicy& policy, Body&& body) {
#ifdef _OPENMP
  const bool parallel = count > policy.serialCutoff && policy.threads != 1;
  const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for if (parallel) num_threads(threads) schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    body(static_cast<index_t>(j));
  }
#else
  (void)policy;
  for (index_t j = 0; j < count; ++j) {
    body(j);
  }
#endif
}

}  // namespace qstate
