#pragma once

#include <algorithm>
#include <mutex>
#include <set>
#include <vector>

#include "qstate/kernels.hpp"

namespace qstate::testing {

/// Index sets touched by a kernel, gathered through its probe hook.
struct TouchLog {
  std::mutex mutex;
  std::vector<std::vector<index_t>> iterations;

  std::set<index_t> column(std::size_t k) {
    std::set<index_t> out;
    for (const auto& it : iterations) out.insert(it.at(k));
    return out;
  }

  std::vector<index_t> all_sorted() {
    std::vector<index_t> out;
    for (const auto& it : iterations) out.insert(out.end(), it.begin(), it.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<index_t>> iterations_sorted() {
    auto out = iterations;
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct RecordingProbe {
  TouchLog* log;

  template <class... Idx>
  void operator()(Idx... idx) const {
    std::lock_guard lock(log->mutex);
    log->iterations.push_back({static_cast<index_t>(idx)...});
  }
};

/// Counts iterations without recording them.
struct CountingProbe {
  std::size_t* count;
  template <class... Idx>
  void operator()(Idx...) const {
#pragma omp atomic
    ++*count;
  }
};

}  // namespace qstate::testing
