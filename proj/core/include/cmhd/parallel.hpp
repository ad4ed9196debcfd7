#pragma once

#include <functional>

namespace cmhd {

/// Worker cap from CONTACT_MHD_THREADS (default 1; clamped to hardware).
int worker_count();

/// Deterministic static-partition parallel map over [0, n). Body must be
/// pure per index (no shared mutable state); reductions stay serial.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace cmhd
