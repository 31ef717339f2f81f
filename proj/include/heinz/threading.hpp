#pragma once

namespace heinz {

// OpenMP worker count capped by the HEINZ_THREADS environment variable;
// 1 when built without OpenMP. Results do not depend on this value.
int worker_count();

} // namespace heinz
