#pragma once

#include <cstddef>

namespace qframe {

// Execution policy for the data-parallel kernels. Every parallel kernel has
// a serial twin that computes bit-identical results; tests compare the two
// and the bench tool times them.
enum class Exec {
    serial,
    parallel,
};

namespace par {

// Effective thread cap: min(hardware, QFRAME_THREADS if set). Always >= 1.
int max_threads();

// True when compiled with OpenMP and the cap allows more than one thread.
bool enabled();

} // namespace par

} // namespace qframe
