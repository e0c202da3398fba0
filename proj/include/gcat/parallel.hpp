#pragma once

namespace gcat {

/// Execution policy for the data-parallel kernels.  Every parallel kernel has
/// a serial twin that produces bit-identical results; the tests compare them
/// and the bench target times them against each other.
enum class ExecPolicy { serial, parallel };

/// Number of OpenMP workers to use: omp_get_max_threads() clamped by the
/// GCAT_THREADS environment variable when it is set to a positive integer.
/// Returns 1 when built without OpenMP.
int worker_count();

} // namespace gcat
