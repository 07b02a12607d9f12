#pragma once

namespace filtforge {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce bit-identical results; the serial path exists for testing
/// and benchmarking.
enum class Exec { serial, parallel };

/// Caps OpenMP threads from FORGE_THREADS when set to a positive integer.
/// Returns the thread count in effect.
int configure_threads_from_env();

}  // namespace filtforge
