#pragma once

namespace planar {

// Execution mode for the data-parallel kernels. Serial is the reference
// implementation; Parallel uses OpenMP when available. Results are
// bit-identical either way.
enum class Exec { Serial, Parallel };

}  // namespace planar
