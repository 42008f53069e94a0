#pragma once

#include "framekit/kernels.hpp"

namespace framekit::kernels {

// Internal: returns the AVX2 kernel table, or nullptr when this build has
// no AVX2 variant (non-x86 targets). Callers must verify CPU support
// before invoking any function in the returned table.
const Backend* avx2_backend_or_null();

} // namespace framekit::kernels
