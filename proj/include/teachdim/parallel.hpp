#pragma once

namespace teachdim::parallel {

// worker cap for all OpenMP regions in the library; 0 or negative resets to
// the hardware default. Parallel kernels are written so results are identical
// for every thread count.
void set_max_threads(int k);
int max_threads();

} // namespace teachdim::parallel
