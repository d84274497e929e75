#pragma once

#include <cstddef>

namespace fig8 {

// Every data-parallel kernel ships a serial reference and an OpenMP variant.
// Both must produce identical results; the serial path is what the tests
// compare against.
enum class Exec { serial, parallel };

// Number of OpenMP threads used by parallel kernels; 0 means the runtime default.
void set_thread_count(int threads);
int thread_count();

}  // namespace fig8
