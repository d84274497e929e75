#pragma once

#include <gmpxx.h>

namespace fig8 {

using BigInt = mpz_class;
using BigRational = mpq_class;

}  // namespace fig8
