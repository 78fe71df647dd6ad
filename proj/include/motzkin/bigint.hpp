#pragma once

#include <gmpxx.h>

namespace motzkin {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace motzkin
