#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace oddsym {

// Arbitrary-precision integer used for every coefficient in the library.
using Int = mpz_class;

inline std::string to_string(const Int &v) { return v.get_str(); }

inline bool fits_int64(const Int &v) { return v.fits_slong_p(); }

// Sign of (-1)^k.
constexpr int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace oddsym
