#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace wzw {

// Arbitrary-precision rational scalar used throughout the exact tower.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline long to_long(const Rat& r) { return mpz_get_si(r.get_num().get_mpz_t()); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

using Cplx = std::complex<double>;

}  // namespace wzw
