#ifndef PARCELFORGE_INTS_HPP
#define PARCELFORGE_INTS_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parcelforge {

// All counts and polynomial coefficients are arbitrary-precision integers.
using Int = mpz_class;

inline Int ipow(const Int& base, long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

inline Int ipow(long base, long exp) { return ipow(Int(base), exp); }

// (-1)^k
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration budget for flow/function-space sweeps.  Overridable through
// the PARCELFORGE_BUDGET environment variable (decimal element count).
std::uint64_t enumeration_budget();

} // namespace parcelforge

#endif
