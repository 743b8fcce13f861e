#ifndef PARCELFORGE_CYCLOTOMIC_HPP
#define PARCELFORGE_CYCLOTOMIC_HPP

#include <complex>
#include <vector>

#include <parcelforge/ints.hpp>
#include <parcelforge/poly.hpp>

namespace parcelforge {

// Phi_sigma(x), by exact division of x^sigma - 1 by the proper-divisor
// cyclotomic polynomials.
UniPoly cyclotomic_poly(long sigma);

/*
 * An exact element of Z[omega_sigma], stored as the canonical coefficient
 * vector in the power basis 1, omega, ..., omega^(phi(sigma)-1) of
 * Z[x]/Phi_sigma(x).  Equality is coefficient-vector equality; every
 * operation reduces eagerly, so representatives are unique.
 */
class CycElem {
public:
    CycElem() : sigma_(1), coeffs_(1, Int(0)) {}
    explicit CycElem(long sigma);                       // zero element
    CycElem(long sigma, const Int& integer_value);
    static CycElem root_pow(long sigma, long k);        // omega^k, any integer k
    static CycElem from_poly(long sigma, const ZPoly& p);  // p(omega), exps >= 0

    long sigma() const { return sigma_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_integer(Int* value = nullptr) const;

    CycElem operator+(const CycElem& o) const;
    CycElem operator-(const CycElem& o) const;
    CycElem operator-() const;
    CycElem operator*(const CycElem& o) const;
    CycElem operator*(const Int& c) const;
    bool operator==(const CycElem& o) const;
    bool operator!=(const CycElem& o) const { return !(*this == o); }

    CycElem pow(long n) const;  // n >= 0

    // omega -> omega^rho for gcd(rho, sigma) = 1.
    CycElem galois(long rho) const;
    CycElem conj() const { return galois(sigma_ == 1 ? 1 : sigma_ - 1); }
    std::vector<CycElem> galois_conjugates() const;

    // Embed into Z[omega_sigma2] for sigma_ | sigma2.
    CycElem lift(long sigma2) const;

    // Numeric embedding at omega = e^(2 pi i rho / sigma).  Diagnostic only.
    std::complex<double> embed(long rho = 1) const;

    std::string to_string() const;

private:
    long sigma_;
    std::vector<Int> coeffs_;
};

// Integers rho in [1, sigma) coprime to sigma (rho = 1 for sigma = 1).
std::vector<long> units_mod(long sigma);

} // namespace parcelforge

#endif
