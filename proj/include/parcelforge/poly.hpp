#ifndef PARCELFORGE_POLY_HPP
#define PARCELFORGE_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include <parcelforge/ints.hpp>

namespace parcelforge {

/*
 * Sparse exact integer polynomials.
 *
 * ZPoly is a univariate polynomial with integer exponents; nonnegative
 * exponents give the ordinary UniPoly case, negative exponents the Laurent
 * case.  BiPoly is the bivariate (lambda, x) polynomial housing the rank
 * generating polynomial.  Zero coefficients are never stored.
 */
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const Int& c) { if (c != 0) terms_[0] = c; }
    static ZPoly monomial(long exp, const Int& c = Int(1));

    const std::map<long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(long exp) const;
    long min_exp() const;  // 0 on the zero polynomial
    long max_exp() const;

    void add_term(long exp, const Int& c);

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Int& c) const;
    bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }

    ZPoly pow(long n) const;
    Int eval(const Int& x) const;  // requires all exponents >= 0
    Int sum_coeffs() const;

    // Exact division; throws if the remainder is nonzero.  Nonnegative
    // exponents only.
    ZPoly divide_exact(const ZPoly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::map<long, Int> terms_;
};

// (x - 1)^n and (x + 1)^n expansions come up constantly.
ZPoly binomial_power(long shift, long n);  // (x + shift)^n

using UniPoly = ZPoly;
using LaurentPoly = ZPoly;

class BiPoly {
public:
    using Key = std::pair<int, int>;  // (lambda exponent, x exponent)

    BiPoly() = default;
    explicit BiPoly(const Int& c) { if (c != 0) terms_[{0, 0}] = c; }

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int le, int xe, const Int& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Int& c) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    Int eval(const Int& lambda, const Int& x) const;
    std::string to_string() const;

private:
    std::map<Key, Int> terms_;
};

// B^r * D^(n-r) * P(A/B, C/D): evaluation of a rank generating polynomial at
// rational coordinates with denominators cleared term by term.  Exactness
// relies on the exponent bounds r - rk(B) <= r and |B| - rk(B) <= n - r that
// hold for every rank generating polynomial.
Int eval_cleared(const BiPoly& rg, const Int& A, const Int& B, const Int& C,
                 const Int& D, int rank, int ground);

} // namespace parcelforge

#endif
