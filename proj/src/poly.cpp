#include <parcelforge/poly.hpp>

#include <sstream>

namespace parcelforge {

ZPoly ZPoly::monomial(long exp, const Int& c) {
    ZPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

Int ZPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long ZPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long ZPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void ZPoly::add_term(long exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

ZPoly ZPoly::operator*(const Int& c) const {
    ZPoly out;
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

ZPoly ZPoly::pow(long n) const {
    if (n < 0) throw std::invalid_argument("ZPoly::pow: negative exponent");
    ZPoly acc(Int(1));
    ZPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Int ZPoly::eval(const Int& x) const {
    Int out = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0) throw std::invalid_argument("ZPoly::eval: negative exponent");
        out += c * ipow(x, e);
    }
    return out;
}

Int ZPoly::sum_coeffs() const {
    Int out = 0;
    for (const auto& [e, c] : terms_) out += c;
    return out;
}

ZPoly ZPoly::divide_exact(const ZPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    ZPoly rem = *this;
    ZPoly quot;
    const long dmax = divisor.max_exp();
    const Int lead = divisor.coeff(dmax);
    while (!rem.is_zero() && rem.max_exp() >= dmax) {
        const long e = rem.max_exp();
        Int q = rem.coeff(e) / lead;
        if (q * lead != rem.coeff(e))
            throw std::invalid_argument("divide_exact: non-exact leading division");
        ZPoly t = ZPoly::monomial(e - dmax, q);
        rem = rem - t * divisor;
        quot = quot + t;
    }
    if (!rem.is_zero()) throw std::invalid_argument("divide_exact: nonzero remainder");
    return quot;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

ZPoly binomial_power(long shift, long n) {
    ZPoly base;
    base.add_term(1, Int(1));
    base.add_term(0, Int(shift));
    return base.pow(n);
}

void BiPoly::add_term(int le, int xe, const Int& c) {
    if (c == 0) return;
    Key k{le, xe};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

BiPoly BiPoly::operator*(const Int& c) const {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

Int BiPoly::eval(const Int& lambda, const Int& x) const {
    Int out = 0;
    for (const auto& [k, c] : terms_) out += c * ipow(lambda, k.first) * ipow(x, k.second);
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool wrote = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) { os << a.get_str(); wrote = true; }
        if (k.first != 0) {
            if (wrote) os << "*";
            os << "l";
            if (k.first != 1) os << "^" << k.first;
            wrote = true;
        }
        if (k.second != 0) {
            if (wrote) os << "*";
            os << "x";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

Int eval_cleared(const BiPoly& rg, const Int& A, const Int& B, const Int& C,
                 const Int& D, int rank, int ground) {
    Int out = 0;
    for (const auto& [k, c] : rg.terms()) {
        const int i = k.first, j = k.second;
        if (i > rank || j > ground - rank)
            throw std::invalid_argument("eval_cleared: exponent outside rank bounds");
        out += c * ipow(A, i) * ipow(B, rank - i) * ipow(C, j) * ipow(D, ground - rank - j);
    }
    return out;
}

} // namespace parcelforge
