#include <parcelforge/cyclotomic.hpp>

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace parcelforge {

namespace {

struct CycTable {
    long sigma = 1;
    long phi = 1;
    // power[k] = coefficient vector of x^k mod Phi_sigma, 0 <= k < 2*phi.
    std::vector<std::vector<Int>> power;
};

const CycTable& table_for(long sigma) {
    static std::map<long, CycTable> cache;
    auto it = cache.find(sigma);
    if (it != cache.end()) return it->second;
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");

    CycTable t;
    t.sigma = sigma;
    UniPoly phi_poly = cyclotomic_poly(sigma);
    t.phi = phi_poly.max_exp();

    // x^phi mod Phi = -(lower part of Phi); extend by shift-and-reduce.
    std::vector<Int> phi_low(t.phi, Int(0));
    for (const auto& [e, c] : phi_poly.terms())
        if (e < t.phi) phi_low[e] = c;

    t.power.resize(2 * t.phi);
    for (long k = 0; k < t.phi; ++k) {
        t.power[k].assign(t.phi, Int(0));
        t.power[k][k] = 1;
    }
    for (long k = t.phi; k < 2 * t.phi; ++k) {
        // x * power[k-1], reducing the overflow coefficient through
        // x^phi = -phi_low.
        std::vector<Int> v(t.phi, Int(0));
        const auto& prev = t.power[k - 1];
        for (long j = 0; j + 1 < t.phi; ++j) v[j + 1] = prev[j];
        const Int& top = prev[t.phi - 1];
        if (top != 0)
            for (long j = 0; j < t.phi; ++j) v[j] -= top * phi_low[j];
        t.power[k] = std::move(v);
    }
    return cache.emplace(sigma, std::move(t)).first->second;
}

} // namespace

UniPoly cyclotomic_poly(long sigma) {
    static std::map<long, UniPoly> cache;
    auto it = cache.find(sigma);
    if (it != cache.end()) return it->second;
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
    UniPoly num;
    num.add_term(sigma, Int(1));
    num.add_term(0, Int(-1));
    for (long d = 1; d < sigma; ++d)
        if (sigma % d == 0) num = num.divide_exact(cyclotomic_poly(d));
    cache[sigma] = num;
    return num;
}

CycElem::CycElem(long sigma) : sigma_(sigma) {
    coeffs_.assign(table_for(sigma).phi, Int(0));
}

CycElem::CycElem(long sigma, const Int& v) : CycElem(sigma) { coeffs_[0] = v; }

CycElem CycElem::root_pow(long sigma, long k) {
    const auto& t = table_for(sigma);
    long km = ((k % sigma) + sigma) % sigma;
    CycElem out(sigma);
    if (km < 2 * t.phi) {
        out.coeffs_ = t.power[km];
    } else {
        // sigma can exceed 2*phi (e.g. sigma = 12, phi = 4): square-and-
        // multiply on omega.
        out = root_pow(sigma, 1).pow(km);
    }
    return out;
}

CycElem CycElem::from_poly(long sigma, const ZPoly& p) {
    CycElem out(sigma);
    for (const auto& [e, c] : p.terms()) {
        if (e < 0) throw std::invalid_argument("from_poly: negative exponent");
        out = out + root_pow(sigma, e) * c;
    }
    return out;
}

bool CycElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_integer(Int* value) const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    if (value) *value = coeffs_[0];
    return true;
}

CycElem CycElem::operator+(const CycElem& o) const {
    if (sigma_ != o.sigma_) throw std::invalid_argument("CycElem: sigma mismatch");
    CycElem out = *this;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] += o.coeffs_[j];
    return out;
}

CycElem CycElem::operator-(const CycElem& o) const { return *this + (-o); }

CycElem CycElem::operator-() const {
    CycElem out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycElem CycElem::operator*(const CycElem& o) const {
    if (sigma_ != o.sigma_) throw std::invalid_argument("CycElem: sigma mismatch");
    const auto& t = table_for(sigma_);
    const long phi = t.phi;
    std::vector<Int> conv(2 * phi - 1, Int(0));
    for (long i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (o.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    CycElem out(sigma_);
    for (long k = 0; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& red = t.power[k];
        for (long j = 0; j < phi; ++j) out.coeffs_[j] += conv[k] * red[j];
    }
    return out;
}

CycElem CycElem::operator*(const Int& c) const {
    CycElem out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

bool CycElem::operator==(const CycElem& o) const {
    return sigma_ == o.sigma_ && coeffs_ == o.coeffs_;
}

CycElem CycElem::pow(long n) const {
    if (n < 0) throw std::invalid_argument("CycElem::pow: negative exponent");
    CycElem acc(sigma_, Int(1));
    CycElem base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

CycElem CycElem::galois(long rho) const {
    if (std::gcd(rho % sigma_ + sigma_, sigma_) != 1)
        throw std::invalid_argument("galois: rho not coprime to sigma");
    CycElem out(sigma_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out = out + root_pow(sigma_, static_cast<long>(j) * rho) * coeffs_[j];
    }
    return out;
}

std::vector<CycElem> CycElem::galois_conjugates() const {
    std::vector<CycElem> out;
    for (long rho : units_mod(sigma_)) out.push_back(galois(rho));
    return out;
}

CycElem CycElem::lift(long sigma2) const {
    if (sigma2 % sigma_ != 0) throw std::invalid_argument("lift: sigma must divide target");
    const long scale = sigma2 / sigma_;
    CycElem out(sigma2);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out = out + root_pow(sigma2, static_cast<long>(j) * scale) * coeffs_[j];
    }
    return out;
}

std::complex<double> CycElem::embed(long rho) const {
    std::complex<double> out(0.0, 0.0);
    const double two_pi = 8.0 * std::atan(1.0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double angle = two_pi * static_cast<double>(rho) * static_cast<double>(j) /
                       static_cast<double>(sigma_);
        out += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return out;
}

std::string CycElem::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j) os << ",";
        os << coeffs_[j].get_str();
    }
    os << "]@" << sigma_;
    return os.str();
}

std::vector<long> units_mod(long sigma) {
    std::vector<long> out;
    if (sigma == 1) return {1};
    for (long r = 1; r < sigma; ++r)
        if (std::gcd(r, sigma) == 1) out.push_back(r);
    return out;
}

} // namespace parcelforge
