#ifndef PARCELFORGE_VERIFY_HPP
#define PARCELFORGE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <parcelforge/corpus.hpp>
#include <parcelforge/parcels.hpp>

namespace parcelforge {

struct VerifyParams {
    long sigma = 2;
    long q = 2;
    long rho = 1;         // which primitive root: omega = omega_sigma^rho
    long alpha = 1;
    long beta = 1;
    int m = 2;            // tuple arity
    SetOp op = SetOp::Union;
    int tier = 0;         // census tier request (0 = default)
};

struct IdentityReport {
    std::string theorem;
    std::string instance;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string note;
    bool applicable = true;   // false = cell skipped (incompatible / capped)
    bool exceptional = false; // the identity's stated exceptional constant applied
    bool equal = false;
    int tier = 0;
    double seconds = 0.0;

    bool ok() const { return !applicable || equal; }
};

// Identity ids covered by the registry, in report order.
const std::vector<std::string>& registry_ids();

// Run one identity check on one instance with explicit parameters.  Checks
// with several displayed equations return one report per equation.
std::vector<IdentityReport> run_check(const std::string& id, const Instance& inst,
                                      const VerifyParams& p);

// The default parameter grid swept by verify-all for an identity.
std::vector<VerifyParams> default_grid(const std::string& id, const Instance& inst);

struct VerifySummary {
    std::vector<IdentityReport> reports;
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    void absorb(const std::vector<IdentityReport>& rs);
    bool all_ok() const { return failed == 0; }
};

VerifySummary verify_instance(const std::string& id, const Instance& inst);
VerifySummary verify_corpus_all();

// Group of order q compatible with the instance (cyclic for TU/graph,
// GF(p)^d for GF(p) matrices); nullopt if no such group exists.
std::optional<GroupSpec> group_of_order(const Instance& inst, long q);

// The orthogonal dual in the appropriate category.
Instance dual_of(const Instance& inst);

} // namespace parcelforge

#endif
