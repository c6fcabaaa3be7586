// Brute-force character oracle: Freudenthal weight multiplicities, the Weyl
// dimension formula, and tensor product decomposition by the signed Weyl-orbit
// walk.  Everything downstream is validated against this module.

#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsl/root_system.hpp"

namespace tsl {

// Integral weights in fundamental coordinates.
using IVec = std::vector<long long>;

struct IVecHash {
    size_t operator()(const IVec& v) const
    {
        size_t h = 1469598103934665603ull;
        for (long long x : v) h = (h ^ std::hash<long long>{}(x)) * 1099511628211ull;
        return h;
    }
};

IVec iv_from_weight(const RootSystem& rs, const Weight& w);
Weight iv_to_weight(const RootSystem& rs, const IVec& x);

struct WeightMultiplicityTable {
    IVec highest;
    // Dominant orbit representatives only; W-invariance supplies the rest.
    std::unordered_map<IVec, long long, IVecHash> mult;
    long long dim = 0;

    long long at(const IVec& dominant_rep) const
    {
        auto it = mult.find(dominant_rep);
        return it == mult.end() ? 0 : it->second;
    }
};

struct DecompositionTable {
    IVec lhs, rhs;
    std::map<IVec, long long> coeff;  // dominant nu -> multiplicity, ordered

    long long at(const IVec& nu) const
    {
        auto it = coeff.find(nu);
        return it == coeff.end() ? 0 : it->second;
    }
};

class CharOracle {
public:
    explicit CharOracle(const RootSystem& rs, long long fund_cap = 64)
        : rs_(rs), cap_(fund_cap) {}

    const RootSystem& root_system() const { return rs_; }

    // Exact multiplicity table of V_mu; memoized per oracle instance and
    // optionally persisted under TSL_CACHE_DIR.
    const WeightMultiplicityTable& weight_multiplicities(const Weight& mu);

    long long weyl_dim(const Weight& lambda) const;

    DecompositionTable tensor_decompose(const Weight& lambda, const Weight& mu);

    // Multiplicity of V_nu inside V_lambda (x) V_mu.
    long long tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu);

    // dim (V_lambda (x) V_mu (x) V_nu)^G = coefficient of nu* in V_lambda (x) V_mu.
    long long triple_invariant_dim(const Weight& lambda, const Weight& mu, const Weight& nu);

    // Full weight set of V_mu (all orbit points with multiplicities).
    std::vector<std::pair<IVec, long long>> weight_set(const Weight& mu);

private:
    void check_dominant_integral(const Weight& w, const char* who) const;

    const RootSystem& rs_;
    long long cap_;
    std::unordered_map<IVec, WeightMultiplicityTable, IVecHash> memo_;
};

} // namespace tsl
