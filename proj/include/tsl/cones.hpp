// The stability/chamber cone P(G) on triples of dominant weights, plus the
// weight-polytope orderings used by the C^{1,2} membership test.

#pragma once

#include <string>
#include <vector>

#include "tsl/char_oracle.hpp"
#include "tsl/root_system.hpp"

namespace tsl {

// A linear form on triples, in concatenated fundamental coordinates.
struct TripleFunctional {
    std::vector<Rat> coeffs;
    std::string label;

    Rat eval(const std::vector<Rat>& fund6) const
    {
        Rat s;
        for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * fund6[i];
        return s;
    }
};

struct ConeSystem {
    std::string system;
    std::vector<TripleFunctional> stability;
    std::vector<TripleFunctional> chamber;

    bool member(const std::vector<Rat>& fund6) const;
    std::vector<const TripleFunctional*> all() const;
};

std::vector<Rat> triple_fund(const RootSystem& rs, const Weight& a, const Weight& b,
                             const Weight& c);

// P(G) for A2 (facets of the hull of invariant-positive triples), C2 (the
// explicit 18 stability + 6 chamber rows) and G2 (facets of the hull of the
// semigroup generator orbits).  Cached per process.
const ConeSystem& cone_p(const RootSystem& rs);

// lambda + w(mu) dominant for every Weyl element w.
bool much_greater(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// beta lies in Weight(V_mu): w(beta) below mu in the dual-cone order for all
// w, and mu - beta in Q(R).
bool weight_support_test(const RootSystem& rs, const Weight& beta, const Weight& mu);

// Membership in C^{1,2} together with the trace congruence.
bool c12_member(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

// The eleven printed generator triples of P(G2) on the lattice, as
// fundamental coordinates (delta_1..delta_9, then epsilon_1, epsilon_2).
const std::vector<std::array<std::array<long long, 2>, 3>>& g2_generator_data();

} // namespace tsl
