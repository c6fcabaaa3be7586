// Executable membership criteria for Tens(G): the complete C2 and G2
// characterizations, the six-set C2 decomposition, saturation, the deep
// subcone bound, the generalized-chain decomposition pipeline, and
// verification scans against the character oracle.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsl/chains.hpp"
#include "tsl/char_oracle.hpp"
#include "tsl/cones.hpp"
#include "tsl/elementary_set.hpp"
#include "tsl/paths.hpp"
#include "tsl/polyhedra.hpp"

namespace tsl {

struct Triple {
    Weight lam, mu, nu;

    Weight trace() const { return vec_add(vec_add(lam, mu), nu); }
};

enum class Verdict { Member, NonMember, Inapplicable };

struct VerificationReport {
    std::string theorem;
    long long box = 0;
    long long scanned = 0;
    std::vector<std::array<IVec, 3>> mismatches;
    double seconds = 0;
    std::vector<std::string> notes;  // human-readable extras (printed, not part of the schema)

    bool pass() const { return mismatches.empty(); }
};

nlohmann::ordered_json report_to_json(const VerificationReport& r);

enum class SaturationMode { KR2, KRKW };

struct SaturationFacts {
    long long k_r = 1;
    long long k_w = 1;
};

struct G2ExceptionalData {
    std::vector<ElementarySet> sets;            // E_1, E_2, E_3 over Z^6
    std::vector<TripleFunctional> phi;          // phi_0, phi_1, phi_2
};

class Semigroup {
public:
    explicit Semigroup(const RootSystem& rs) : rs_(rs) {}

    const RootSystem& root_system() const { return rs_; }

    bool lambda_member(const Triple& t) const
    {
        return rs_.lattice_member(t.trace(), Lattice::Root);
    }

    bool integral(const Triple& t) const;
    bool dominant(const Triple& t) const;
    bool in_cone(const Triple& t) const;

    // Complete membership criteria; Inapplicable when the triple is outside
    // the stated hypotheses (cone / lattice / trace congruence).
    Verdict tens_c2_criterion(const Triple& t) const;
    Verdict tens_g2_criterion(const Triple& t) const;

    // The six elementary sets over Z^6 in fundamental coordinates whose union
    // is Tens(C2).
    std::vector<ElementarySet> elementary_decomposition_c2() const;

    // delta_1..delta_9, epsilon_1, epsilon_2.
    std::vector<Triple> g2_generators() const;

    G2ExceptionalData exceptional_sets_g2() const;

    static SaturationFacts saturation_facts(const RootSystem& rs);

    // Membership of the scaled triple, checked through the oracle.
    Verdict saturated_member(const Triple& t, SaturationMode mode, CharOracle& oracle) const;

    static long long deep_threshold(long long ell);
    // All cone functionals at least deep_threshold(2) and the trace congruence.
    bool deep_member(const Triple& t) const;

    // The elementary set over (x, a) attached to a maximal generalized chain;
    // x = 3*rank fundamental coordinates, a = one scaled coefficient per chain
    // element (scaled by k_R^2).
    ElementarySet build_E_sigma(const GeneralizedChain& chain) const;

    // Union of the projections of E_sigma over all maximal generalized
    // chains; pointwise equal to Tens on the lattice.
    std::vector<ElementarySet> compute_tens_decomposition(size_t piece_cap = 200000) const;

    // Verification scans.  `theorem` is one of: paths, mainBC, esets, g2,
    // saturation, kumar, deep, decomposition, C1.1, C1.2, C1.3, kumar2.
    VerificationReport verify(const std::string& theorem, long long box, int workers = 1,
                              unsigned long long seed = 1) const;

private:
    VerificationReport verify_paths(long long box, int workers) const;
    VerificationReport verify_mainbc(long long box, int workers) const;
    VerificationReport verify_esets(long long box, int workers) const;
    VerificationReport verify_g2(long long box, int workers) const;
    VerificationReport verify_saturation(long long box, int workers) const;
    VerificationReport verify_kumar(long long box, int workers) const;
    VerificationReport verify_deep(long long samples, unsigned long long seed) const;
    VerificationReport verify_decomposition(long long box, int workers) const;
    VerificationReport verify_conjecture(const std::string& which, long long box,
                                         int workers) const;

    const RootSystem& rs_;
};

// Deterministic worker pool: worker w handles indices w, w+workers, ...
void parallel_for(long long n, int workers, const std::function<void(int, long long)>& fn);

} // namespace tsl
