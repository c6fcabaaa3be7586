// Chains of nonzero vectors descending by positive-coroot reflections, the
// orders >=, ~, and >~ they induce, and generalized chains over the orbits of
// the fundamental weights.

#pragma once

#include <optional>
#include <vector>

#include "tsl/root_system.hpp"

namespace tsl {

struct Chain {
    std::vector<Weight> vectors;
    std::vector<size_t> witnesses;  // indices into positive_coroots, one per step
};

enum class ChainGroup { Full, Stabilizer };

// Relations decided exactly on the W-orbits.
enum class RelationKind { Ge, Sim, Gtrsim };

class ChainOracle {
public:
    explicit ChainOracle(const RootSystem& rs) : rs_(rs) {}

    // A chain from eta to xi, with witnesses restricted to reflections fixing
    // fix_point when group == Stabilizer.  nullopt when no chain exists.
    std::optional<Chain> find_chain(const Weight& eta, const Weight& xi,
                                    ChainGroup group = ChainGroup::Full,
                                    const Weight* fix_point = nullptr) const;

    bool chain_valid(const Chain& c) const;

    // True when no longer chain with the same endpoints contains c's vectors.
    bool is_maximal_chain(const Chain& c) const;

    bool relation(const Weight& eta, const Weight& xi, RelationKind kind) const;

    // Single descending steps from v (pairs of successor and witness index).
    std::vector<std::pair<Weight, size_t>> steps_down(const Weight& v,
                                                      const Weight* fix_point = nullptr) const;

    // All vectors reachable from v by chains (including v).
    std::vector<Weight> descendants(const Weight& v) const;
    std::vector<Weight> ancestors(const Weight& v) const;

    bool same_chamber(const Weight& u, const Weight& v) const;

private:
    const RootSystem& rs_;
};

// A generalized chain: elements of the orbits W(varpi_1), ..., W(varpi_l) with
// nondecreasing orbit index, single reflection steps inside an orbit and the
// order >~ across orbit jumps.
struct GeneralizedChain {
    std::vector<Weight> elements;
    std::vector<size_t> orbit_index;              // iota, 0-based
    std::vector<std::optional<size_t>> witnesses; // step r -> coroot index, empty at jumps
};

struct GeneralizedChains {
    std::vector<GeneralizedChain> all;      // Sigma
    std::vector<GeneralizedChain> maximal;  // Sigma_max
};

// Exhaustive enumeration; rank <= 2 only.
GeneralizedChains enumerate_generalized_chains(const RootSystem& rs);

} // namespace tsl
