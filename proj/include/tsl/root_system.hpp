// Exact root-system, Weyl-group and lattice arithmetic.
//
// A weight is a vector of exact rationals in an ambient basis chosen per
// system.  C2 uses orthogonal plane coordinates (x,y) with fundamental
// weights (1,0) and (1,1); A2 and G2 use fundamental-weight coordinates.
// Coroots are kept as rational linear forms on the ambient space, so no
// irrational inner products ever appear.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsl/linalg.hpp"

namespace tsl {

using Weight = Vec;  // ambient coordinates
using Form = Vec;    // coefficients of a linear functional on V

struct WeylElem {
    Mat matrix;
    int length = 0;
    int sign = 1;

    Weight apply(const Weight& v) const { return mat_apply(matrix, v); }
};

enum class Lattice { Root, WeightLat };

class RootSystem {
public:
    // id: one of "A1", "A2", "C2", "G2".
    static RootSystem build(const std::string& id);
    // Finite-type Cartan matrix; ambient basis is the fundamental-weight basis.
    static RootSystem build(const std::vector<std::vector<long long>>& cartan,
                            size_t weyl_cap = 200000);

    const std::string& id() const { return id_; }
    size_t rank() const { return rank_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Form>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<Form>& positive_coroots() const { return positive_coroots_; }
    const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
    const std::vector<WeylElem>& weyl_group() const { return weyl_; }
    const WeylElem& longest_element() const { return weyl_[longest_]; }
    const Weight& rho() const { return rho_; }

    Rat pair(const Form& f, const Weight& v) const { return dot(f, v); }

    // W-invariant inner product (rational in the chosen bases).
    Rat inner(const Weight& u, const Weight& v) const { return dot(u, mat_apply(gram_, v)); }

    // Reflection in the wall of positive (co)root b.
    Weight reflect(size_t b, const Weight& v) const
    {
        return vec_sub(v, vec_scale(dot(positive_coroots_[b], v), positive_roots_[b]));
    }

    Vec fund_coords(const Weight& v) const;
    Weight weight_from_fund(const Vec& x) const;
    Vec simple_root_coords(const Weight& v) const { return mat_apply(root_basis_inv_, v); }

    bool is_dominant(const Weight& v) const;
    // Returns (u, w) with u dominant and w(v) = u.
    std::pair<Weight, WeylElem> dominate(const Weight& v) const;
    // Dominant representative only; cheaper than dominate().
    Weight dominant_rep(const Weight& v) const;

    // v* = w0(-v); input must be dominant.
    Weight contragredient(const Weight& v) const;

    bool lattice_member(const Weight& v, Lattice which) const;

    std::vector<Weight> weyl_orbit(const Weight& v) const;

    // Serialization used by the CLI: fundamental coordinates "p/q,p/q,...".
    std::string weight_str(const Weight& v) const;
    Weight weight_parse(const std::string& s) const;

private:
    RootSystem() = default;
    void finish(size_t weyl_cap);

    std::string id_;
    size_t rank_ = 0;
    std::vector<Weight> simple_roots_;
    std::vector<Form> simple_coroots_;
    std::vector<Weight> fundamental_weights_;
    std::vector<Weight> positive_roots_;
    std::vector<Form> positive_coroots_;
    std::vector<std::vector<long long>> cartan_;
    std::vector<WeylElem> weyl_;
    size_t longest_ = 0;
    Mat gram_;
    Mat root_basis_inv_;  // expresses ambient vectors in the simple-root basis
    Weight rho_;
};

} // namespace tsl
