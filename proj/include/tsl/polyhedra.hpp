// Rational Fourier-Motzkin elimination, exact projection of elementary sets
// (coset split + fiber bounds + floor analysis), and facet enumeration of
// finitely generated cones by the double description method.

#pragma once

#include <vector>

#include "tsl/elementary_set.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

// Real-shadow elimination of variable `var`.  An infeasible system yields the
// marker row 0 >= 1.
std::vector<LinIneq> fm_eliminate(const std::vector<LinIneq>& rows, size_t var);

// Rational feasibility of the inequality system (eliminates every variable).
// `row_cap` bounds intermediate growth; returns true (possibly feasible) when
// the cap is hit.
bool fm_feasible(const std::vector<LinIneq>& rows, size_t row_cap = 4000);

// Exact projection of E to its first dim-1 coordinates: a finite union of
// elementary sets whose union equals { x : exists a, (x,a) in E }.
std::vector<ElementarySet> es_project_last(const ElementarySet& e);

// Projects away every coordinate past `keep` by iterating es_project_last,
// choosing a cheap elimination order among the tail columns and splitting
// tail-only congruences into residue classes first.  Throws cap_error when
// the running union exceeds piece_cap.
std::vector<ElementarySet> es_project_tail(const ElementarySet& e, size_t keep,
                                           size_t piece_cap = 200000);

// Minimal facet functionals of the conic hull of integer generators spanning
// R^d: every psi has psi(g) >= 0 on the hull and defines a facet.
std::vector<std::vector<long long>> conic_hull_facets(
    const std::vector<std::vector<long long>>& generators);

} // namespace tsl
