// Elementary subsets of Z^n: finite systems of linear inequalities and
// congruences, with exact membership, normalization and intersection.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsl/rational.hpp"

namespace tsl {

// coeffs . x >= rhs
struct LinIneq {
    std::vector<long long> coeffs;
    long long rhs = 0;

    bool operator==(const LinIneq&) const = default;
};

// coeffs . x == residue (mod modulus), modulus >= 1
struct Congruence {
    std::vector<long long> coeffs;
    long long modulus = 1;
    long long residue = 0;

    bool operator==(const Congruence&) const = default;
};

struct ElementarySet {
    size_t dim = 0;
    std::vector<LinIneq> inequalities;
    std::vector<Congruence> congruences;

    static ElementarySet empty_set(size_t dim);
    bool is_canonical_empty() const;
    std::string key() const;  // canonical fingerprint after normalization
};

bool es_member(const ElementarySet& e, const std::vector<long long>& x);

// Tightens rows over the integers, merges congruences, detects contradictions.
ElementarySet es_normalize(const ElementarySet& e);

ElementarySet es_intersect(const ElementarySet& a, const ElementarySet& b);

bool es_union_member(const std::vector<ElementarySet>& sets, const std::vector<long long>& x);

// Pointwise-equivalent shrinking of a union: collapses residue classes that
// cover a full coset, keeps the weakest bound among otherwise identical
// pieces, and drops pieces whose constraints contain another piece's.
std::vector<ElementarySet> es_union_simplify(std::vector<ElementarySet> sets);

nlohmann::ordered_json es_to_json(const ElementarySet& e);
ElementarySet es_from_json(const nlohmann::json& j);

} // namespace tsl
