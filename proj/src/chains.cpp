#include "tsl/chains.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace tsl {

namespace {

struct VecHash {
    size_t operator()(const Vec& v) const { return vec_hash(v); }
};

} // namespace

std::vector<std::pair<Weight, size_t>> ChainOracle::steps_down(const Weight& v,
                                                               const Weight* fix_point) const
{
    std::vector<std::pair<Weight, size_t>> out;
    for (size_t b = 0; b < rs_.positive_coroots().size(); ++b) {
        if (rs_.pair(rs_.positive_coroots()[b], v) >= Rat(0)) continue;
        if (fix_point && !rs_.pair(rs_.positive_coroots()[b], *fix_point).is_integer()) continue;
        out.push_back({rs_.reflect(b, v), b});
    }
    return out;
}

std::optional<Chain> ChainOracle::find_chain(const Weight& eta, const Weight& xi,
                                             ChainGroup group, const Weight* fix_point) const
{
    if (vec_is_zero(eta) || vec_is_zero(xi)) throw error("find_chain: zero vector");
    const Weight* fp = group == ChainGroup::Stabilizer ? fix_point : nullptr;
    if (group == ChainGroup::Stabilizer && !fix_point)
        throw error("find_chain: stabilizer group needs a fix point");

    std::unordered_map<Vec, std::pair<Vec, size_t>, VecHash> parent;
    std::unordered_set<Vec, VecHash> seen{eta};
    std::queue<Weight> q;
    q.push(eta);
    while (!q.empty()) {
        Weight cur = q.front();
        q.pop();
        if (cur == xi) {
            Chain c;
            Vec at = cur;
            while (at != eta) {
                auto [prev, b] = parent.at(at);
                c.vectors.push_back(at);
                c.witnesses.push_back(b);
                at = prev;
            }
            c.vectors.push_back(eta);
            std::reverse(c.vectors.begin(), c.vectors.end());
            std::reverse(c.witnesses.begin(), c.witnesses.end());
            return c;
        }
        for (auto& [nxt, b] : steps_down(cur, fp)) {
            if (seen.insert(nxt).second) {
                parent[nxt] = {cur, b};
                q.push(nxt);
            }
        }
    }
    return std::nullopt;
}

bool ChainOracle::chain_valid(const Chain& c) const
{
    if (c.vectors.empty()) return false;
    if (c.witnesses.size() + 1 != c.vectors.size()) return false;
    for (const Weight& v : c.vectors)
        if (vec_is_zero(v)) return false;
    for (size_t i = 0; i < c.witnesses.size(); ++i) {
        size_t b = c.witnesses[i];
        if (rs_.pair(rs_.positive_coroots()[b], c.vectors[i]) >= Rat(0)) return false;
        if (rs_.reflect(b, c.vectors[i]) != c.vectors[i + 1]) return false;
    }
    return true;
}

bool ChainOracle::is_maximal_chain(const Chain& c) const
{
    if (!chain_valid(c)) throw error("is_maximal_chain: invalid chain");
    // Refinable iff some consecutive pair admits a chain of length >= 2.
    for (size_t i = 0; i + 1 < c.vectors.size(); ++i) {
        const Weight& from = c.vectors[i];
        const Weight& to = c.vectors[i + 1];
        for (auto& [mid, b] : steps_down(from)) {
            (void)b;
            if (mid == to) continue;
            auto rest = find_chain(mid, to);
            if (rest) return false;
        }
    }
    return true;
}

std::vector<Weight> ChainOracle::descendants(const Weight& v) const
{
    std::unordered_set<Vec, VecHash> seen{v};
    std::queue<Weight> q;
    q.push(v);
    std::vector<Weight> out;
    while (!q.empty()) {
        Weight cur = q.front();
        q.pop();
        out.push_back(cur);
        for (auto& [nxt, b] : steps_down(cur)) {
            (void)b;
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    return out;
}

std::vector<Weight> ChainOracle::ancestors(const Weight& v) const
{
    // u is an immediate ancestor of v iff u = tau_b(v) with beta_b(v) > 0.
    std::unordered_set<Vec, VecHash> seen{v};
    std::queue<Weight> q;
    q.push(v);
    std::vector<Weight> out;
    while (!q.empty()) {
        Weight cur = q.front();
        q.pop();
        out.push_back(cur);
        for (size_t b = 0; b < rs_.positive_coroots().size(); ++b) {
            if (rs_.pair(rs_.positive_coroots()[b], cur) <= Rat(0)) continue;
            Weight up = rs_.reflect(b, cur);
            if (seen.insert(up).second) q.push(up);
        }
    }
    return out;
}

bool ChainOracle::same_chamber(const Weight& u, const Weight& v) const
{
    for (const WeylElem& w : rs_.weyl_group())
        if (rs_.is_dominant(w.apply(u)) && rs_.is_dominant(w.apply(v))) return true;
    return false;
}

bool ChainOracle::relation(const Weight& eta, const Weight& xi, RelationKind kind) const
{
    if (vec_is_zero(eta) || vec_is_zero(xi)) throw error("relation: zero vector");
    switch (kind) {
    case RelationKind::Ge:
        return find_chain(eta, xi).has_value();
    case RelationKind::Sim:
        return same_chamber(eta, xi);
    case RelationKind::Gtrsim: {
        for (const Weight& mu : descendants(eta))
            for (const Weight& nu : ancestors(xi))
                if (same_chamber(mu, nu)) return true;
        return false;
    }
    }
    return false;
}

GeneralizedChains enumerate_generalized_chains(const RootSystem& rs)
{
    if (rs.rank() > 2) throw error("enumerate_generalized_chains: rank <= 2 only");
    ChainOracle chains(rs);

    std::vector<std::vector<Weight>> orbits;
    for (const Weight& w : rs.fundamental_weights()) orbits.push_back(rs.weyl_orbit(w));

    GeneralizedChains out;

    // DFS over extensions: same-orbit single descending steps, or a >~ jump to
    // a later orbit.
    struct Frame {
        GeneralizedChain chain;
    };
    std::vector<Frame> stack;
    for (size_t oi = 0; oi < orbits.size(); ++oi)
        for (const Weight& start : orbits[oi]) {
            GeneralizedChain g;
            g.elements = {start};
            g.orbit_index = {oi};
            stack.push_back({g});
        }
    while (!stack.empty()) {
        GeneralizedChain g = stack.back().chain;
        stack.pop_back();
        out.all.push_back(g);
        const Weight& last = g.elements.back();
        size_t oi = g.orbit_index.back();
        for (auto& [nxt, b] : chains.steps_down(last)) {
            GeneralizedChain h = g;
            h.elements.push_back(nxt);
            h.orbit_index.push_back(oi);
            h.witnesses.push_back(b);
            stack.push_back({h});
        }
        for (size_t oj = oi + 1; oj < orbits.size(); ++oj)
            for (const Weight& nxt : orbits[oj]) {
                if (!chains.relation(last, nxt, RelationKind::Gtrsim)) continue;
                GeneralizedChain h = g;
                h.elements.push_back(nxt);
                h.orbit_index.push_back(oj);
                h.witnesses.push_back(std::nullopt);
                stack.push_back({h});
            }
    }

    // Canonical order, then keep the chains that are not proper subsequences
    // of a longer chain with the same endpoints.
    auto str_of = [](const GeneralizedChain& g) {
        std::string s;
        for (size_t i = 0; i < g.elements.size(); ++i)
            s += std::to_string(g.orbit_index[i]) + vec_str(g.elements[i]);
        return s;
    };
    std::sort(out.all.begin(), out.all.end(), [&](const auto& a, const auto& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return str_of(a) < str_of(b);
    });

    auto subsequence = [](const GeneralizedChain& small, const GeneralizedChain& big) {
        size_t i = 0;
        for (size_t j = 0; j < big.elements.size() && i < small.elements.size(); ++j)
            if (big.elements[j] == small.elements[i] && big.orbit_index[j] == small.orbit_index[i])
                ++i;
        return i == small.elements.size();
    };
    for (const GeneralizedChain& g : out.all) {
        bool maximal = true;
        for (const GeneralizedChain& h : out.all) {
            if (h.elements.size() <= g.elements.size()) continue;
            if (h.elements.front() != g.elements.front() || h.elements.back() != g.elements.back())
                continue;
            if (subsequence(g, h)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.maximal.push_back(g);
    }
    return out;
}

} // namespace tsl
