#include "tsl/elementary_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tsl/linalg.hpp"

namespace tsl {

namespace {

long long pos_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Largest integer <= a/b for b > 0.
long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Extended gcd: returns g and x with a*x == g (mod m).
long long mod_solve(long long a, long long m, long long& g)
{
    long long old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    g = old_r < 0 ? -old_r : old_r;
    return old_s;
}

} // namespace

ElementarySet ElementarySet::empty_set(size_t dim)
{
    ElementarySet e;
    e.dim = dim;
    e.inequalities.push_back({std::vector<long long>(dim, 0), 1});
    return e;
}

bool ElementarySet::is_canonical_empty() const
{
    for (const LinIneq& q : inequalities) {
        bool zero = true;
        for (long long c : q.coeffs) zero = zero && c == 0;
        if (zero && q.rhs > 0) return true;
    }
    return false;
}

std::string ElementarySet::key() const
{
    std::ostringstream os;
    os << dim << "|";
    for (const LinIneq& q : inequalities) {
        for (long long c : q.coeffs) os << c << ",";
        os << ">=" << q.rhs << ";";
    }
    os << "|";
    for (const Congruence& c : congruences) {
        for (long long d : c.coeffs) os << d << ",";
        os << "%" << c.modulus << "=" << c.residue << ";";
    }
    return os.str();
}

bool es_member(const ElementarySet& e, const std::vector<long long>& x)
{
    if (x.size() != e.dim) throw error("es_member: dimension mismatch");
    for (const LinIneq& q : e.inequalities) {
        long long v = 0;
        for (size_t i = 0; i < e.dim; ++i) v = checked_add(v, checked_mul(q.coeffs[i], x[i]));
        if (v < q.rhs) return false;
    }
    for (const Congruence& c : e.congruences) {
        long long v = 0;
        for (size_t i = 0; i < e.dim; ++i) v = checked_add(v, checked_mul(c.coeffs[i], x[i]));
        if (pos_mod(v - c.residue, c.modulus) != 0) return false;
    }
    return true;
}

bool es_union_member(const std::vector<ElementarySet>& sets, const std::vector<long long>& x)
{
    for (const ElementarySet& e : sets)
        if (es_member(e, x)) return true;
    return false;
}

ElementarySet es_normalize(const ElementarySet& e)
{
    ElementarySet out;
    out.dim = e.dim;

    // Inequalities: integer tightening by the coefficient gcd, then keep the
    // strongest bound per coefficient vector.
    std::map<std::vector<long long>, long long> best;
    for (const LinIneq& q : e.inequalities) {
        long long g = 0;
        for (long long c : q.coeffs) g = gcd_ll(g, c);
        if (g == 0) {
            if (q.rhs > 0) return ElementarySet::empty_set(e.dim);
            continue;
        }
        std::vector<long long> c = q.coeffs;
        for (long long& v : c) v /= g;
        long long rhs = ceil_div(q.rhs, g);
        auto it = best.find(c);
        if (it == best.end())
            best[c] = rhs;
        else
            it->second = std::max(it->second, rhs);
    }
    // Opposite pairs c.x >= b and -c.x >= -b' with b > b' are contradictory.
    for (const auto& [c, rhs] : best) {
        std::vector<long long> neg(c.size());
        for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        auto it = best.find(neg);
        if (it != best.end() && rhs + it->second > 0) return ElementarySet::empty_set(e.dim);
        out.inequalities.push_back({c, rhs});
    }

    // Congruences: reduce, check per-row solvability, merge equal vectors by CRT.
    std::map<std::vector<long long>, std::pair<long long, long long>> merged;  // coeffs -> (mod, res)
    for (const Congruence& raw : e.congruences) {
        long long m = raw.modulus;
        if (m < 1) throw error("es_normalize: modulus must be >= 1");
        if (m == 1) continue;
        std::vector<long long> c(raw.coeffs);
        for (long long& v : c) v = pos_mod(v, m);
        long long g = m;
        for (long long v : c) g = gcd_ll(g, v);
        long long r = pos_mod(raw.residue, m);
        if (r % g != 0) return ElementarySet::empty_set(e.dim);
        if (g > 1) {
            for (long long& v : c) v /= g;
            m /= g;
            r = pos_mod(r / g, m);
        }
        if (m == 1) continue;
        bool zero = true;
        for (long long v : c) zero = zero && v == 0;
        if (zero) {
            if (r != 0) return ElementarySet::empty_set(e.dim);
            continue;
        }
        auto it = merged.find(c);
        if (it == merged.end()) {
            merged[c] = {m, r};
        } else {
            auto& [m0, r0] = it->second;
            long long g2 = gcd_ll(m0, m);
            if (pos_mod(r0 - r, g2) != 0) return ElementarySet::empty_set(e.dim);
            // CRT: x == r0 (mod m0), x == r (mod m)
            long long lcm = m0 / g2 * m;
            long long gg;
            long long inv = mod_solve(m0 / g2, m / g2, gg);
            long long k = pos_mod((r - r0) / g2 * inv, m / g2);
            long long res = pos_mod(r0 + m0 * k, lcm);
            it->second = {lcm, res};
        }
    }
    for (const auto& [c, mr] : merged) {
        std::vector<long long> cc(c);
        for (long long& v : cc) v = pos_mod(v, mr.first);
        out.congruences.push_back({cc, mr.first, pos_mod(mr.second, mr.first)});
    }
    std::sort(out.inequalities.begin(), out.inequalities.end(),
              [](const LinIneq& a, const LinIneq& b) {
                  return std::tie(a.coeffs, a.rhs) < std::tie(b.coeffs, b.rhs);
              });
    std::sort(out.congruences.begin(), out.congruences.end(),
              [](const Congruence& a, const Congruence& b) {
                  return std::tie(a.coeffs, a.modulus, a.residue) <
                         std::tie(b.coeffs, b.modulus, b.residue);
              });
    return out;
}

ElementarySet es_intersect(const ElementarySet& a, const ElementarySet& b)
{
    if (a.dim != b.dim) throw error("es_intersect: dimension mismatch");
    ElementarySet e = a;
    e.inequalities.insert(e.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
    e.congruences.insert(e.congruences.end(), b.congruences.begin(), b.congruences.end());
    return es_normalize(e);
}

namespace {

std::string rows_key_without(const ElementarySet& e, size_t skip_congruence,
                             size_t skip_ineq = SIZE_MAX)
{
    std::ostringstream os;
    for (size_t i = 0; i < e.inequalities.size(); ++i) {
        if (i == skip_ineq) continue;
        for (long long c : e.inequalities[i].coeffs) os << c << ",";
        os << ">=" << e.inequalities[i].rhs << ";";
    }
    os << "|";
    for (size_t i = 0; i < e.congruences.size(); ++i) {
        if (i == skip_congruence) continue;
        const Congruence& c = e.congruences[i];
        for (long long d : c.coeffs) os << d << ",";
        os << "%" << c.modulus << "=" << c.residue << ";";
    }
    return os.str();
}

// One merging round; true when something changed.
bool merge_round(std::vector<ElementarySet>& sets)
{
    // residue-class collapse: pieces identical except for the residue of one
    // congruence merge when the residues fill a coset of a subgroup
    std::map<std::string, std::map<long long, std::vector<size_t>>> buckets;
    for (size_t s = 0; s < sets.size(); ++s) {
        for (size_t ci = 0; ci < sets[s].congruences.size(); ++ci) {
            const Congruence& c = sets[s].congruences[ci];
            std::ostringstream sig;
            sig << rows_key_without(sets[s], ci) << "#";
            for (long long d : c.coeffs) sig << d << ",";
            sig << "%" << c.modulus;
            buckets[sig.str()][c.residue].push_back(s);
        }
    }
    std::vector<char> drop(sets.size(), 0);
    std::vector<ElementarySet> added;
    for (auto& [sig, by_res] : buckets) {
        if (by_res.size() < 2) continue;
        std::vector<long long> residues;
        for (auto& [r, idxs] : by_res) residues.push_back(r);
        size_t rep_idx = by_res.begin()->second.front();
        if (drop[rep_idx]) continue;
        const ElementarySet& rep = sets[rep_idx];
        size_t which = SIZE_MAX;
        for (size_t ci = 0; ci < rep.congruences.size(); ++ci) {
            std::ostringstream sig2;
            sig2 << rows_key_without(rep, ci) << "#";
            for (long long d : rep.congruences[ci].coeffs) sig2 << d << ",";
            sig2 << "%" << rep.congruences[ci].modulus;
            if (sig2.str() == sig) { which = ci; break; }
        }
        if (which == SIZE_MAX) continue;
        long long m = rep.congruences[which].modulus;
        // smallest divisor d of m with residues = a full coset mod d
        for (long long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            if (static_cast<long long>(residues.size()) != m / d) continue;
            long long r0 = residues.front() % d;
            bool coset = true;
            for (long long r : residues) coset = coset && (r % d == r0);
            if (!coset) continue;
            bool usable = true;
            for (auto& [r, idxs] : by_res)
                for (size_t s : idxs) usable = usable && !drop[s];
            if (!usable) break;
            ElementarySet merged = rep;
            if (d == 1)
                merged.congruences.erase(merged.congruences.begin() + which);
            else {
                merged.congruences[which].modulus = d;
                merged.congruences[which].residue = r0;
                for (long long& cc : merged.congruences[which].coeffs)
                    cc = ((cc % d) + d) % d;
            }
            for (auto& [r, idxs] : by_res)
                for (size_t s : idxs) drop[s] = 1;
            added.push_back(es_normalize(merged));
            break;
        }
    }
    // nested bounds: pieces identical except one inequality's rhs
    std::map<std::string, std::vector<size_t>> rhs_buckets;
    for (size_t s = 0; s < sets.size(); ++s) {
        if (drop[s]) continue;
        for (size_t qi = 0; qi < sets[s].inequalities.size(); ++qi) {
            std::ostringstream sig;
            sig << rows_key_without(sets[s], SIZE_MAX, qi) << "#";
            for (long long c : sets[s].inequalities[qi].coeffs) sig << c << ",";
            rhs_buckets[sig.str()].push_back(s);
        }
    }
    bool changed = !added.empty();
    for (auto& [sig, idxs] : rhs_buckets) {
        if (idxs.size() < 2) continue;
        bool usable = true;
        for (size_t s : idxs) usable = usable && !drop[s];
        if (!usable) continue;
        // the weakest bound absorbs the others
        std::sort(idxs.begin(), idxs.end());
        idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
        if (idxs.size() < 2) continue;
        for (size_t k = 1; k < idxs.size(); ++k) drop[idxs[k]] = 1;
        changed = true;
        // keep the piece with the minimal rhs on the distinguishing row
        size_t keep = idxs[0];
        // distinguishing row: compare piece keys
        // (the first piece already has some rhs; find the min among all)
        // identify the varying row by locating the signature
        // simple approach: rebuild candidates and take pointwise min rhs
        ElementarySet merged = sets[idxs[0]];
        for (size_t k = 1; k < idxs.size(); ++k) {
            const ElementarySet& other = sets[idxs[k]];
            for (size_t qi = 0; qi < merged.inequalities.size(); ++qi) {
                if (qi < other.inequalities.size() &&
                    merged.inequalities[qi].coeffs == other.inequalities[qi].coeffs)
                    merged.inequalities[qi].rhs =
                        std::min(merged.inequalities[qi].rhs, other.inequalities[qi].rhs);
            }
        }
        drop[keep] = 1;
        added.push_back(es_normalize(merged));
    }
    if (!changed) return false;
    std::vector<ElementarySet> next;
    for (size_t s = 0; s < sets.size(); ++s)
        if (!drop[s]) next.push_back(std::move(sets[s]));
    for (ElementarySet& e : added) next.push_back(std::move(e));
    sets = std::move(next);
    return true;
}

} // namespace

std::vector<ElementarySet> es_union_simplify(std::vector<ElementarySet> sets)
{
    for (ElementarySet& e : sets) e = es_normalize(e);
    // dedupe
    {
        std::set<std::string> seen;
        std::vector<ElementarySet> uniq;
        for (ElementarySet& e : sets) {
            if (e.is_canonical_empty()) continue;
            if (seen.insert(e.key()).second) uniq.push_back(std::move(e));
        }
        sets = std::move(uniq);
    }
    for (int round = 0; round < 64 && merge_round(sets); ++round) {
    }
    // subsumption: a piece whose constraint set contains another's is inside it
    auto subset = [](const ElementarySet& small, const ElementarySet& big) {
        for (const LinIneq& q : small.inequalities)
            if (std::find(big.inequalities.begin(), big.inequalities.end(), q) ==
                big.inequalities.end())
                return false;
        for (const Congruence& c : small.congruences)
            if (std::find(big.congruences.begin(), big.congruences.end(), c) ==
                big.congruences.end())
                return false;
        return true;
    };
    std::vector<char> dead(sets.size(), 0);
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size() && !dead[i]; ++j) {
            if (i == j || dead[j]) continue;
            if (subset(sets[j], sets[i])) dead[i] = 1;
        }
    std::vector<ElementarySet> out;
    for (size_t i = 0; i < sets.size(); ++i)
        if (!dead[i]) out.push_back(std::move(sets[i]));
    return out;
}

nlohmann::ordered_json es_to_json(const ElementarySet& e)
{
    nlohmann::ordered_json j;
    j["dim"] = e.dim;
    nlohmann::ordered_json ineqs = nlohmann::ordered_json::array();
    for (const LinIneq& q : e.inequalities) {
        nlohmann::ordered_json row;
        std::vector<std::string> cs;
        for (long long c : q.coeffs) cs.push_back(std::to_string(c));
        row["coeffs"] = cs;
        row["rhs"] = std::to_string(q.rhs);
        ineqs.push_back(row);
    }
    j["inequalities"] = std::move(ineqs);
    nlohmann::ordered_json congs = nlohmann::ordered_json::array();
    for (const Congruence& c : e.congruences) {
        nlohmann::ordered_json row;
        row["coeffs"] = c.coeffs;
        row["modulus"] = c.modulus;
        row["residue"] = c.residue;
        congs.push_back(row);
    }
    j["congruences"] = std::move(congs);
    return j;
}

ElementarySet es_from_json(const nlohmann::json& j)
{
    ElementarySet e;
    e.dim = j.at("dim").get<size_t>();
    for (const auto& row : j.at("inequalities")) {
        // rationals "p/q" are admitted; rows are scaled to integers
        std::vector<Rat> cs;
        for (const auto& c : row.at("coeffs")) cs.push_back(Rat::parse(c.get<std::string>()));
        Rat rhs = Rat::parse(row.at("rhs").get<std::string>());
        long long lcm = rhs.den();
        for (const Rat& c : cs) lcm = lcm / gcd_ll(lcm, c.den()) * c.den();
        LinIneq q;
        for (const Rat& c : cs) q.coeffs.push_back((c * Rat(lcm)).as_integer());
        q.rhs = (rhs * Rat(lcm)).as_integer();
        e.inequalities.push_back(std::move(q));
    }
    for (const auto& row : j.at("congruences")) {
        Congruence c;
        c.coeffs = row.at("coeffs").get<std::vector<long long>>();
        c.modulus = row.at("modulus").get<long long>();
        c.residue = row.at("residue").get<long long>();
        e.congruences.push_back(std::move(c));
    }
    if (!e.inequalities.empty() && e.inequalities[0].coeffs.size() != e.dim)
        throw error("es_from_json: coefficient length does not match dim");
    return e;
}

} // namespace tsl
