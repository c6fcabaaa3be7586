#include "tsl/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace tsl {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

// Exact rational reduction (no integer tightening; fm_eliminate is the real
// shadow, so the divisor must include the right-hand side).
LinIneq reduce_row(LinIneq q)
{
    long long g = gcd_ll(0, q.rhs);
    for (long long c : q.coeffs) g = gcd_ll(g, c);
    if (g > 1) {
        for (long long& c : q.coeffs) c /= g;
        q.rhs /= g;
    }
    return q;
}

LinIneq combine(const LinIneq& pos, const LinIneq& neg, size_t var)
{
    long long a = pos.coeffs[var];
    long long b = -neg.coeffs[var];
    long long g = gcd_ll(a, b);
    long long fa = b / g, fb = a / g;
    LinIneq out;
    out.coeffs.resize(pos.coeffs.size());
    for (size_t i = 0; i < pos.coeffs.size(); ++i)
        out.coeffs[i] = checked_add(checked_mul(fa, pos.coeffs[i]), checked_mul(fb, neg.coeffs[i]));
    out.rhs = checked_add(checked_mul(fa, pos.rhs), checked_mul(fb, neg.rhs));
    return out;
}

bool trivially_false(const LinIneq& q)
{
    for (long long c : q.coeffs)
        if (c != 0) return false;
    return q.rhs > 0;
}

} // namespace

std::vector<LinIneq> fm_eliminate(const std::vector<LinIneq>& rows, size_t var)
{
    std::vector<LinIneq> keep, pos, neg;
    for (const LinIneq& q : rows) {
        if (q.coeffs[var] == 0)
            keep.push_back(q);
        else if (q.coeffs[var] > 0)
            pos.push_back(q);
        else
            neg.push_back(q);
    }
    std::set<std::pair<std::vector<long long>, long long>> seen;
    std::vector<LinIneq> out;
    bool dead = false;
    auto add = [&](LinIneq q) {
        q.coeffs[var] = 0;
        bool zero = true;
        for (long long c : q.coeffs) zero = zero && c == 0;
        if (zero) {
            if (q.rhs > 0) dead = true;
            return;
        }
        q = reduce_row(q);
        if (seen.insert({q.coeffs, q.rhs}).second) out.push_back(q);
    };
    for (const LinIneq& q : keep) add(q);
    for (const LinIneq& p : pos)
        for (const LinIneq& n : neg) {
            add(combine(p, n, var));
            if (dead) break;
        }
    if (dead) {
        size_t dim = rows[0].coeffs.size();
        return {LinIneq{std::vector<long long>(dim, 0), 1}};
    }
    return out;
}

bool fm_feasible(const std::vector<LinIneq>& rows, size_t row_cap)
{
    if (rows.empty()) return true;
    for (const LinIneq& q : rows)
        if (trivially_false(q)) return false;
    std::vector<LinIneq> cur = rows;
    size_t dim = rows[0].coeffs.size();
    for (size_t round = 0; round < dim; ++round) {
        size_t bestv = dim;
        size_t bestcost = SIZE_MAX;
        for (size_t v = 0; v < dim; ++v) {
            size_t p = 0, n = 0;
            for (const LinIneq& q : cur) {
                if (q.coeffs[v] > 0) ++p;
                if (q.coeffs[v] < 0) ++n;
            }
            if (p + n == 0) continue;
            size_t cost = p * n;
            if (cost < bestcost) {
                bestcost = cost;
                bestv = v;
            }
        }
        if (bestv == dim) break;
        cur = fm_eliminate(cur, bestv);
        for (const LinIneq& q : cur)
            if (trivially_false(q)) return false;
        if (cur.size() > row_cap) return true;
    }
    for (const LinIneq& q : cur)
        if (trivially_false(q)) return false;
    return true;
}

namespace {

// An affine form a.x + c over the first dim-1 variables.
struct Aff {
    std::vector<long long> a;
    long long c = 0;
};

ElementarySet drop_last_column(const ElementarySet& e)
{
    ElementarySet out;
    out.dim = e.dim - 1;
    for (const LinIneq& q : e.inequalities) {
        LinIneq r;
        r.coeffs.assign(q.coeffs.begin(), q.coeffs.end() - 1);
        r.rhs = q.rhs;
        out.inequalities.push_back(std::move(r));
    }
    for (const Congruence& c : e.congruences) {
        Congruence r;
        r.coeffs.assign(c.coeffs.begin(), c.coeffs.end() - 1);
        r.modulus = c.modulus;
        r.residue = c.residue;
        out.congruences.push_back(std::move(r));
    }
    return out;
}

bool quick_nonempty(const ElementarySet& e)
{
    if (e.is_canonical_empty()) return false;
    return fm_feasible(e.inequalities);
}

void push_result(std::vector<ElementarySet>& out, std::set<std::string>& keys, ElementarySet e)
{
    e = es_normalize(e);
    if (!quick_nonempty(e)) return;
    std::string k = e.key();
    if (keys.insert(k).second) out.push_back(std::move(e));
}

// u * v = h.a . x + h.c with u > 0: eliminate v by substitution.
ElementarySet substitute_equality(const ElementarySet& e, long long u, const Aff& h)
{
    size_t v = e.dim - 1;
    ElementarySet out;
    out.dim = e.dim - 1;
    for (const LinIneq& q : e.inequalities) {
        long long dv = q.coeffs[v];
        LinIneq r;
        r.coeffs.resize(out.dim);
        for (size_t i = 0; i < out.dim; ++i)
            r.coeffs[i] = checked_add(checked_mul(u, q.coeffs[i]), checked_mul(dv, h.a[i]));
        r.rhs = checked_add(checked_mul(u, q.rhs), -checked_mul(dv, h.c));
        out.inequalities.push_back(std::move(r));
    }
    for (const Congruence& c : e.congruences) {
        long long dv = c.coeffs[v];
        Congruence r;
        r.coeffs.resize(out.dim);
        for (size_t i = 0; i < out.dim; ++i)
            r.coeffs[i] = checked_add(checked_mul(u, c.coeffs[i]), checked_mul(dv, h.a[i]));
        r.modulus = checked_mul(u, c.modulus);
        r.residue = checked_add(checked_mul(u, c.residue), -checked_mul(dv, h.c));
        out.congruences.push_back(std::move(r));
    }
    if (u > 1) {
        // u must divide the substituted form
        Congruence div;
        div.coeffs = h.a;
        div.modulus = u;
        div.residue = ((-h.c) % u + u) % u;
        div.coeffs.resize(out.dim);
        out.congruences.push_back(std::move(div));
    }
    return out;
}

} // namespace

std::vector<ElementarySet> es_project_last(const ElementarySet& raw)
{
    std::vector<ElementarySet> result;
    std::set<std::string> keys;

    ElementarySet e = es_normalize(raw);
    if (e.dim == 0) throw error("es_project_last: dimension 0");
    size_t v = e.dim - 1;
    if (!quick_nonempty(e)) return result;

    bool involved = false;
    for (const LinIneq& q : e.inequalities) involved = involved || q.coeffs[v] != 0;
    for (const Congruence& c : e.congruences) involved = involved || c.coeffs[v] != 0;
    if (!involved) {
        push_result(result, keys, drop_last_column(e));
        return result;
    }

    // 1) an equality pins the variable: substitute it away.
    for (const LinIneq& q : e.inequalities) {
        if (q.coeffs[v] == 0) continue;
        std::vector<long long> neg(q.coeffs.size());
        for (size_t i = 0; i < q.coeffs.size(); ++i) neg[i] = -q.coeffs[i];
        bool matched = false;
        for (const LinIneq& p : e.inequalities)
            if (p.coeffs == neg && p.rhs == -q.rhs) { matched = true; break; }
        if (!matched) continue;
        LinIneq eq = q;
        if (eq.coeffs[v] < 0) {
            for (long long& c : eq.coeffs) c = -c;
            eq.rhs = -eq.rhs;
        }
        Aff h;
        h.a.assign(e.dim - 1, 0);
        for (size_t i = 0; i + 1 < e.dim; ++i) h.a[i] = -eq.coeffs[i];
        h.c = eq.rhs;
        push_result(result, keys, substitute_equality(e, eq.coeffs[v], h));
        return result;
    }

    // 2) congruences involving the variable: split it into residue classes
    //    v = M*w + t, turning them into congruences on the other variables.
    long long M = 1;
    for (const Congruence& c : e.congruences)
        if (c.coeffs[v] != 0) M = lcm_ll(M, c.modulus);
    if (M > 1) {
        for (long long t = 0; t < M; ++t) {
            ElementarySet branch;
            branch.dim = e.dim;
            for (const LinIneq& q : e.inequalities) {
                LinIneq r = q;
                r.rhs = checked_add(r.rhs, -checked_mul(q.coeffs[v], t));
                r.coeffs[v] = checked_mul(q.coeffs[v], M);
                branch.inequalities.push_back(std::move(r));
            }
            for (const Congruence& c : e.congruences) {
                Congruence r = c;
                if (c.coeffs[v] != 0) {
                    r.residue = checked_add(r.residue, -checked_mul(c.coeffs[v], t));
                    r.coeffs[v] = 0;
                }
                branch.congruences.push_back(std::move(r));
            }
            branch = es_normalize(branch);
            if (!quick_nonempty(branch)) continue;
            for (ElementarySet& piece : es_project_last(branch))
                push_result(result, keys, std::move(piece));
        }
        return result;
    }

    // 3) congruence-free variable: lower/upper bound pieces with exact
    //    floor/ceiling analysis.
    std::vector<std::pair<long long, Aff>> lows, ups;  // u*v >= G ; w*v <= F
    ElementarySet base;
    base.dim = e.dim - 1;
    base.congruences = drop_last_column(e).congruences;
    for (const LinIneq& q : e.inequalities) {
        long long dv = q.coeffs[v];
        Aff f;
        f.a.assign(e.dim - 1, 0);
        if (dv == 0) {
            LinIneq r;
            r.coeffs.assign(q.coeffs.begin(), q.coeffs.end() - 1);
            r.rhs = q.rhs;
            base.inequalities.push_back(std::move(r));
        } else if (dv > 0) {
            for (size_t i = 0; i + 1 < e.dim; ++i) f.a[i] = -q.coeffs[i];
            f.c = q.rhs;
            lows.push_back({dv, std::move(f)});
        } else {
            for (size_t i = 0; i + 1 < e.dim; ++i) f.a[i] = q.coeffs[i];
            f.c = -q.rhs;
            ups.push_back({-dv, std::move(f)});
        }
    }
    if (lows.empty() || ups.empty()) {
        // fibers are half-infinite: the shadow is the projection
        push_result(result, keys, base);
        return result;
    }

    // Per-variable lower bounds from single-variable rows let us discard
    // bounds dominated everywhere on the region, which keeps the number of
    // active-pair pieces small.
    std::vector<std::optional<long long>> lower_bound(e.dim - 1);
    for (const LinIneq& q : e.inequalities) {
        size_t nz = 0, at = 0;
        for (size_t i = 0; i + 1 < e.dim; ++i)
            if (q.coeffs[i] != 0) { ++nz; at = i; }
        if (nz != 1 || q.coeffs[e.dim - 1] != 0 || q.coeffs[at] <= 0) continue;
        long long b = q.rhs / q.coeffs[at];
        if (q.rhs % q.coeffs[at] != 0 && q.rhs > 0) ++b;
        if (!lower_bound[at] || *lower_bound[at] < b) lower_bound[at] = b;
    }
    // dom(f, g): u*v >= f and w*v >= g scale to the common denominator; f/u is
    // everywhere <= g/w on the region when the difference has nonnegative
    // coefficients and nonnegative value at the componentwise lower bounds.
    auto form_le = [&](long long u, const Aff& f, long long w, const Aff& g) {
        __int128 acc = static_cast<__int128>(u) * g.c - static_cast<__int128>(w) * f.c;
        for (size_t i = 0; i + 1 < e.dim; ++i) {
            long long d = checked_add(checked_mul(u, g.a[i]), -checked_mul(w, f.a[i]));
            if (d == 0) continue;
            if (d < 0 || !lower_bound[i]) return false;
            acc += static_cast<__int128>(d) * *lower_bound[i];
        }
        return acc >= 0;
    };
    auto prune = [&](std::vector<std::pair<long long, Aff>>& bounds, bool lower) {
        std::vector<char> drop(bounds.size(), 0);
        for (size_t i = 0; i < bounds.size(); ++i)
            for (size_t j = 0; j < bounds.size() && !drop[i]; ++j) {
                if (i == j || drop[j]) continue;
                const auto& [u, f] = bounds[i];
                const auto& [w, g] = bounds[j];
                // lower bounds: f/u <= g/w everywhere makes f redundant;
                // upper bounds: f/u >= g/w everywhere makes f redundant
                bool redundant = lower ? form_le(u, f, w, g) : form_le(w, g, u, f);
                if (redundant) drop[i] = 1;
            }
        std::vector<std::pair<long long, Aff>> kept;
        for (size_t i = 0; i < bounds.size(); ++i)
            if (!drop[i]) kept.push_back(std::move(bounds[i]));
        bounds = std::move(kept);
    };
    prune(lows, true);
    prune(ups, false);

    // Exact integer elimination: the dark shadow guarantees a lattice point in
    // the fiber; the remaining solutions pin the variable to one of finitely
    // many offsets above some lower bound (the splinters).
    long long wmax = 1;
    for (const auto& [w, F] : ups) { (void)F; wmax = std::max(wmax, w); }

    ElementarySet dark = base;
    for (const auto& [u, G] : lows)
        for (const auto& [w, F] : ups) {
            LinIneq r;
            r.coeffs.resize(e.dim - 1);
            for (size_t i = 0; i + 1 < e.dim; ++i)
                r.coeffs[i] = checked_add(checked_mul(u, F.a[i]), -checked_mul(w, G.a[i]));
            r.rhs = checked_add(checked_mul(w, G.c),
                                checked_add(-checked_mul(u, F.c), (u - 1) * (w - 1)));
            dark.inequalities.push_back(std::move(r));
        }
    push_result(result, keys, std::move(dark));

    for (const auto& [u, G] : lows) {
        if (u == 1) continue;  // the dark shadow is exact for unit lower bounds
        long long jmax = (u * wmax - u - wmax) / wmax;
        for (long long j = 0; j <= jmax; ++j) {
            // u * v = G + j
            Aff h = G;
            h.c = checked_add(h.c, j);
            ElementarySet eq = e;
            push_result(result, keys, substitute_equality(eq, u, h));
        }
    }
    return result;
}

namespace {

ElementarySet swap_columns(ElementarySet e, size_t i, size_t j)
{
    if (i == j) return e;
    for (LinIneq& q : e.inequalities) std::swap(q.coeffs[i], q.coeffs[j]);
    for (Congruence& c : e.congruences) std::swap(c.coeffs[i], c.coeffs[j]);
    return e;
}

// When every congruence lives on the tail columns only, enumerate the joint
// residue vectors modulo the lcm and substitute a = M b + t; afterwards the
// system is congruence-free and its rows usually shrink by a gcd.
bool residue_split_tail(const ElementarySet& e, size_t keep, std::vector<ElementarySet>& out)
{
    if (e.congruences.empty()) return false;
    long long M = 1;
    for (const Congruence& c : e.congruences) {
        for (size_t i = 0; i < keep; ++i)
            if (c.coeffs[i] != 0) return false;
        M = lcm_ll(M, c.modulus);
    }
    std::vector<size_t> cols;
    for (size_t i = keep; i < e.dim; ++i) {
        bool used = false;
        for (const Congruence& c : e.congruences) used = used || c.coeffs[i] != 0;
        if (used) cols.push_back(i);
    }
    if (cols.empty() || M == 1) return false;

    double combos = 1;
    for (size_t i = 0; i < cols.size(); ++i) combos *= static_cast<double>(M);
    if (combos > 1 << 20) return false;  // fall back to variable-at-a-time splitting

    std::vector<long long> t(cols.size(), 0);
    for (;;) {
        bool ok = true;
        for (const Congruence& c : e.congruences) {
            long long v = -c.residue;
            for (size_t k = 0; k < cols.size(); ++k) v += c.coeffs[cols[k]] * t[k];
            if (((v % c.modulus) + c.modulus) % c.modulus != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ElementarySet branch;
            branch.dim = e.dim;
            for (const LinIneq& q : e.inequalities) {
                LinIneq r = q;
                for (size_t k = 0; k < cols.size(); ++k) {
                    r.rhs = checked_add(r.rhs, -checked_mul(q.coeffs[cols[k]], t[k]));
                    r.coeffs[cols[k]] = checked_mul(q.coeffs[cols[k]], M);
                }
                branch.inequalities.push_back(std::move(r));
            }
            branch = es_normalize(branch);
            if (quick_nonempty(branch)) out.push_back(std::move(branch));
        }
        size_t k = 0;
        while (k < cols.size() && t[k] == M - 1) { t[k] = 0; ++k; }
        if (k == cols.size()) break;
        ++t[k];
    }
    return true;
}

// Cost-guided choice of the next tail column to eliminate.
size_t pick_column(const ElementarySet& e, size_t keep)
{
    size_t best = e.dim - 1;
    long long best_score = -1;
    for (size_t c = keep; c < e.dim; ++c) {
        bool in_equality_unit = false, in_equality = false;
        long long lows = 0, ups = 0, umax = 1, vmax = 1;
        for (const LinIneq& q : e.inequalities) {
            long long d = q.coeffs[c];
            if (d == 0) continue;
            std::vector<long long> neg(q.coeffs.size());
            for (size_t i = 0; i < q.coeffs.size(); ++i) neg[i] = -q.coeffs[i];
            for (const LinIneq& p : e.inequalities)
                if (p.coeffs == neg && p.rhs == -q.rhs) {
                    in_equality = true;
                    if (d == 1 || d == -1) in_equality_unit = true;
                }
            if (d > 0) {
                ++lows;
                umax = std::max(umax, d);
            } else {
                ++ups;
                vmax = std::max(vmax, -d);
            }
        }
        long long M = 1;
        for (const Congruence& g : e.congruences)
            if (g.coeffs[c] != 0) M = lcm_ll(M, g.modulus);
        long long score;
        if (in_equality_unit)
            score = 0;
        else if (in_equality)
            score = 1;
        else
            score = 2 + M * std::max<long long>(1, lows * ups) * umax * vmax;
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = c;
        }
        if (best_score == 0) break;
    }
    return best;
}

void project_tail_rec(const ElementarySet& e, size_t keep, std::vector<ElementarySet>& out,
                      std::set<std::string>& keys, size_t piece_cap)
{
    if (e.dim == keep) {
        if (keys.insert(e.key()).second) out.push_back(e);
        if (out.size() > piece_cap)
            throw cap_error("es_project_tail: piece cap " + std::to_string(piece_cap) +
                            " exceeded");
        return;
    }
    std::vector<ElementarySet> split;
    if (residue_split_tail(e, keep, split)) {
        for (const ElementarySet& s : split) project_tail_rec(s, keep, out, keys, piece_cap);
        return;
    }
    ElementarySet cur = swap_columns(e, pick_column(e, keep), e.dim - 1);
    for (ElementarySet& p : es_project_last(cur)) project_tail_rec(p, keep, out, keys, piece_cap);
}

} // namespace

std::vector<ElementarySet> es_project_tail(const ElementarySet& e, size_t keep, size_t piece_cap)
{
    if (keep > e.dim) throw error("es_project_tail: keep exceeds dim");
    std::vector<ElementarySet> out;
    std::set<std::string> keys;
    project_tail_rec(es_normalize(e), keep, out, keys, piece_cap);
    return out;
}

namespace {

std::vector<long long> primitive(std::vector<long long> v)
{
    long long g = 0;
    for (long long x : v) g = gcd_ll(g, x);
    if (g > 1)
        for (long long& x : v) x /= g;
    return v;
}

struct DDRay {
    std::vector<Rat> dir;
    std::vector<uint64_t> zero;  // bitmask over processed constraints

    bool zero_subset_of(const DDRay& other) const
    {
        for (size_t i = 0; i < zero.size(); ++i)
            if ((zero[i] & ~other.zero[i]) != 0) return false;
        return true;
    }
};

void set_bit(std::vector<uint64_t>& bits, size_t i) { bits[i / 64] |= (uint64_t(1) << (i % 64)); }

std::vector<long long> ray_to_primitive(const Vec& v)
{
    long long lcm = 1;
    for (const Rat& x : v) lcm = lcm / gcd_ll(lcm, x.den()) * x.den();
    std::vector<long long> out;
    for (const Rat& x : v) out.push_back((x * Rat(lcm)).as_integer());
    return primitive(std::move(out));
}

} // namespace

std::vector<std::vector<long long>> conic_hull_facets(
    const std::vector<std::vector<long long>>& generators)
{
    if (generators.empty()) throw error("conic_hull_facets: no generators");
    size_t d = generators[0].size();

    std::set<std::vector<long long>> uniq;
    for (const auto& g : generators) {
        bool zero = true;
        for (long long x : g) zero = zero && x == 0;
        if (!zero) uniq.insert(primitive(g));
    }
    std::vector<std::vector<long long>> gens(uniq.begin(), uniq.end());

    // Rank check and selection of d independent generators by row reduction.
    Mat m;
    std::vector<size_t> pivot_rows;
    {
        Mat work;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Vec row(d);
            for (size_t i = 0; i < d; ++i) row[i] = Rat(gens[gi][i]);
            // try to reduce row by current basis
            Vec r = row;
            for (size_t b = 0; b < work.size(); ++b) {
                size_t lead = 0;
                while (lead < d && work[b][lead].is_zero()) ++lead;
                if (lead < d && !r[lead].is_zero()) {
                    Rat f = r[lead] / work[b][lead];
                    for (size_t i = 0; i < d; ++i) r[i] -= f * work[b][i];
                }
            }
            if (!vec_is_zero(r)) {
                work.push_back(r);
                pivot_rows.push_back(gi);
                // keep rows in echelon-ish order
                std::sort(work.begin(), work.end(), [&](const Vec& a, const Vec& b) {
                    size_t la = 0, lb = 0;
                    while (la < d && a[la].is_zero()) ++la;
                    while (lb < d && b[lb].is_zero()) ++lb;
                    return la < lb;
                });
            }
            if (work.size() == d) break;
        }
        if (work.size() < d)
            throw error("conic_hull_facets: generators span a proper subspace (rank " +
                        std::to_string(work.size()) + " of " + std::to_string(d) + ")");
    }

    size_t nblocks = (gens.size() + 63) / 64;

    // Initial simplicial dual cone from the d independent generators.
    Mat sel(d, Vec(d));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) sel[j][i] = Rat(gens[pivot_rows[j]][i]);
    Mat inv = mat_inverse(sel);
    std::vector<DDRay> rays;
    for (size_t j = 0; j < d; ++j) {
        DDRay r;
        r.dir.resize(d);
        for (size_t i = 0; i < d; ++i) r.dir[i] = inv[i][j];
        r.zero.assign(nblocks, 0);
        for (size_t c = 0; c < d; ++c)
            if (c != j) set_bit(r.zero, pivot_rows[c]);
        rays.push_back(std::move(r));
    }

    auto value = [&](const DDRay& r, size_t gi) {
        Rat s;
        for (size_t i = 0; i < d; ++i) s += r.dir[i] * Rat(gens[gi][i]);
        return s;
    };

    for (size_t gi = 0; gi < gens.size(); ++gi) {
        bool initial = false;
        for (size_t pr : pivot_rows) initial = initial || pr == gi;
        if (initial) continue;

        std::vector<Rat> vals(rays.size());
        bool any_neg = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            vals[r] = value(rays[r], gi);
            any_neg = any_neg || vals[r] < Rat(0);
        }
        if (!any_neg) {
            for (size_t r = 0; r < rays.size(); ++r)
                if (vals[r].is_zero()) set_bit(rays[r].zero, gi);
            continue;
        }
        std::vector<DDRay> next;
        std::vector<size_t> pos, neg;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (vals[r] > Rat(0))
                pos.push_back(r);
            else if (vals[r] < Rat(0))
                neg.push_back(r);
            else {
                DDRay keep = rays[r];
                set_bit(keep.zero, gi);
                next.push_back(std::move(keep));
            }
        }
        for (size_t r : pos) next.push_back(rays[r]);
        for (size_t p : pos)
            for (size_t n : neg) {
                // adjacency: no third ray's zero set contains the intersection
                DDRay cand;
                cand.zero.resize(nblocks);
                for (size_t i = 0; i < nblocks; ++i)
                    cand.zero[i] = rays[p].zero[i] & rays[n].zero[i];
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (cand.zero_subset_of(rays[r])) adjacent = false;
                }
                if (!adjacent) continue;
                cand.dir.resize(d);
                for (size_t i = 0; i < d; ++i)
                    cand.dir[i] = vals[p] * rays[n].dir[i] - vals[n] * rays[p].dir[i];
                set_bit(cand.zero, gi);
                next.push_back(std::move(cand));
            }
        rays = std::move(next);
        if (rays.empty()) break;  // dual is trivial: hull is all of R^d
    }

    std::set<std::vector<long long>> out;
    for (const DDRay& r : rays) out.insert(ray_to_primitive(r.dir));
    return {out.begin(), out.end()};
}

} // namespace tsl
