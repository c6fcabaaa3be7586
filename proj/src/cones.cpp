#include "tsl/cones.hpp"

#include <array>
#include <map>
#include <mutex>

#include "tsl/polyhedra.hpp"

namespace tsl {

bool ConeSystem::member(const std::vector<Rat>& fund6) const
{
    for (const TripleFunctional& f : stability)
        if (f.eval(fund6) < Rat(0)) return false;
    for (const TripleFunctional& f : chamber)
        if (f.eval(fund6) < Rat(0)) return false;
    return true;
}

std::vector<const TripleFunctional*> ConeSystem::all() const
{
    std::vector<const TripleFunctional*> out;
    for (const TripleFunctional& f : stability) out.push_back(&f);
    for (const TripleFunctional& f : chamber) out.push_back(&f);
    return out;
}

std::vector<Rat> triple_fund(const RootSystem& rs, const Weight& a, const Weight& b,
                             const Weight& c)
{
    std::vector<Rat> out;
    for (const Weight* w : {&a, &b, &c})
        for (const Rat& x : rs.fund_coords(*w)) out.push_back(x);
    return out;
}

const std::vector<std::array<std::array<long long, 2>, 3>>& g2_generator_data()
{
    static const std::vector<std::array<std::array<long long, 2>, 3>> gens = {
        {{{1, 0}, {1, 0}, {0, 0}}},  // delta_1
        {{{0, 1}, {0, 1}, {0, 0}}},  // delta_2
        {{{1, 0}, {1, 0}, {1, 0}}},  // delta_3
        {{{0, 1}, {0, 1}, {0, 1}}},  // delta_4
        {{{0, 1}, {0, 1}, {3, 0}}},  // delta_5
        {{{0, 1}, {0, 2}, {3, 0}}},  // delta_6
        {{{0, 1}, {1, 0}, {1, 0}}},  // delta_7
        {{{0, 1}, {1, 0}, {2, 0}}},  // delta_8
        {{{0, 1}, {0, 1}, {2, 0}}},  // delta_9
        {{{0, 1}, {0, 1}, {1, 0}}},  // epsilon_1
        {{{0, 1}, {0, 1}, {1, 1}}},  // epsilon_2
    };
    return gens;
}

namespace {

// ambient linear form -> fundamental-coordinate form (compose with the
// fundamental-weight basis).
std::vector<Rat> form_to_fund(const RootSystem& rs, const Form& f)
{
    std::vector<Rat> out;
    for (const Weight& w : rs.fundamental_weights()) out.push_back(dot(f, w));
    return out;
}

TripleFunctional assemble(const RootSystem& rs, const std::array<Form, 3>& parts,
                          const std::string& label)
{
    TripleFunctional out;
    out.label = label;
    for (const Form& f : parts) {
        std::vector<Rat> ff = form_to_fund(rs, f);
        out.coeffs.insert(out.coeffs.end(), ff.begin(), ff.end());
    }
    return out;
}

ConeSystem build_cone_c2(const RootSystem& rs)
{
    ConeSystem cone;
    cone.system = "C2";
    Form zero{Rat(0), Rat(0)};
    Form X{Rat(1), Rat(0)}, Y{Rat(0), Rat(1)};
    Form nX{Rat(-1), Rat(0)}, nY{Rat(0), Rat(-1)};

    // x_i <= x_j + x_k over {i,j,k} = {1,2,3}
    for (int i = 0; i < 3; ++i) {
        std::array<Form, 3> parts{};
        parts.fill(X);
        parts[i] = nX;
        cone.stability.push_back(
            assemble(rs, parts, "x" + std::to_string(i + 1) + "<=x+x"));
    }
    // y_i <= y_j + x_k, both orders of (j,k)
    for (int i = 0; i < 3; ++i) {
        int a = (i + 1) % 3, b = (i + 2) % 3;
        for (auto [j, k] : {std::pair{a, b}, std::pair{b, a}}) {
            std::array<Form, 3> parts{};
            parts.fill(zero);
            parts[i] = nY;
            parts[j] = Y;
            parts[k] = X;
            cone.stability.push_back(assemble(
                rs, parts,
                "y" + std::to_string(i + 1) + "<=y" + std::to_string(j + 1) + "+x" +
                    std::to_string(k + 1)));
        }
    }
    // x_i + y_j <= S/2, written as S - 2 x_i - 2 y_j >= 0
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<Form, 3> parts{};
            for (int m = 0; m < 3; ++m) parts[m] = Form{Rat(1), Rat(1)};
            parts[i] = vec_add(parts[i], vec_scale(Rat(2), nX));
            parts[j] = vec_add(parts[j], vec_scale(Rat(2), nY));
            cone.stability.push_back(assemble(
                rs, parts, "x" + std::to_string(i + 1) + "+y" + std::to_string(j + 1) + "<=S/2"));
        }
    // chamber rows per component
    for (int i = 0; i < 3; ++i)
        for (size_t s = 0; s < rs.rank(); ++s) {
            std::array<Form, 3> parts{};
            parts.fill(zero);
            parts[i] = rs.simple_coroots()[s];
            cone.chamber.push_back(assemble(
                rs, parts, "alpha" + std::to_string(s + 1) + "(" + std::to_string(i + 1) + ")"));
        }
    return cone;
}

ConeSystem cone_from_facets(const std::string& id,
                            const std::vector<std::vector<long long>>& facets)
{
    ConeSystem cone;
    cone.system = id;
    for (const auto& f : facets) {
        TripleFunctional tf;
        for (long long c : f) tf.coeffs.push_back(Rat(c));
        tf.label = "facet";
        cone.stability.push_back(std::move(tf));
    }
    return cone;
}

ConeSystem build_cone_g2(const RootSystem& rs)
{
    (void)rs;
    // S3 orbits of the printed generators
    std::vector<std::vector<long long>> points;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& g : g2_generator_data())
        for (const auto& p : perms) {
            std::vector<long long> v;
            for (int c = 0; c < 3; ++c) {
                v.push_back(g[p[c]][0]);
                v.push_back(g[p[c]][1]);
            }
            points.push_back(std::move(v));
        }
    return cone_from_facets("G2", conic_hull_facets(points));
}

ConeSystem build_cone_a2(const RootSystem& rs)
{
    // Hull of the invariant-positive triples in the box of fundamental
    // coordinates <= 4; the lattice points of Tens(A2) generate the cone.
    CharOracle oracle(rs);
    std::vector<std::vector<long long>> points;
    const long long box = 4;
    for (long long a1 = 0; a1 <= box; ++a1)
        for (long long a2 = 0; a2 <= box; ++a2)
            for (long long b1 = 0; b1 <= box; ++b1)
                for (long long b2 = 0; b2 <= box; ++b2) {
                    Weight lam = iv_to_weight(rs, {a1, a2});
                    Weight mu = iv_to_weight(rs, {b1, b2});
                    DecompositionTable t = oracle.tensor_decompose(lam, mu);
                    for (long long c1 = 0; c1 <= box; ++c1)
                        for (long long c2 = 0; c2 <= box; ++c2) {
                            Weight nu = iv_to_weight(rs, {c1, c2});
                            IVec nu_star = iv_from_weight(rs, rs.contragredient(nu));
                            if (t.at(nu_star) > 0)
                                points.push_back({a1, a2, b1, b2, c1, c2});
                        }
                }
    return cone_from_facets("A2", conic_hull_facets(points));
}

} // namespace

const ConeSystem& cone_p(const RootSystem& rs)
{
    static std::map<std::string, ConeSystem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rs.id());
    if (it != cache.end()) return it->second;

    ConeSystem cone;
    if (rs.id() == "C2")
        cone = build_cone_c2(rs);
    else if (rs.id() == "G2")
        cone = build_cone_g2(rs);
    else if (rs.id() == "A2")
        cone = build_cone_a2(rs);
    else
        throw error("cone_p: unsupported system " + rs.id());
    return cache.emplace(rs.id(), std::move(cone)).first->second;
}

bool much_greater(const RootSystem& rs, const Weight& lambda, const Weight& mu)
{
    if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
        throw error("much_greater: weights must be dominant");
    for (const WeylElem& w : rs.weyl_group())
        if (!rs.is_dominant(vec_add(lambda, w.apply(mu)))) return false;
    return true;
}

namespace {

// v in the dual cone of the chamber, i.e. a nonnegative combination of the
// simple roots.
bool dual_cone_member(const RootSystem& rs, const Weight& v)
{
    for (const Rat& c : rs.simple_root_coords(v))
        if (c < Rat(0)) return false;
    return true;
}

} // namespace

bool weight_support_test(const RootSystem& rs, const Weight& beta, const Weight& mu)
{
    if (!rs.is_dominant(mu)) throw error("weight_support_test: mu must be dominant");
    if (!rs.lattice_member(vec_sub(mu, beta), Lattice::Root)) return false;
    for (const WeylElem& w : rs.weyl_group())
        if (!dual_cone_member(rs, vec_sub(mu, w.apply(beta)))) return false;
    return true;
}

bool c12_member(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu)
{
    if (!rs.is_dominant(lambda) || !rs.is_dominant(mu) || !rs.is_dominant(nu))
        throw error("c12_member: weights must be dominant");
    Weight trace = vec_add(vec_add(lambda, mu), nu);
    if (!rs.lattice_member(trace, Lattice::Root)) return false;
    if (!much_greater(rs, lambda, mu)) return false;
    Weight nu_star = rs.contragredient(nu);
    for (const WeylElem& w : rs.weyl_group()) {
        Weight lhs = vec_add(w.apply(lambda), mu);
        if (!dual_cone_member(rs, vec_sub(lhs, w.apply(nu_star)))) return false;
    }
    return true;
}

} // namespace tsl
