#include "tsl/root_system.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace tsl {

namespace {

struct VecHash {
    size_t operator()(const Vec& v) const { return vec_hash(v); }
};

Mat simple_reflection_matrix(const Weight& root, const Form& coroot, size_t dim)
{
    // s(v) = v - <coroot,v> root, column by column.
    Mat m = mat_identity(dim);
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i)
            m[i][j] -= coroot[j] * root[i];
    return m;
}

} // namespace

RootSystem RootSystem::build(const std::string& id)
{
    RootSystem rs;
    rs.id_ = id;
    if (id == "A1") {
        rs.rank_ = 1;
        rs.simple_roots_ = {{Rat(2)}};
        rs.simple_coroots_ = {{Rat(1)}};
        rs.fundamental_weights_ = {{Rat(1)}};
        rs.cartan_ = {{2}};
        rs.gram_ = {{Rat(1)}};
        rs.finish(16);
        return rs;
    }
    if (id == "C2") {
        // Plane coordinates (x,y); simple roots e1-e2 and 2e2, simple coroot
        // forms x-y and y; then Q(R) = {x+y even}, P(R) = Z^2.
        rs.rank_ = 2;
        rs.simple_roots_ = {{Rat(1), Rat(-1)}, {Rat(0), Rat(2)}};
        rs.simple_coroots_ = {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}};
        rs.fundamental_weights_ = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
        rs.cartan_ = {{2, -2}, {-1, 2}};
        rs.gram_ = mat_identity(2);
        rs.finish(64);
        return rs;
    }
    if (id == "A2") {
        RootSystem a = build({{2, -1}, {-1, 2}});
        a.id_ = "A2";
        return a;
    }
    if (id == "G2") {
        RootSystem g = build({{2, -3}, {-1, 2}});
        g.id_ = "G2";
        return g;
    }
    throw error("unsupported root system id: " + id);
}

RootSystem RootSystem::build(const std::vector<std::vector<long long>>& cartan, size_t weyl_cap)
{
    size_t n = cartan.size();
    if (n == 0) throw error("empty Cartan matrix");
    for (const auto& row : cartan) {
        if (row.size() != n) throw error("Cartan matrix is not square");
    }
    for (size_t i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) throw error("Cartan matrix diagonal must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw error("Cartan matrix off-diagonal must be <= 0");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw error("Cartan matrix zero pattern must be symmetric");
        }
    }

    RootSystem rs;
    rs.id_ = "custom";
    rs.rank_ = n;
    rs.cartan_ = cartan;

    // Ambient basis = fundamental weights: coroot forms are the coordinates,
    // simple root j has coordinates C(:,j).
    for (size_t j = 0; j < n; ++j) {
        Weight root(n);
        for (size_t i = 0; i < n; ++i) root[i] = Rat(cartan[i][j]);
        rs.simple_roots_.push_back(root);
        Form f(n, Rat(0));
        f[j] = Rat(1);
        rs.simple_coroots_.push_back(f);
        Weight w(n, Rat(0));
        w[j] = Rat(1);
        rs.fundamental_weights_.push_back(w);
    }

    // Symmetrizer d with d_i C_ij = d_j C_ji, propagated over the diagram.
    std::vector<Rat> d(n, Rat(0));
    d[0] = Rat(1);
    std::queue<size_t> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        size_t i = bfs.front();
        bfs.pop();
        for (size_t j = 0; j < n; ++j) {
            if (i == j || cartan[i][j] == 0 || !d[j].is_zero()) continue;
            d[j] = d[i] * Rat(cartan[i][j], cartan[j][i]);
            bfs.push(j);
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (d[i].is_zero()) throw error("Cartan matrix is not connected; split the diagram");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (d[i] * Rat(cartan[i][j]) != d[j] * Rat(cartan[j][i]))
                throw error("Cartan matrix is not symmetrizable");

    // Gram matrix of the fundamental-weight basis: C^{-T} (D C) C^{-1}.
    Mat c(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) c[i][j] = Rat(cartan[i][j]);
    Mat b(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b[i][j] = d[i] * c[i][j];
    Mat cinv = mat_inverse(c);
    Mat cinv_t(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cinv_t[i][j] = cinv[j][i];
    rs.gram_ = mat_mul(cinv_t, mat_mul(b, cinv));

    rs.finish(weyl_cap);
    return rs;
}

void RootSystem::finish(size_t weyl_cap)
{
    size_t n = rank_;
    rho_ = Weight(fundamental_weights_[0].size(), Rat(0));
    for (const Weight& w : fundamental_weights_) rho_ = vec_add(rho_, w);

    Mat root_basis(rho_.size(), Vec(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < rho_.size(); ++i) root_basis[i][j] = simple_roots_[j][i];
    root_basis_inv_ = mat_inverse(root_basis);

    // Weyl group closure from the simple reflections.
    std::vector<Mat> gens;
    for (size_t i = 0; i < n; ++i)
        gens.push_back(simple_reflection_matrix(simple_roots_[i], simple_coroots_[i], rho_.size()));

    std::map<std::vector<std::string>, size_t> seen;
    auto key = [](const Mat& m) {
        std::vector<std::string> k;
        for (const Vec& row : m)
            for (const Rat& x : row) k.push_back(x.str());
        return k;
    };

    weyl_.clear();
    weyl_.push_back({mat_identity(rho_.size()), 0, 1});
    seen[key(weyl_[0].matrix)] = 0;
    std::queue<size_t> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        size_t cur = frontier.front();
        frontier.pop();
        for (const Mat& g : gens) {
            Mat next = mat_mul(g, weyl_[cur].matrix);
            auto k = key(next);
            if (seen.count(k)) continue;
            if (weyl_.size() >= weyl_cap)
                throw error("Weyl group closure exceeded cap " + std::to_string(weyl_cap) +
                            "; Cartan matrix is not of finite type or too large");
            int len = weyl_[cur].length + 1;
            seen[k] = weyl_.size();
            weyl_.push_back({std::move(next), len, len % 2 == 0 ? 1 : -1});
            frontier.push(weyl_.size() - 1);
        }
    }
    longest_ = 0;
    for (size_t i = 0; i < weyl_.size(); ++i)
        if (weyl_[i].length > weyl_[longest_].length) longest_ = i;

    // Positive roots and the matching coroot forms.
    std::unordered_set<Vec, VecHash> roots;
    for (const Weight& a : simple_roots_)
        for (const WeylElem& w : weyl_) roots.insert(w.apply(a));
    positive_roots_.clear();
    positive_coroots_.clear();
    std::vector<Weight> pos;
    for (const Vec& r : roots) {
        Vec coeffs = simple_root_coords(r);
        bool nonneg = true;
        for (const Rat& c : coeffs) nonneg = nonneg && c >= Rat(0);
        if (nonneg) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const Vec& a, const Vec& b) {
        return vec_str(a) < vec_str(b);
    });
    for (const Weight& r : pos) {
        Rat norm = inner(r, r);
        Form f(r.size());
        Vec gr = mat_apply(gram_, r);
        for (size_t i = 0; i < r.size(); ++i) f[i] = Rat(2) * gr[i] / norm;
        positive_roots_.push_back(r);
        positive_coroots_.push_back(f);
    }

    // Sanity: <alpha_i^vee, varpi_j> = delta_ij and sign = det.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (pair(simple_coroots_[i], fundamental_weights_[j]) != Rat(i == j ? 1 : 0))
                throw error("coroot/fundamental-weight pairing is not the identity");
    for (const WeylElem& w : weyl_)
        if (mat_det(w.matrix) != Rat(w.sign))
            throw error("Weyl element sign does not match determinant");
}

Vec RootSystem::fund_coords(const Weight& v) const
{
    Vec x(rank_);
    for (size_t i = 0; i < rank_; ++i) x[i] = pair(simple_coroots_[i], v);
    return x;
}

Weight RootSystem::weight_from_fund(const Vec& x) const
{
    if (x.size() != rank_) throw error("weight_from_fund: wrong length");
    Weight v(fundamental_weights_[0].size(), Rat(0));
    for (size_t i = 0; i < rank_; ++i) v = vec_add(v, vec_scale(x[i], fundamental_weights_[i]));
    return v;
}

bool RootSystem::is_dominant(const Weight& v) const
{
    for (const Form& f : simple_coroots_)
        if (pair(f, v) < Rat(0)) return false;
    return true;
}

std::pair<Weight, WeylElem> RootSystem::dominate(const Weight& v) const
{
    Weight u = v;
    Mat acc = mat_identity(v.size());
    int steps = 0;
    for (;;) {
        bool moved = false;
        for (size_t i = 0; i < rank_; ++i) {
            if (pair(simple_coroots_[i], u) < Rat(0)) {
                u = vec_sub(u, vec_scale(pair(simple_coroots_[i], u), simple_roots_[i]));
                acc = mat_mul(simple_reflection_matrix(simple_roots_[i], simple_coroots_[i], v.size()), acc);
                ++steps;
                moved = true;
                break;
            }
        }
        if (!moved) break;
        if (steps > static_cast<int>(weyl_.size())) throw error("dominate did not terminate");
    }
    // Identify the element in the stored group to return its true length.
    for (const WeylElem& w : weyl_)
        if (w.matrix == acc) return {u, w};
    throw error("dominate produced a matrix outside the Weyl group");
}

Weight RootSystem::dominant_rep(const Weight& v) const
{
    Weight u = v;
    size_t guard = 0;
    for (;;) {
        bool moved = false;
        for (size_t i = 0; i < rank_; ++i) {
            Rat val = pair(simple_coroots_[i], u);
            if (val < Rat(0)) {
                u = vec_sub(u, vec_scale(val, simple_roots_[i]));
                moved = true;
                break;
            }
        }
        if (!moved) return u;
        if (++guard > weyl_.size() + 1) throw error("dominant_rep did not terminate");
    }
}

Weight RootSystem::contragredient(const Weight& v) const
{
    if (!is_dominant(v)) throw error("contragredient requires a dominant weight");
    Weight r = longest_element().apply(v);
    for (Rat& x : r) x = -x;
    return r;
}

bool RootSystem::lattice_member(const Weight& v, Lattice which) const
{
    if (which == Lattice::WeightLat) {
        for (const Rat& x : fund_coords(v))
            if (!x.is_integer()) return false;
        return true;
    }
    for (const Rat& c : simple_root_coords(v))
        if (!c.is_integer()) return false;
    return true;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& v) const
{
    std::unordered_set<Vec, VecHash> seen;
    std::vector<Weight> orbit;
    std::queue<Weight> q;
    seen.insert(v);
    q.push(v);
    while (!q.empty()) {
        Weight cur = q.front();
        q.pop();
        orbit.push_back(cur);
        for (size_t i = 0; i < rank_; ++i) {
            Weight nxt = vec_sub(cur, vec_scale(pair(simple_coroots_[i], cur), simple_roots_[i]));
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    std::sort(orbit.begin(), orbit.end(), [](const Vec& a, const Vec& b) {
        return vec_str(a) < vec_str(b);
    });
    return orbit;
}

std::string RootSystem::weight_str(const Weight& v) const
{
    Vec x = fund_coords(v);
    std::string s;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += x[i].str();
    }
    return s;
}

Weight RootSystem::weight_parse(const std::string& s) const
{
    Vec x;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) x.push_back(Rat::parse(part));
    if (x.size() != rank_)
        throw error("expected " + std::to_string(rank_) + " fundamental coordinates, got '" + s + "'");
    return weight_from_fund(x);
}

} // namespace tsl
