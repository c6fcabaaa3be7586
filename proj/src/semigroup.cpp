#include "tsl/semigroup.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace tsl {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

IVec decode_box(long long idx, long long box, size_t len)
{
    IVec out(len);
    long long base = box + 1;
    for (size_t i = 0; i < len; ++i) {
        out[i] = idx % base;
        idx /= base;
    }
    return out;
}

long long box_count(long long box, size_t len)
{
    long long total = 1;
    for (size_t i = 0; i < len; ++i) total = checked_mul(total, box + 1);
    return total;
}

std::array<IVec, 3> triple_key(const RootSystem& rs, const Triple& t)
{
    return {iv_from_weight(rs, t.lam), iv_from_weight(rs, t.mu), iv_from_weight(rs, t.nu)};
}

} // namespace

void parallel_for(long long n, int workers, const std::function<void(int, long long)>& fn)
{
    workers = std::max(1, workers);
    if (workers == 1) {
        for (long long i = 0; i < n; ++i) fn(0, i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            try {
                for (long long i = w; i < n; i += workers) fn(w, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

nlohmann::ordered_json report_to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["box"] = r.box;
    j["scanned"] = r.scanned;
    nlohmann::ordered_json mm = nlohmann::ordered_json::array();
    for (const auto& t : r.mismatches) mm.push_back({t[0], t[1], t[2]});
    j["mismatches"] = std::move(mm);
    j["seconds"] = r.seconds;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

bool Semigroup::integral(const Triple& t) const
{
    return rs_.lattice_member(t.lam, Lattice::WeightLat) &&
           rs_.lattice_member(t.mu, Lattice::WeightLat) &&
           rs_.lattice_member(t.nu, Lattice::WeightLat);
}

bool Semigroup::dominant(const Triple& t) const
{
    return rs_.is_dominant(t.lam) && rs_.is_dominant(t.mu) && rs_.is_dominant(t.nu);
}

bool Semigroup::in_cone(const Triple& t) const
{
    return cone_p(rs_).member(triple_fund(rs_, t.lam, t.mu, t.nu));
}

Verdict Semigroup::tens_c2_criterion(const Triple& t) const
{
    if (rs_.id() != "C2") throw error("tens_c2_criterion: system is " + rs_.id());
    if (!dominant(t) || !integral(t) || !lambda_member(t) || !in_cone(t))
        return Verdict::Inapplicable;
    int on_axis = 0;
    for (const Weight* w : {&t.lam, &t.mu, &t.nu})
        if (rs_.fund_coords(*w)[0].is_zero()) ++on_axis;
    if (on_axis < 2) return Verdict::Member;
    // trace in 2 P(R): both fundamental coordinate sums even
    Vec trace = rs_.fund_coords(t.trace());
    bool in_2p = trace[0].as_integer() % 2 == 0 && trace[1].as_integer() % 2 == 0;
    return in_2p ? Verdict::Member : Verdict::NonMember;
}

namespace {

// Membership of (a, b, c) (fundamental coordinates) in the printed G2
// exceptional families.
bool g2_exceptional_member(const std::array<std::array<long long, 2>, 3>& t)
{
    auto [a, b, c] = t;
    if (a[0] != 0 || b[0] != 0) return false;
    // E_1: ([0,y1],[0,y2],[1,y3])
    if (c[0] == 1 && a[1] >= 0 && b[1] >= 0 && c[1] >= 0) return true;
    // E_2: ([0,1+n+m],[0,1+n+2m],[1+3m,0])
    if (c[1] == 0 && c[0] >= 1 && (c[0] - 1) % 3 == 0) {
        long long m = (c[0] - 1) / 3;
        long long n = a[1] - 1 - m;
        if (n >= 0 && b[1] == 1 + n + 2 * m) return true;
    }
    // E_3: ([0,1+n+m],[0,1+m],[1+3m,1+n])
    if (b[1] >= 1 && c[1] >= 1) {
        long long m = b[1] - 1;
        long long n = c[1] - 1;
        if (c[0] == 1 + 3 * m && a[1] == 1 + n + m) return true;
    }
    return false;
}

} // namespace

Verdict Semigroup::tens_g2_criterion(const Triple& t) const
{
    if (rs_.id() != "G2") throw error("tens_g2_criterion: system is " + rs_.id());
    if (!dominant(t) || !integral(t) || !in_cone(t)) return Verdict::Inapplicable;
    std::array<std::array<long long, 2>, 3> f{};
    std::array<IVec, 3> iv = triple_key(rs_, t);
    for (int i = 0; i < 3; ++i) f[i] = {iv[i][0], iv[i][1]};
    for (const auto& p : kPerms) {
        if (g2_exceptional_member({f[p[0]], f[p[1]], f[p[2]]})) return Verdict::NonMember;
    }
    return Verdict::Member;
}

std::vector<ElementarySet> Semigroup::elementary_decomposition_c2() const
{
    if (rs_.id() != "C2") throw error("elementary_decomposition_c2: system is " + rs_.id());
    const ConeSystem& cone = cone_p(rs_);

    ElementarySet base;
    base.dim = 6;
    for (const TripleFunctional* f : cone.all()) {
        LinIneq q;
        for (const Rat& c : f->coeffs) q.coeffs.push_back(c.as_integer());
        q.rhs = 0;
        base.inequalities.push_back(std::move(q));
    }
    for (size_t i = 0; i < 6; ++i) {
        LinIneq q;
        q.coeffs.assign(6, 0);
        q.coeffs[i] = 1;
        base.inequalities.push_back(std::move(q));
    }

    auto with_axis = [&](ElementarySet e, int comp) {
        // component on the varpi_2 axis: first fundamental coordinate zero
        LinIneq up, dn;
        up.coeffs.assign(6, 0);
        dn.coeffs.assign(6, 0);
        up.coeffs[2 * comp] = 1;
        dn.coeffs[2 * comp] = -1;
        e.inequalities.push_back(up);
        e.inequalities.push_back(dn);
        return e;
    };
    auto off_axis = [&](ElementarySet e, int comp) {
        LinIneq q;
        q.coeffs.assign(6, 0);
        q.coeffs[2 * comp] = 1;
        q.rhs = 1;
        e.inequalities.push_back(q);
        return e;
    };
    auto with_2p = [&](ElementarySet e) {
        e.congruences.push_back({{1, 0, 1, 0, 1, 0}, 2, 0});
        e.congruences.push_back({{0, 1, 0, 1, 0, 1}, 2, 0});
        return e;
    };
    auto with_lambda = [&](ElementarySet e) {
        // trace in Q(R): ambient coordinate sum even = sum of first
        // fundamental coordinates even
        e.congruences.push_back({{1, 0, 1, 0, 1, 0}, 2, 0});
        return e;
    };

    std::vector<ElementarySet> sets;
    sets.push_back(es_normalize(with_2p(with_axis(with_axis(base, 0), 1))));   // E_1
    sets.push_back(es_normalize(with_2p(with_axis(with_axis(base, 0), 2))));   // E_2
    sets.push_back(es_normalize(with_2p(with_axis(with_axis(base, 2), 1))));   // E_3
    sets.push_back(es_normalize(with_lambda(off_axis(off_axis(base, 0), 1)))); // E'_1
    sets.push_back(es_normalize(with_lambda(off_axis(off_axis(base, 0), 2)))); // E'_2
    sets.push_back(es_normalize(with_lambda(off_axis(off_axis(base, 1), 2)))); // E'_3
    return sets;
}

std::vector<Triple> Semigroup::g2_generators() const
{
    if (rs_.id() != "G2") throw error("g2_generators: system is " + rs_.id());
    std::vector<Triple> out;
    for (const auto& g : g2_generator_data()) {
        Triple t;
        t.lam = iv_to_weight(rs_, {g[0][0], g[0][1]});
        t.mu = iv_to_weight(rs_, {g[1][0], g[1][1]});
        t.nu = iv_to_weight(rs_, {g[2][0], g[2][1]});
        out.push_back(std::move(t));
    }
    return out;
}

G2ExceptionalData Semigroup::exceptional_sets_g2() const
{
    if (rs_.id() != "G2") throw error("exceptional_sets_g2: system is " + rs_.id());
    G2ExceptionalData out;

    auto eq = [](ElementarySet& e, std::vector<long long> coeffs, long long rhs) {
        LinIneq up{coeffs, rhs};
        for (long long& c : coeffs) c = -c;
        LinIneq dn{coeffs, -rhs};
        e.inequalities.push_back(std::move(up));
        e.inequalities.push_back(std::move(dn));
    };
    auto ge = [](ElementarySet& e, std::vector<long long> coeffs, long long rhs) {
        e.inequalities.push_back({std::move(coeffs), rhs});
    };

    // coordinates (x1,y1,x2,y2,x3,y3)
    ElementarySet e1;
    e1.dim = 6;
    eq(e1, {1, 0, 0, 0, 0, 0}, 0);
    eq(e1, {0, 0, 1, 0, 0, 0}, 0);
    eq(e1, {0, 0, 0, 0, 1, 0}, 1);
    ge(e1, {0, 1, 0, 0, 0, 0}, 0);
    ge(e1, {0, 0, 0, 1, 0, 0}, 0);
    ge(e1, {0, 0, 0, 0, 0, 1}, 0);
    out.sets.push_back(es_normalize(e1));

    // E_2: x1=0, x2=0, y3=0, 3(y2-y1) = x3-1, x3 >= 1, 3 y1 >= x3+2
    ElementarySet e2;
    e2.dim = 6;
    eq(e2, {1, 0, 0, 0, 0, 0}, 0);
    eq(e2, {0, 0, 1, 0, 0, 0}, 0);
    eq(e2, {0, 0, 0, 0, 0, 1}, 0);
    eq(e2, {0, -3, 0, 3, -1, 0}, -1);
    ge(e2, {0, 0, 0, 0, 1, 0}, 1);
    ge(e2, {0, 3, 0, 0, -1, 0}, 2);
    out.sets.push_back(es_normalize(e2));

    // E_3: x1=0, x2=0, x3 = 3 y2 - 2, y1 = y2 + y3 - 1, y2 >= 1, y3 >= 1
    ElementarySet e3;
    e3.dim = 6;
    eq(e3, {1, 0, 0, 0, 0, 0}, 0);
    eq(e3, {0, 0, 1, 0, 0, 0}, 0);
    eq(e3, {0, 0, 0, -3, 1, 0}, -2);
    eq(e3, {0, 1, 0, -1, 0, -1}, -1);
    ge(e3, {0, 0, 0, 1, 0, 0}, 1);
    ge(e3, {0, 0, 0, 0, 0, 1}, 1);
    out.sets.push_back(es_normalize(e3));

    auto phi = [](std::vector<long long> c, const std::string& label) {
        TripleFunctional f;
        for (long long v : c) f.coeffs.push_back(Rat(v));
        f.label = label;
        return f;
    };
    out.phi.push_back(phi({2, 3, -1, -3, 1, 3}, "phi_0"));
    out.phi.push_back(phi({1, 1, 1, 2, -1, -1}, "phi_1"));
    out.phi.push_back(phi({1, 3, 1, 3, -1, -3}, "phi_2"));
    return out;
}

SaturationFacts Semigroup::saturation_facts(const RootSystem& rs)
{
    size_t r = rs.rank();
    size_t d = rs.fundamental_weights()[0].size();
    if (r != d) throw error("saturation_facts: rank must equal the ambient dimension");

    Mat basis(d, Vec(r));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < d; ++i) basis[i][j] = rs.simple_coroots()[j][i];
    Mat inv = mat_inverse(basis);

    // comarks of the highest coroot form
    std::vector<long long> comarks;
    Rat best_height(-1);
    for (const Form& f : rs.positive_coroots()) {
        Vec m = mat_apply(inv, f);
        Rat h;
        for (const Rat& x : m) h += x;
        if (h > best_height) {
            best_height = h;
            comarks.clear();
            for (const Rat& x : m) comarks.push_back(x.as_integer());
        }
    }
    SaturationFacts out;
    out.k_r = 1;
    for (long long m : comarks) out.k_r = lcm_ll(out.k_r, m);

    // fundamental alcove vertices
    std::vector<Weight> verts;
    verts.push_back(Weight(d, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        verts.push_back(vec_scale(Rat(1, comarks[i]), rs.fundamental_weights()[i]));

    // linear maps permuting the wall forms
    std::vector<Vec> forms;
    for (const Form& f : rs.positive_coroots()) {
        forms.push_back(f);
        forms.push_back(vec_scale(Rat(-1), f));
    }
    std::vector<Mat> auts;
    std::vector<size_t> pick(r, 0);
    for (;;) {
        Mat img(d, Vec(r));
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < d; ++i) img[i][j] = forms[pick[j]][i];
        bool ok = true;
        Mat tmat;
        if (!mat_det(img).is_zero()) {
            // T maps the simple coroot forms to the picked forms
            tmat = mat_mul(img, inv);
            for (const Vec& f : forms) {
                Vec tf = mat_apply(tmat, f);
                if (std::find(forms.begin(), forms.end(), tf) == forms.end()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                Mat m(d, Vec(d));
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j) m[i][j] = tmat[j][i];
                auts.push_back(std::move(m));
            }
        }
        size_t i = 0;
        while (i < r && pick[i] + 1 == forms.size()) { pick[i] = 0; ++i; }
        if (i == r) break;
        ++pick[i];
    }

    // faces of the alcove invariant under a wall-preserving isometry moving
    // every vertex of the face
    out.k_w = 1;
    size_t nv = verts.size();
    for (size_t mask = 1; mask < (size_t(1) << nv); ++mask) {
        std::vector<size_t> face;
        for (size_t i = 0; i < nv; ++i)
            if (mask & (size_t(1) << i)) face.push_back(i);
        if (face.size() < 2) continue;
        std::vector<size_t> perm(face.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        bool witnessed = false;
        do {
            bool fixes = false;
            for (size_t i = 0; i < perm.size(); ++i) fixes = fixes || perm[i] == i;
            if (fixes) continue;
            for (const Mat& m : auts) {
                Weight v = vec_sub(verts[face[perm[0]]], mat_apply(m, verts[face[0]]));
                bool match = rs.lattice_member(v, Lattice::WeightLat);
                for (size_t i = 1; i < perm.size() && match; ++i)
                    match = vec_add(mat_apply(m, verts[face[i]]), v) == verts[face[perm[i]]];
                if (match) { witnessed = true; break; }
            }
        } while (!witnessed && std::next_permutation(perm.begin(), perm.end()));
        if (!witnessed) continue;
        Weight bc(d, Rat(0));
        for (size_t i : face) bc = vec_add(bc, verts[i]);
        bc = vec_scale(Rat(1, static_cast<long long>(face.size())), bc);
        for (const Rat& x : rs.fund_coords(bc)) out.k_w = lcm_ll(out.k_w, x.den());
    }
    return out;
}

Verdict Semigroup::saturated_member(const Triple& t, SaturationMode mode,
                                    CharOracle& oracle) const
{
    if (!dominant(t) || !integral(t) || !in_cone(t)) return Verdict::Inapplicable;
    SaturationFacts f = saturation_facts(rs_);
    long long k = mode == SaturationMode::KR2 ? f.k_r * f.k_r : f.k_r * f.k_w;
    if (mode == SaturationMode::KR2 && !lambda_member(t)) return Verdict::Inapplicable;
    Triple scaled{vec_scale(Rat(k), t.lam), vec_scale(Rat(k), t.mu), vec_scale(Rat(k), t.nu)};
    return oracle.triple_invariant_dim(scaled.lam, scaled.mu, scaled.nu) > 0 ? Verdict::Member
                                                                             : Verdict::NonMember;
}

long long Semigroup::deep_threshold(long long ell)
{
    if (ell < 2) throw error("deep_threshold: ell must be >= 2");
    return 2 * ell * ell * (ell + 1) * (4 * ell + 5) + 6 * ell;
}

bool Semigroup::deep_member(const Triple& t) const
{
    if (rs_.id() != "C2") throw error("deep_member: system is " + rs_.id());
    if (!dominant(t) || !integral(t) || !lambda_member(t)) return false;
    Rat bound(deep_threshold(2));
    std::vector<Rat> f6 = triple_fund(rs_, t.lam, t.mu, t.nu);
    for (const TripleFunctional* f : cone_p(rs_).all())
        if (f->eval(f6) < bound) return false;
    return true;
}

ElementarySet Semigroup::build_E_sigma(const GeneralizedChain& chain) const
{
    size_t r = rs_.rank();
    size_t m1 = chain.elements.size();
    if (m1 == 0) throw error("build_E_sigma: empty chain");
    if (chain.orbit_index.size() != m1 || (m1 > 1 && chain.witnesses.size() != m1 - 1))
        throw error("build_E_sigma: malformed chain");
    for (size_t i = 0; i + 1 < m1; ++i)
        if (chain.orbit_index[i] > chain.orbit_index[i + 1])
            throw error("build_E_sigma: orbit indices must be nondecreasing");
    SaturationFacts sf = saturation_facts(rs_);
    long long K = sf.k_r * sf.k_r;

    ElementarySet e;
    e.dim = 3 * r + m1;
    auto xm = [&](size_t j) { return j; };
    auto xn = [&](size_t j) { return r + j; };
    auto xk = [&](size_t j) { return 2 * r + j; };
    auto xa = [&](size_t i) { return 3 * r + i; };

    auto ge = [&](std::vector<long long> c, long long rhs) {
        e.inequalities.push_back({std::move(c), rhs});
    };
    auto eq = [&](std::vector<long long> c, long long rhs) {
        std::vector<long long> neg(c);
        for (long long& v : neg) v = -v;
        ge(c, rhs);
        ge(std::move(neg), -rhs);
    };
    auto zero_row = [&]() { return std::vector<long long>(e.dim, 0); };

    for (size_t i = 0; i < e.dim; ++i) {
        auto c = zero_row();
        c[i] = 1;
        ge(std::move(c), 0);
    }

    // coroot values on the chain elements
    std::vector<std::vector<long long>> cji(r, std::vector<long long>(m1));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < m1; ++i)
            cji[j][i] = rs_.pair(rs_.simple_coroots()[j], chain.elements[i]).as_integer();

    // block sums tie the coefficients to the mu components
    for (size_t b = 0; b < r; ++b) {
        auto c = zero_row();
        for (size_t i = 0; i < m1; ++i)
            if (chain.orbit_index[i] == b) c[xa(i)] = 1;
        c[xn(b)] = -K;
        eq(std::move(c), 0);
    }

    // endpoint: lambda + p(1) = nu*
    Mat contra(r, Vec(r));
    for (size_t j = 0; j < r; ++j) {
        Weight w = vec_scale(Rat(-1), rs_.longest_element().apply(rs_.fundamental_weights()[j]));
        Vec f = rs_.fund_coords(w);
        for (size_t i = 0; i < r; ++i) contra[i][j] = f[i];
    }
    for (size_t j = 0; j < r; ++j) {
        auto c = zero_row();
        c[xm(j)] = K;
        for (size_t i = 0; i < m1; ++i) c[xa(i)] = cji[j][i];
        for (size_t l = 0; l < r; ++l) c[xk(l)] = -K * contra[j][l].as_integer();
        eq(std::move(c), 0);
    }

    // dominance of every interior partial sum
    for (size_t i = 0; i + 1 < m1; ++i)
        for (size_t j = 0; j < r; ++j) {
            auto c = zero_row();
            c[xm(j)] = K;
            for (size_t t = 0; t <= i; ++t) c[xa(t)] = cji[j][t];
            ge(std::move(c), 0);
        }

    // wall congruences at same-orbit steps
    if (K > 1) {
        for (size_t i = 0; i + 1 < m1; ++i) {
            if (!chain.witnesses[i]) continue;
            const Form& beta = rs_.positive_coroots()[*chain.witnesses[i]];
            Congruence cg;
            cg.coeffs.assign(e.dim, 0);
            for (size_t t = 0; t <= i; ++t)
                cg.coeffs[xa(t)] = rs_.pair(beta, chain.elements[t]).as_integer();
            cg.modulus = K;
            cg.residue = 0;
            e.congruences.push_back(std::move(cg));
        }
    }
    return es_normalize(e);
}

std::vector<ElementarySet> Semigroup::compute_tens_decomposition(size_t piece_cap) const
{
    if (rs_.rank() > 2) throw error("compute_tens_decomposition: rank <= 2 only");
    GeneralizedChains chains = enumerate_generalized_chains(rs_);

    std::vector<ElementarySet> out;
    std::set<std::string> keys;
    for (const GeneralizedChain& sigma : chains.maximal) {
        for (ElementarySet& e :
             es_union_simplify(es_project_tail(build_E_sigma(sigma), 3 * rs_.rank(), piece_cap)))
            if (keys.insert(e.key()).second) out.push_back(std::move(e));
        if (out.size() > piece_cap)
            throw cap_error("compute_tens_decomposition: piece cap " +
                            std::to_string(piece_cap) + " exceeded");
    }
    return es_union_simplify(std::move(out));
}

namespace {

struct MismatchPool {
    std::vector<std::vector<std::array<IVec, 3>>> per_worker;
    std::vector<long long> scanned;

    explicit MismatchPool(int workers)
        : per_worker(std::max(1, workers)), scanned(std::max(1, workers), 0) {}

    void merge_into(VerificationReport& r)
    {
        for (auto& v : per_worker)
            r.mismatches.insert(r.mismatches.end(), v.begin(), v.end());
        std::sort(r.mismatches.begin(), r.mismatches.end());
        for (long long s : scanned) r.scanned += s;
    }
};

} // namespace

VerificationReport Semigroup::verify_paths(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "paths";
    rep.box = box;
    long long weights = box_count(box, rs_.rank());
    long long pairs = checked_mul(weights, weights);
    MismatchPool pool(workers);

    parallel_for(pairs, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local std::unique_ptr<PathModel> paths;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            paths = std::make_unique<PathModel>(rs_);
            owner = &rs_;
        }
        IVec lam_iv = decode_box(idx % weights, box, rs_.rank());
        IVec mu_iv = decode_box(idx / weights, box, rs_.rank());
        Weight lam = iv_to_weight(rs_, lam_iv);
        Weight mu = iv_to_weight(rs_, mu_iv);

        // one sweep of the crystal collects all path counts at once
        std::map<IVec, long long> counts;
        for (const PLPath& p : paths->crystal(mu_iv)) {
            Weight at = lam;
            bool inside = rs_.is_dominant(at);
            for (const Segment& s : p.segments()) {
                if (!inside) break;
                at = vec_add(at, vec_scale(s.duration, s.direction));
                inside = rs_.is_dominant(at);
            }
            if (inside) ++counts[iv_from_weight(rs_, at)];
        }
        DecompositionTable table = oracle->tensor_decompose(lam, mu);

        long long nus = box_count(box, rs_.rank());
        for (long long nidx = 0; nidx < nus; ++nidx) {
            IVec nu_iv = decode_box(nidx, box, rs_.rank());
            Weight nu_star = rs_.contragredient(iv_to_weight(rs_, nu_iv));
            IVec key = iv_from_weight(rs_, nu_star);
            auto it = counts.find(key);
            long long path_count = it == counts.end() ? 0 : it->second;
            if (path_count != table.at(key))
                pool.per_worker[w].push_back({lam_iv, mu_iv, nu_iv});
            ++pool.scanned[w];
        }
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_mainbc(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "mainBC";
    rep.box = box;
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        Verdict v = tens_c2_criterion(t);
        if (v == Verdict::Inapplicable) return;
        ++pool.scanned[w];
        bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
        if (positive != (v == Verdict::Member))
            pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_esets(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "esets";
    rep.box = box;
    std::vector<ElementarySet> sets = elementary_decomposition_c2();
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        ++pool.scanned[w];
        bool in_union = es_union_member(sets, c);
        bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
        if (in_union != positive) pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_g2(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "g2";
    rep.box = box;
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        Verdict v = tens_g2_criterion(t);
        if (v == Verdict::Inapplicable) return;
        ++pool.scanned[w];
        bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
        if (positive != (v == Verdict::Member))
            pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);

    // generator facts: only epsilon_1, epsilon_2 lie outside Tens, their sum
    // identities hold, and 2 epsilon_i returns to Tens
    CharOracle oracle(rs_);
    std::vector<Triple> gens = g2_generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        bool positive = oracle.triple_invariant_dim(gens[i].lam, gens[i].mu, gens[i].nu) > 0;
        bool expected = i < 9;
        if (positive != expected) rep.mismatches.push_back(triple_key(rs_, gens[i]));
    }
    const Triple& eps1 = gens[9];
    const Triple& eps2 = gens[10];
    Triple sum{vec_add(eps1.lam, eps2.lam), vec_add(eps1.mu, eps2.mu), vec_add(eps1.nu, eps2.nu)};
    Triple d4d9{vec_add(gens[3].lam, gens[8].lam), vec_add(gens[3].mu, gens[8].mu),
                vec_add(gens[3].nu, gens[8].nu)};
    bool identity_ok = sum.lam == d4d9.lam && sum.mu == d4d9.mu && sum.nu == d4d9.nu;
    bool sum_in = oracle.triple_invariant_dim(sum.lam, sum.mu, sum.nu) > 0;
    bool twice_ok = true;
    for (const Triple* e : {&eps1, &eps2}) {
        Triple twice{vec_scale(Rat(2), e->lam), vec_scale(Rat(2), e->mu), vec_scale(Rat(2), e->nu)};
        twice_ok = twice_ok && oracle.triple_invariant_dim(twice.lam, twice.mu, twice.nu) > 0;
    }
    if (!identity_ok || !sum_in || !twice_ok) rep.mismatches.push_back(triple_key(rs_, sum));
    rep.notes.push_back("generators checked: epsilon_1+epsilon_2 = delta_4+delta_9 " +
                        std::string(identity_ok && sum_in ? "holds in Tens" : "FAILED") +
                        "; 2*epsilon_i in Tens: " + (twice_ok ? "yes" : "NO"));
    std::sort(rep.mismatches.begin(), rep.mismatches.end());
    return rep;
}

VerificationReport Semigroup::verify_saturation(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "saturation";
    rep.box = box;
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        if (!in_cone(t) || !lambda_member(t)) return;
        ++pool.scanned[w];
        Triple twice{vec_scale(Rat(2), t.lam), vec_scale(Rat(2), t.mu), vec_scale(Rat(2), t.nu)};
        if (oracle->triple_invariant_dim(twice.lam, twice.mu, twice.nu) <= 0)
            pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_kumar(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "kumar";
    rep.box = box;
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        if (!c12_member(rs_, t.lam, t.mu, t.nu)) return;
        ++pool.scanned[w];
        if (oracle->triple_invariant_dim(t.lam, t.mu, t.nu) <= 0)
            pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_deep(long long samples, unsigned long long seed) const
{
    VerificationReport rep;
    rep.theorem = "deep";
    rep.box = samples;
    if (deep_threshold(2) != 324)
        rep.mismatches.push_back({IVec{deep_threshold(2)}, IVec{324}, IVec{}});
    rep.notes.push_back("threshold(2) = " + std::to_string(deep_threshold(2)) +
                        ", threshold(3) = " + std::to_string(deep_threshold(3)));

    std::mt19937_64 rng(seed);
    auto draw = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    };
    for (long long i = 0; i < samples; ++i) {
        // perturb a point deep inside the cone; margins keep every functional
        // far above the threshold
        IVec c(6);
        for (size_t j = 0; j < 6; ++j) c[j] = 1000 + draw(-100, 100);
        if ((c[0] + c[2] + c[4]) % 2 != 0) ++c[0];
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        ++rep.scanned;
        if (!deep_member(t) || tens_c2_criterion(t) != Verdict::Member)
            rep.mismatches.push_back(triple_key(rs_, t));
    }
    std::sort(rep.mismatches.begin(), rep.mismatches.end());
    return rep;
}

VerificationReport Semigroup::verify_decomposition(long long box, int workers) const
{
    VerificationReport rep;
    rep.theorem = "decomposition";
    rep.box = box;
    std::vector<ElementarySet> pieces = compute_tens_decomposition();
    rep.notes.push_back("pieces: " + std::to_string(pieces.size()));
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        ++pool.scanned[w];
        bool in_union = es_union_member(pieces, c);
        bool truth;
        if (rs_.id() == "C2")
            truth = tens_c2_criterion(t) == Verdict::Member;
        else if (rs_.id() == "G2")
            truth = tens_g2_criterion(t) == Verdict::Member;
        else
            truth = in_cone(t) && lambda_member(t);
        if (in_union != truth) pool.per_worker[w].push_back(triple_key(rs_, t));
    });
    pool.merge_into(rep);
    return rep;
}

VerificationReport Semigroup::verify_conjecture(const std::string& which, long long box,
                                                int workers) const
{
    VerificationReport rep;
    rep.theorem = which;
    rep.box = box;
    long long total = box_count(box, 6);
    MismatchPool pool(workers);
    std::mutex note_mutex;
    long long singular_counterexamples = 0;
    parallel_for(total, workers, [&](int w, long long idx) {
        static thread_local std::unique_ptr<CharOracle> oracle;
        static thread_local const RootSystem* owner = nullptr;
        if (owner != &rs_) {
            oracle = std::make_unique<CharOracle>(rs_);
            owner = &rs_;
        }
        IVec c = decode_box(idx, box, 6);
        Triple t{iv_to_weight(rs_, {c[0], c[1]}), iv_to_weight(rs_, {c[2], c[3]}),
                 iv_to_weight(rs_, {c[4], c[5]})};
        bool nonsingular = c[0] > 0 && c[1] > 0 && c[2] > 0 && c[3] > 0 && c[4] > 0 && c[5] > 0;
        bool necessary = in_cone(t) && lambda_member(t);

        if (which == "C1.1") {
            // simply-laced: Tens = cone and trace congruence
            ++pool.scanned[w];
            bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
            if (positive != necessary) pool.per_worker[w].push_back(triple_key(rs_, t));
        } else if (which == "C1.2") {
            if (!nonsingular) return;
            ++pool.scanned[w];
            bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
            if (positive != necessary) pool.per_worker[w].push_back(triple_key(rs_, t));
        } else if (which == "C1.3") {
            // P(R) = Q(R): the criterion needs no congruences; check it
            // against the oracle
            Verdict v = tens_g2_criterion(t);
            if (v == Verdict::Inapplicable) return;
            ++pool.scanned[w];
            bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
            if (positive != (v == Verdict::Member))
                pool.per_worker[w].push_back(triple_key(rs_, t));
        } else if (which == "kumar2") {
            if (!necessary) return;
            ++pool.scanned[w];
            bool positive = oracle->triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
            if (!positive) {
                if (nonsingular) {
                    pool.per_worker[w].push_back(triple_key(rs_, t));
                } else {
                    std::lock_guard<std::mutex> lock(note_mutex);
                    ++singular_counterexamples;
                }
            }
        }
    });
    pool.merge_into(rep);
    if (which == "kumar2")
        rep.notes.push_back("singular non-members in the box: " +
                            std::to_string(singular_counterexamples));
    return rep;
}

VerificationReport Semigroup::verify(const std::string& theorem, long long box, int workers,
                                     unsigned long long seed) const
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (theorem == "paths")
        rep = verify_paths(box, workers);
    else if (theorem == "mainBC")
        rep = verify_mainbc(box, workers);
    else if (theorem == "esets")
        rep = verify_esets(box, workers);
    else if (theorem == "g2")
        rep = verify_g2(box, workers);
    else if (theorem == "saturation")
        rep = verify_saturation(box, workers);
    else if (theorem == "kumar")
        rep = verify_kumar(box, workers);
    else if (theorem == "deep")
        rep = verify_deep(box, seed);
    else if (theorem == "decomposition")
        rep = verify_decomposition(box, workers);
    else if (theorem == "C1.1" || theorem == "C1.2" || theorem == "C1.3" || theorem == "kumar2")
        rep = verify_conjecture(theorem, box, workers);
    else
        throw error("verify: unknown theorem id '" + theorem + "'");
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace tsl
