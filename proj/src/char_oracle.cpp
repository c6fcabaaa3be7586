#include "tsl/char_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace tsl {

IVec iv_from_weight(const RootSystem& rs, const Weight& w)
{
    Vec x = rs.fund_coords(w);
    IVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i].as_integer();
    return r;
}

Weight iv_to_weight(const RootSystem& rs, const IVec& x)
{
    Vec v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = Rat(x[i]);
    return rs.weight_from_fund(v);
}

void CharOracle::check_dominant_integral(const Weight& w, const char* who) const
{
    if (!rs_.is_dominant(w)) throw error(std::string(who) + ": weight is not dominant");
    if (!rs_.lattice_member(w, Lattice::WeightLat))
        throw error(std::string(who) + ": weight is not in the character lattice");
    for (const Rat& x : rs_.fund_coords(w))
        if (x > Rat(cap_))
            throw cap_error(std::string(who) + ": fundamental coordinate exceeds cap " +
                            std::to_string(cap_));
}

long long CharOracle::weyl_dim(const Weight& lambda) const
{
    if (!rs_.is_dominant(lambda)) throw error("weyl_dim: weight is not dominant");
    Weight top = vec_add(lambda, rs_.rho());
    Rat dim(1);
    for (const Form& f : rs_.positive_coroots())
        dim *= rs_.pair(f, top) / rs_.pair(f, rs_.rho());
    return dim.as_integer();
}

namespace {

std::string cache_path(const RootSystem& rs, const IVec& mu)
{
    const char* dir = std::getenv("TSL_CACHE_DIR");
    if (!dir || !*dir) return {};
    std::string name = rs.id();
    for (long long x : mu) name += "_" + std::to_string(x);
    return std::string(dir) + "/" + name + ".json";
}

bool load_table(const std::string& path, WeightMultiplicityTable& out)
{
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    in >> j;
    out.highest = j.at("weight").get<IVec>();
    out.dim = j.at("dim").get<long long>();
    out.mult.clear();
    for (const auto& row : j.at("mult")) {
        out.mult[row.at("weight").get<IVec>()] = row.at("m").get<long long>();
    }
    return true;
}

void store_table(const RootSystem& rs, const std::string& path, const WeightMultiplicityTable& t)
{
    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["weight"] = t.highest;
    j["dim"] = t.dim;
    std::vector<IVec> keys;
    for (const auto& [k, m] : t.mult) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const IVec& k : keys) rows.push_back({{"weight", k}, {"m", t.mult.at(k)}});
    j["mult"] = std::move(rows);
    std::ofstream out(path);
    if (out) out << j.dump() << "\n";
}

} // namespace

const WeightMultiplicityTable& CharOracle::weight_multiplicities(const Weight& mu)
{
    check_dominant_integral(mu, "weight_multiplicities");
    IVec key = iv_from_weight(rs_, mu);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    std::string path = cache_path(rs_, key);
    if (!path.empty()) {
        WeightMultiplicityTable cached;
        if (load_table(path, cached) && cached.highest == key)
            return memo_.emplace(key, std::move(cached)).first->second;
    }

    WeightMultiplicityTable table;
    table.highest = key;

    size_t n = rs_.rank();
    // All weights of V_mu lie in mu - Q_+, inside the box reaching w0(mu).
    Weight lowest = rs_.dominate(vec_scale(Rat(-1), mu)).first;
    lowest = vec_scale(Rat(-1), lowest);  // w0(mu)
    Vec cmax_r = rs_.simple_root_coords(vec_sub(mu, lowest));
    IVec cmax(n);
    for (size_t i = 0; i < n; ++i) cmax[i] = cmax_r[i].as_integer();

    struct Cand {
        IVec c;
        long long height;
        Weight beta;
    };
    std::vector<Cand> cands;
    IVec c(n, 0);
    for (;;) {
        Weight beta = mu;
        long long h = 0;
        for (size_t i = 0; i < n; ++i) {
            beta = vec_sub(beta, vec_scale(Rat(c[i]), rs_.simple_roots()[i]));
            h += c[i];
        }
        if (rs_.is_dominant(beta)) cands.push_back({c, h, beta});
        size_t i = 0;
        while (i < n && c[i] == cmax[i]) { c[i] = 0; ++i; }
        if (i == n) break;
        ++c[i];
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.height < b.height || (a.height == b.height && a.c < b.c);
    });

    Weight mu_rho = vec_add(mu, rs_.rho());
    Rat top_norm = rs_.inner(mu_rho, mu_rho);

    auto lookup = [&](const Weight& gamma) -> long long {
        Weight rep = rs_.dominant_rep(gamma);
        Vec f = rs_.fund_coords(rep);
        IVec k(n);
        for (size_t i = 0; i < n; ++i) {
            if (!f[i].is_integer()) return 0;
            k[i] = f[i].as_integer();
        }
        return table.at(k);
    };

    for (const Cand& cand : cands) {
        if (cand.height == 0) {
            table.mult[key] = 1;
            continue;
        }
        Rat num(0);
        for (size_t b = 0; b < rs_.positive_roots().size(); ++b) {
            const Weight& alpha = rs_.positive_roots()[b];
            long long ht = 0;
            for (const Rat& x : rs_.simple_root_coords(alpha)) ht += x.as_integer();
            for (long long k = 1; k * ht <= cand.height; ++k) {
                Weight gamma = vec_add(cand.beta, vec_scale(Rat(k), alpha));
                long long m = lookup(gamma);
                if (m != 0) num += Rat(m) * rs_.inner(gamma, alpha);
            }
        }
        if (num.is_zero()) continue;  // not a weight
        Weight beta_rho = vec_add(cand.beta, rs_.rho());
        Rat den = top_norm - rs_.inner(beta_rho, beta_rho);
        Rat m = Rat(2) * num / den;
        long long mi = m.as_integer();
        if (mi < 0) throw error("Freudenthal produced a negative multiplicity");
        if (mi > 0) {
            Vec f = rs_.fund_coords(cand.beta);
            IVec k(n);
            for (size_t i = 0; i < n; ++i) k[i] = f[i].as_integer();
            table.mult[k] = mi;
        }
    }

    long long dim = 0;
    for (const auto& [k, m] : table.mult)
        dim += m * static_cast<long long>(rs_.weyl_orbit(iv_to_weight(rs_, k)).size());
    table.dim = dim;

    if (!path.empty()) store_table(rs_, path, table);
    return memo_.emplace(key, std::move(table)).first->second;
}

std::vector<std::pair<IVec, long long>> CharOracle::weight_set(const Weight& mu)
{
    const WeightMultiplicityTable& t = weight_multiplicities(mu);
    std::vector<std::pair<IVec, long long>> out;
    for (const auto& [k, m] : t.mult) {
        for (const Weight& w : rs_.weyl_orbit(iv_to_weight(rs_, k)))
            out.push_back({iv_from_weight(rs_, w), m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long CharOracle::tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu)
{
    check_dominant_integral(lambda, "tensor_coefficient");
    check_dominant_integral(nu, "tensor_coefficient");
    const WeightMultiplicityTable& t = weight_multiplicities(mu);

    size_t n = rs_.rank();
    Weight nu_rho = vec_add(nu, rs_.rho());
    Weight lam_rho = vec_add(lambda, rs_.rho());
    long long c = 0;
    for (const WeylElem& w : rs_.weyl_group()) {
        Weight beta = vec_sub(w.apply(nu_rho), lam_rho);
        Weight rep = rs_.dominant_rep(beta);
        Vec f = rs_.fund_coords(rep);
        IVec k(n);
        bool integral = true;
        for (size_t i = 0; i < n && integral; ++i) {
            integral = f[i].is_integer();
            if (integral) k[i] = f[i].as_integer();
        }
        if (!integral) continue;
        c += w.sign * t.at(k);
    }
    if (c < 0) throw error("negative tensor coefficient; oracle is inconsistent");
    return c;
}

DecompositionTable CharOracle::tensor_decompose(const Weight& lambda, const Weight& mu)
{
    check_dominant_integral(lambda, "tensor_decompose");
    check_dominant_integral(mu, "tensor_decompose");

    // The walk runs over Weight(V_mu); use the smaller factor there.
    const Weight *a = &lambda, *b = &mu;
    if (weyl_dim(mu) > weyl_dim(lambda)) std::swap(a, b);

    DecompositionTable out;
    out.lhs = iv_from_weight(rs_, lambda);
    out.rhs = iv_from_weight(rs_, mu);

    for (const auto& [beta, m] : weight_set(*b)) {
        Weight nu = vec_add(*a, iv_to_weight(rs_, beta));
        if (!rs_.is_dominant(nu)) continue;
        IVec key = iv_from_weight(rs_, nu);
        if (out.coeff.count(key)) continue;
        long long c = tensor_coefficient(*a, *b, nu);
        if (c > 0) out.coeff[key] = c;
    }
    return out;
}

long long CharOracle::triple_invariant_dim(const Weight& lambda, const Weight& mu, const Weight& nu)
{
    return tensor_coefficient(lambda, mu, rs_.contragredient(nu));
}

} // namespace tsl
