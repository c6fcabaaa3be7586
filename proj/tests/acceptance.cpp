// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Each criterion is pinned to its box, tolerance and time budget; the ground
// truth is always the character oracle.

#include <chrono>
#include <cstdio>
#include <random>
#include <thread>

#include "tsl/semigroup.hpp"

using namespace tsl;

namespace {

int failures = 0;

void line(bool pass, int idx, const std::string& what)
{
    std::printf("[%s] %2d. %s\n", pass ? "PASS" : "FAIL", idx, what.c_str());
    if (!pass) ++failures;
}

int workers()
{
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(std::min(hw, 8u));
}

std::string report_summary(const VerificationReport& r)
{
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld triples, %zu mismatches, %.1fs", r.scanned,
                  r.mismatches.size(), r.seconds);
    return buf;
}

void criterion_1()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport r = sg.verify("paths", 5, 1);  // single worker on purpose
    line(r.pass() && r.seconds < 300.0, 1,
         "oracle/path-model equivalence (C2, box 5, single worker): " + report_summary(r) +
             " (budget 300s)");
}

void criterion_2()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport r = sg.verify("mainBC", 6, workers());
    line(r.pass() && r.seconds < 600.0, 2,
         "complete C2 criterion vs oracle (box 6): " + report_summary(r) + " (budget 600s)");
}

void criterion_3()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport r = sg.verify("esets", 6, workers());
    line(r.pass(), 3, "six-set C2 decomposition vs oracle (box 6): " + report_summary(r));
}

void criterion_4()
{
    RootSystem g2 = RootSystem::build("G2");
    Semigroup sg(g2);
    VerificationReport r = sg.verify("g2", 3, workers());
    std::string extra;
    for (const std::string& n : r.notes) extra += "; " + n;
    line(r.pass(), 4, "complete G2 criterion vs oracle (box 3): " + report_summary(r) + extra);
}

void criterion_5()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport r = sg.verify("saturation", 4, workers());
    line(r.pass(), 5, "2*sigma saturation on the C2 cone (box 4): " + report_summary(r));
}

void criterion_6()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport r = sg.verify("kumar", 6, workers());
    line(r.pass(), 6, "C^{1,2} members have invariants (box 6): " + report_summary(r));
}

void criterion_7()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    bool threshold_ok = Semigroup::deep_threshold(2) == 324;
    VerificationReport r = sg.verify("deep", 10000, 1, 20240817);
    line(threshold_ok && r.pass() && r.seconds < 60.0, 7,
         "deep subcone: threshold(2) = " + std::to_string(Semigroup::deep_threshold(2)) +
             ", 10^4 seeded deep samples: " + report_summary(r) + " (budget 60s)");
}

void criterion_8()
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sgc(c2);
    VerificationReport rc = sgc.verify("decomposition", 6, workers());
    RootSystem a2 = RootSystem::build("A2");
    Semigroup sga(a2);
    VerificationReport ra = sga.verify("decomposition", 5, workers());
    line(rc.pass() && ra.pass(), 8,
         "chain decomposition pipeline: C2 box 6 " + report_summary(rc) + "; A2 box 5 " +
             report_summary(ra));
}

void criterion_9()
{
    RootSystem g2 = RootSystem::build("G2");
    Semigroup sg(g2);
    const ConeSystem& cone = cone_p(g2);
    G2ExceptionalData data = sg.exceptional_sets_g2();

    bool phi0_found = false;
    for (const TripleFunctional& f : cone.stability) {
        Rat scale;
        bool have = false, match = true;
        for (size_t i = 0; i < 6 && match; ++i) {
            const Rat& a = data.phi[0].coeffs[i];
            if (a.is_zero() != f.coeffs[i].is_zero()) match = false;
            if (!match || a.is_zero()) continue;
            Rat q = f.coeffs[i] / a;
            if (q <= Rat(0) || (have && q != scale)) match = false;
            scale = q;
            have = true;
        }
        phi0_found = phi0_found || (match && have);
    }

    bool phi0_on_e2 = true;
    std::string phi_report = "phi on E_3 members (n,m<=3):";
    for (long long n = 0; n <= 3; ++n)
        for (long long m = 0; m <= 3; ++m) {
            std::vector<Rat> e2;
            for (long long v : {0LL, 1 + n + m, 0LL, 1 + n + 2 * m, 1 + 3 * m, 0LL})
                e2.push_back(Rat(v));
            phi0_on_e2 = phi0_on_e2 && data.phi[0].eval(e2) == Rat(1);
            if (n == 0) {
                std::vector<Rat> e3;
                for (long long v : {0LL, 1 + n + m, 0LL, 1 + m, 1 + 3 * m, 1 + n})
                    e3.push_back(Rat(v));
                phi_report += " phi1=" + data.phi[1].eval(e3).str() +
                              ",phi2=" + data.phi[2].eval(e3).str();
            }
        }
    line(phi0_found && phi0_on_e2, 9,
         "G2 facet regression: phi_0 among facets, phi_0 = 1 on E_2; " + phi_report +
             " (phi_2 reported, not asserted)");
}

void criterion_10()
{
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    // crystal cardinality = Weyl dimension, all components <= 4
    for (const char* id : {"C2", "G2"}) {
        RootSystem rs = RootSystem::build(id);
        CharOracle oracle(rs);
        PathModel pm(rs);
        for (long long n1 = 0; n1 <= 4 && ok; ++n1)
            for (long long n2 = 0; n2 <= 4 && ok; ++n2) {
                Weight mu = iv_to_weight(rs, {n1, n2});
                if (pm.crystal({n1, n2}).size() !=
                    static_cast<size_t>(oracle.weyl_dim(mu))) {
                    ok = false;
                    detail = std::string(" crystal/") + id;
                }
            }
    }

    // S3 and duality symmetry of the oracle
    {
        RootSystem c2 = RootSystem::build("C2");
        CharOracle oracle(c2);
        for (long long idx = 0; idx < 729 && ok; ++idx) {
            long long v = idx;
            IVec c(6);
            for (int i = 0; i < 6; ++i) {
                c[i] = v % 3;
                v /= 3;
            }
            Weight a = iv_to_weight(c2, {c[0], c[1]});
            Weight b = iv_to_weight(c2, {c[2], c[3]});
            Weight d = iv_to_weight(c2, {c[4], c[5]});
            long long base = oracle.triple_invariant_dim(a, b, d);
            if (base != oracle.triple_invariant_dim(b, a, d) ||
                base != oracle.triple_invariant_dim(d, b, a) ||
                base != oracle.triple_invariant_dim(b, d, a) ||
                base != oracle.triple_invariant_dim(a, d, b) ||
                base != oracle.triple_invariant_dim(d, a, b) ||
                base != oracle.triple_invariant_dim(c2.contragredient(a),
                                                    c2.contragredient(b),
                                                    c2.contragredient(d))) {
                ok = false;
                detail = " oracle symmetry";
            }
        }
    }

    // semigroup closure on 10^3 seeded positive pairs
    {
        RootSystem c2 = RootSystem::build("C2");
        CharOracle oracle(c2, 128);
        std::mt19937_64 rng(97);
        auto draw = [&]() { return static_cast<long long>(rng() % 5); };
        int done = 0;
        while (done < 1000 && ok) {
            Triple s{iv_to_weight(c2, {draw(), draw()}), iv_to_weight(c2, {draw(), draw()}),
                     iv_to_weight(c2, {draw(), draw()})};
            Triple t{iv_to_weight(c2, {draw(), draw()}), iv_to_weight(c2, {draw(), draw()}),
                     iv_to_weight(c2, {draw(), draw()})};
            if (oracle.triple_invariant_dim(s.lam, s.mu, s.nu) == 0) continue;
            if (oracle.triple_invariant_dim(t.lam, t.mu, t.nu) == 0) continue;
            ++done;
            Triple sum{vec_add(s.lam, t.lam), vec_add(s.mu, t.mu), vec_add(s.nu, t.nu)};
            if (oracle.triple_invariant_dim(sum.lam, sum.mu, sum.nu) <= 0) {
                ok = false;
                detail = " closure";
            }
        }
    }

    // projection differential on 10^3 seeded random elementary sets
    {
        std::mt19937_64 rng(1009);
        auto rnd = [&](long long lo, long long hi) {
            return lo +
                   static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
        };
        for (int rep = 0; rep < 1000 && ok; ++rep) {
            size_t dim = rep % 2 == 0 ? 2 : 3;
            ElementarySet e;
            e.dim = dim;
            std::vector<long long> low(dim, 0), up(dim, 0);
            low[dim - 1] = rnd(1, 3);
            low[0] = rnd(-2, 2);
            up[dim - 1] = -rnd(1, 3);
            up[0] = rnd(-2, 2);
            e.inequalities.push_back({low, rnd(-4, 0)});
            e.inequalities.push_back({up, rnd(-8, -2)});
            long long extra = rnd(0, 2);
            for (long long i = 0; i < extra; ++i) {
                std::vector<long long> c(dim);
                for (size_t j = 0; j < dim; ++j) c[j] = rnd(-2, 2);
                e.inequalities.push_back({c, rnd(-4, 2)});
            }
            if (rnd(0, 1)) {
                std::vector<long long> c(dim);
                for (size_t j = 0; j < dim; ++j) c[j] = rnd(0, 2);
                e.congruences.push_back({c, rnd(2, 4), rnd(0, 3)});
            }
            std::vector<ElementarySet> proj = es_project_last(e);
            size_t n = dim - 1;
            std::vector<long long> y(n, -5);
            for (;;) {
                bool expect = false;
                std::vector<long long> pt(dim);
                for (size_t i = 0; i < n; ++i) pt[i] = y[i];
                for (long long a = -40; a <= 40 && !expect; ++a) {
                    pt[n] = a;
                    expect = es_member(e, pt);
                }
                if (es_union_member(proj, y) != expect) {
                    ok = false;
                    detail = " projection";
                    break;
                }
                size_t i = 0;
                while (i < n && y[i] == 5) { y[i] = -5; ++i; }
                if (i == n) break;
                ++y[i];
            }
        }
    }

    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "structural suite: crystal=dim (<=4, C2+G2), oracle S3/duality, 10^3 closure "
                  "pairs, 10^3 projection sets: %.1fs%s",
                  secs, detail.c_str());
    line(ok, 10, buf);
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
