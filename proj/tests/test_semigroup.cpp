#include <doctest.h>

#include "tsl/semigroup.hpp"

using namespace tsl;

namespace {

Triple ft(const RootSystem& rs, IVec a, IVec b, IVec c)
{
    return {iv_to_weight(rs, a), iv_to_weight(rs, b), iv_to_weight(rs, c)};
}

} // namespace

TEST_CASE("lambda membership")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    CHECK(sg.lambda_member(ft(c2, {0, 1}, {0, 1}, {0, 1})));
    CHECK(!sg.lambda_member(ft(c2, {1, 0}, {0, 0}, {0, 0})));

    RootSystem g2 = RootSystem::build("G2");
    Semigroup sgg(g2);
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b)
            CHECK(sgg.lambda_member(ft(g2, {a, b}, {b, a}, {a, a})));
}

TEST_CASE("the C2 criterion on the printed cases")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    CHECK(sg.tens_c2_criterion(ft(c2, {0, 1}, {0, 1}, {0, 1})) == Verdict::NonMember);
    CHECK(sg.tens_c2_criterion(ft(c2, {0, 1}, {0, 1}, {2, 0})) == Verdict::Member);
    CHECK(sg.tens_c2_criterion(ft(c2, {1, 0}, {1, 0}, {0, 0})) == Verdict::Member);
    // outside Lambda or outside the cone: inapplicable
    CHECK(sg.tens_c2_criterion(ft(c2, {1, 0}, {0, 0}, {0, 0})) == Verdict::Inapplicable);
    CHECK(sg.tens_c2_criterion(ft(c2, {2, 0}, {0, 0}, {0, 0})) == Verdict::Inapplicable);
}

TEST_CASE("the six C2 elementary sets")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    auto sets = sg.elementary_decomposition_c2();
    REQUIRE(sets.size() == 6);

    // ((0,1),(0,1),(2,0)) lies in E_1, ((1,0),(1,0),(0,0)) in E'_1,
    // ((0,1),(0,1),(0,1)) in none
    CHECK(es_member(sets[0], {0, 1, 0, 1, 2, 0}));
    CHECK(es_member(sets[3], {1, 0, 1, 0, 0, 0}));
    for (const auto& s : sets) CHECK(!es_member(s, {0, 1, 0, 1, 0, 1}));

    // union equals the criterion on a small box
    for (long long idx = 0; idx < 4096; ++idx) {
        long long v = idx;
        IVec c(6);
        for (int i = 0; i < 6; ++i) {
            c[i] = v % 4;
            v /= 4;
        }
        Triple t = ft(c2, {c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]});
        bool member = sg.tens_c2_criterion(t) == Verdict::Member;
        CHECK(es_union_member(sets, c) == member);
    }
}

TEST_CASE("G2 generators and criterion")
{
    RootSystem g2 = RootSystem::build("G2");
    Semigroup sg(g2);
    auto gens = sg.g2_generators();
    REQUIRE(gens.size() == 11);
    CHECK(iv_from_weight(g2, gens[4].nu) == IVec{3, 0});  // delta_5 third entry

    CHECK(sg.tens_g2_criterion(gens[9]) == Verdict::NonMember);   // epsilon_1
    CHECK(sg.tens_g2_criterion(gens[10]) == Verdict::NonMember);  // epsilon_2
    CHECK(sg.tens_g2_criterion(gens[3]) == Verdict::Member);      // delta_4
    for (size_t i = 0; i < 9; ++i) CHECK(sg.tens_g2_criterion(gens[i]) == Verdict::Member);

    // epsilon_1 + epsilon_2 = delta_4 + delta_9
    Triple sum = ft(g2, {0, 2}, {0, 2}, {2, 1});
    CHECK(vec_add(gens[9].lam, gens[10].lam) == sum.lam);
    CHECK(vec_add(gens[9].mu, gens[10].mu) == sum.mu);
    CHECK(vec_add(gens[9].nu, gens[10].nu) == sum.nu);
    CHECK(vec_add(gens[3].lam, gens[8].lam) == sum.lam);
    CHECK(vec_add(gens[3].nu, gens[8].nu) == sum.nu);
}

TEST_CASE("G2 exceptional sets and phi functionals")
{
    RootSystem g2 = RootSystem::build("G2");
    Semigroup sg(g2);
    G2ExceptionalData data = sg.exceptional_sets_g2();
    REQUIRE(data.sets.size() == 3);
    REQUIRE(data.phi.size() == 3);

    // epsilon_1 = ([0,1],[0,1],[1,0]) lies in E_1 and in E_2 with n = m = 0
    CHECK(es_member(data.sets[0], {0, 1, 0, 1, 1, 0}));
    CHECK(es_member(data.sets[1], {0, 1, 0, 1, 1, 0}));
    // E_3 with n = m = 0 is epsilon_2
    CHECK(es_member(data.sets[2], {0, 1, 0, 1, 1, 1}));

    auto f6 = [&](IVec c) {
        std::vector<Rat> v;
        for (long long x : c) v.push_back(Rat(x));
        return v;
    };
    CHECK(data.phi[0].eval(f6({0, 1, 0, 1, 1, 0})) == Rat(1));

    // phi_0 is 1 on E_2; phi_1 is 1 on E_3 while phi_2 is 2+3m there
    for (long long n = 0; n <= 3; ++n)
        for (long long m = 0; m <= 3; ++m) {
            IVec e2{0, 1 + n + m, 0, 1 + n + 2 * m, 1 + 3 * m, 0};
            CHECK(es_member(data.sets[1], e2));
            CHECK(data.phi[0].eval(f6(e2)) == Rat(1));
            IVec e3{0, 1 + n + m, 0, 1 + m, 1 + 3 * m, 1 + n};
            CHECK(es_member(data.sets[2], e3));
            CHECK(data.phi[1].eval(f6(e3)) == Rat(1));
            CHECK(data.phi[2].eval(f6(e3)) == Rat(2 + 3 * m));
        }
}

TEST_CASE("saturation constants")
{
    CHECK(Semigroup::saturation_facts(RootSystem::build("C2")).k_r == 2);
    CHECK(Semigroup::saturation_facts(RootSystem::build("C2")).k_w == 2);
    CHECK(Semigroup::saturation_facts(RootSystem::build("A2")).k_r == 1);
    CHECK(Semigroup::saturation_facts(RootSystem::build("A1")).k_r == 1);
}

TEST_CASE("saturated membership through the oracle")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    CharOracle oracle(c2);
    // 2 sigma enters Tens for the exceptional triple
    Triple t = ft(c2, {0, 1}, {0, 1}, {0, 1});
    CHECK(sg.tens_c2_criterion(t) == Verdict::NonMember);
    CHECK(sg.saturated_member(t, SaturationMode::KR2, oracle) == Verdict::Member);
    CHECK(sg.saturated_member(t, SaturationMode::KRKW, oracle) == Verdict::Member);
    // already a member stays a member
    Triple m = ft(c2, {1, 0}, {1, 0}, {0, 0});
    CHECK(sg.saturated_member(m, SaturationMode::KR2, oracle) == Verdict::Member);
    // outside the cone: inapplicable
    CHECK(sg.saturated_member(ft(c2, {2, 0}, {0, 0}, {0, 0}), SaturationMode::KR2, oracle) ==
          Verdict::Inapplicable);
}

TEST_CASE("deep threshold and membership")
{
    CHECK(Semigroup::deep_threshold(2) == 324);
    CHECK(Semigroup::deep_threshold(3) == 1242);
    CHECK_THROWS_AS(Semigroup::deep_threshold(1), error);

    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    CHECK(sg.deep_member(ft(c2, {1000, 1000}, {1000, 1000}, {1000, 1000})));
    CHECK(!sg.deep_member(ft(c2, {1, 1}, {1, 1}, {1, 1})));
    CHECK(sg.tens_c2_criterion(ft(c2, {1000, 1000}, {1000, 1000}, {1000, 1000})) ==
          Verdict::Member);
}

TEST_CASE("E_sigma for a single geodesic chain")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    GeneralizedChain chain;
    chain.elements = {c2.fundamental_weights()[0]};
    chain.orbit_index = {0};
    ElementarySet e = sg.build_E_sigma(chain);
    CHECK(e.dim == 7);
    CHECK(e.congruences.empty());
    // lambda = varpi_1, mu = varpi_1 (a = 4), nu = 2 varpi_1
    CHECK(es_member(e, {1, 0, 1, 0, 2, 0, 4}));
    // wrong endpoint
    CHECK(!es_member(e, {1, 0, 1, 0, 1, 1, 4}));
}

TEST_CASE("E_sigma witnesses a known product")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    // path from varpi_1 in direction (0,1): lambda = varpi_1, mu = varpi_1,
    // endpoint varpi_2
    GeneralizedChain chain;
    chain.elements = {Weight{Rat(0), Rat(1)}};
    chain.orbit_index = {0};
    ElementarySet e = sg.build_E_sigma(chain);
    CHECK(es_member(e, {1, 0, 1, 0, 0, 1, 4}));

    // the maximal W(varpi_2) chain produces congruence rows
    ChainOracle chains(c2);
    GeneralizedChain w2chain;
    w2chain.elements = {Weight{Rat(-1), Rat(-1)}, Weight{Rat(-1), Rat(1)},
                        Weight{Rat(1), Rat(-1)}, Weight{Rat(1), Rat(1)}};
    w2chain.orbit_index = {1, 1, 1, 1};
    for (size_t i = 0; i + 1 < w2chain.elements.size(); ++i) {
        auto steps = chains.steps_down(w2chain.elements[i]);
        bool found = false;
        for (auto& [nxt, b] : steps)
            if (nxt == w2chain.elements[i + 1]) {
                w2chain.witnesses.push_back(b);
                found = true;
            }
        REQUIRE(found);
    }
    ElementarySet e2 = sg.build_E_sigma(w2chain);
    CHECK(!e2.congruences.empty());
}

TEST_CASE("verification reports serialize to the schema")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    VerificationReport rep = sg.verify("mainBC", 2, 2);
    CHECK(rep.pass());
    CHECK(rep.scanned > 0);
    auto j = report_to_json(rep);
    CHECK(j.at("theorem") == "mainBC");
    CHECK(j.at("mismatches").size() == 0);
    CHECK(j.contains("seconds"));
}

TEST_CASE("small verification scans pass")
{
    RootSystem c2 = RootSystem::build("C2");
    Semigroup sg(c2);
    CHECK(sg.verify("paths", 2, 2).pass());
    CHECK(sg.verify("esets", 3, 2).pass());
    CHECK(sg.verify("saturation", 2, 2).pass());
    CHECK(sg.verify("kumar", 3, 2).pass());
    CHECK(sg.verify("deep", 100, 1, 42).pass());
    CHECK(sg.verify("C1.2", 3, 2).pass());
    CHECK(sg.verify("kumar2", 3, 2).pass());
    CHECK_THROWS_AS(sg.verify("nonsense", 1), error);

    RootSystem g2 = RootSystem::build("G2");
    Semigroup sgg(g2);
    CHECK(sgg.verify("g2", 2, 2).pass());

    RootSystem a2 = RootSystem::build("A2");
    Semigroup sga(a2);
    CHECK(sga.verify("C1.1", 3, 2).pass());
}

TEST_CASE("decomposition pipeline on small boxes")
{
    RootSystem a2 = RootSystem::build("A2");
    Semigroup sga(a2);
    CHECK(sga.verify("decomposition", 3, 2).pass());

    RootSystem c2 = RootSystem::build("C2");
    Semigroup sgc(c2);
    CHECK(sgc.verify("decomposition", 3, 2).pass());
}

TEST_CASE("path counting matches the oracle beyond C2")
{
    for (const char* id : {"A2", "G2"}) {
        RootSystem rs = RootSystem::build(id);
        Semigroup sg(rs);
        CHECK(sg.verify("paths", 2, 2).pass());
    }
}

TEST_CASE("invariant-positive triples satisfy the necessary conditions")
{
    for (const char* id : {"A2", "C2", "G2"}) {
        RootSystem rs = RootSystem::build(id);
        Semigroup sg(rs);
        CharOracle oracle(rs);
        long long box = 2;
        for (long long idx = 0; idx < 729; ++idx) {
            long long v = idx;
            IVec c(6);
            for (int i = 0; i < 6; ++i) {
                c[i] = v % (box + 1);
                v /= box + 1;
            }
            Triple t = ft(rs, {c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]});
            if (oracle.triple_invariant_dim(t.lam, t.mu, t.nu) > 0) {
                CHECK(sg.in_cone(t));
                CHECK(sg.lambda_member(t));
            }
        }
    }
}
