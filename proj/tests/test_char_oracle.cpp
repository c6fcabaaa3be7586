#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "tsl/char_oracle.hpp"

using namespace tsl;

namespace {

Weight fw(const RootSystem& rs, long long a, long long b)
{
    return rs.weight_from_fund({Rat(a), Rat(b)});
}

} // namespace

TEST_CASE("Weyl dimensions")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2);
    CHECK(oc.weyl_dim(fw(c2, 0, 0)) == 1);
    CHECK(oc.weyl_dim(fw(c2, 1, 0)) == 4);
    CHECK(oc.weyl_dim(fw(c2, 0, 1)) == 5);
    CHECK(oc.weyl_dim(fw(c2, 1, 1)) == 16);

    RootSystem g2 = RootSystem::build("G2");
    CharOracle og(g2);
    CHECK(og.weyl_dim(fw(g2, 1, 0)) == 7);
    CHECK(og.weyl_dim(fw(g2, 0, 1)) == 14);
    CHECK(og.weyl_dim(fw(g2, 1, 1)) == 64);
}

TEST_CASE("Freudenthal tables")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2);

    const auto& t1 = oc.weight_multiplicities(fw(c2, 0, 1));  // ambient (1,1)
    CHECK(t1.mult.size() == 2);
    CHECK(t1.at({0, 1}) == 1);
    CHECK(t1.at({0, 0}) == 1);
    CHECK(t1.dim == 5);

    const auto& t0 = oc.weight_multiplicities(fw(c2, 0, 0));
    CHECK(t0.mult.size() == 1);
    CHECK(t0.at({0, 0}) == 1);

    const auto& t2 = oc.weight_multiplicities(fw(c2, 2, 0));  // ambient (2,0)
    CHECK(t2.at({2, 0}) == 1);
    CHECK(t2.at({0, 1}) == 1);
    CHECK(t2.at({0, 0}) == 2);
    CHECK(t2.dim == 10);
}

TEST_CASE("table sums equal the Weyl dimension")
{
    for (const char* id : {"A2", "C2", "G2"}) {
        RootSystem rs = RootSystem::build(id);
        CharOracle oc(rs);
        for (long long a = 0; a <= 3; ++a)
            for (long long b = 0; b <= 3; ++b) {
                Weight mu = fw(rs, a, b);
                CHECK(oc.weight_multiplicities(mu).dim == oc.weyl_dim(mu));
            }
    }
}

TEST_CASE("tensor decomposition")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2);

    DecompositionTable t = oc.tensor_decompose(fw(c2, 1, 0), fw(c2, 1, 0));
    CHECK(t.coeff.size() == 3);
    CHECK(t.at({2, 0}) == 1);
    CHECK(t.at({0, 1}) == 1);
    CHECK(t.at({0, 0}) == 1);

    DecompositionTable t2 = oc.tensor_decompose(fw(c2, 0, 1), fw(c2, 0, 1));
    CHECK(t2.coeff.size() == 3);
    CHECK(t2.at({0, 2}) == 1);
    CHECK(t2.at({2, 0}) == 1);
    CHECK(t2.at({0, 0}) == 1);

    DecompositionTable t3 = oc.tensor_decompose(fw(c2, 2, 1), fw(c2, 0, 0));
    CHECK(t3.coeff.size() == 1);
    CHECK(t3.at({2, 1}) == 1);
}

TEST_CASE("dimension bookkeeping in tensor products")
{
    for (const char* id : {"A2", "C2", "G2"}) {
        RootSystem rs = RootSystem::build(id);
        CharOracle oc(rs);
        for (long long a = 0; a <= 2; ++a)
            for (long long b = 0; b <= 2; ++b) {
                Weight lam = fw(rs, a, b);
                Weight mu = fw(rs, 1, 1);
                DecompositionTable t = oc.tensor_decompose(lam, mu);
                long long total = 0;
                for (const auto& [nu, c] : t.coeff) {
                    CHECK(c > 0);
                    total += c * oc.weyl_dim(iv_to_weight(rs, nu));
                }
                CHECK(total == oc.weyl_dim(lam) * oc.weyl_dim(mu));
            }
    }
}

TEST_CASE("triple invariants")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2);
    CHECK(oc.triple_invariant_dim(fw(c2, 1, 0), fw(c2, 1, 0), fw(c2, 0, 0)) == 1);
    CHECK(oc.triple_invariant_dim(fw(c2, 0, 0), fw(c2, 0, 0), fw(c2, 0, 0)) == 1);

    RootSystem g2 = RootSystem::build("G2");
    CharOracle og(g2);
    // epsilon_1 = (varpi_2, varpi_2, varpi_1) carries no invariants
    CHECK(og.triple_invariant_dim(fw(g2, 0, 1), fw(g2, 0, 1), fw(g2, 1, 0)) == 0);
    CHECK(og.triple_invariant_dim(fw(g2, 0, 1), fw(g2, 0, 1), fw(g2, 0, 1)) == 1);
}

TEST_CASE("S3 symmetry and duality of the invariant dimension")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2);
    std::vector<Weight> ws;
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b) ws.push_back(fw(c2, a, b));
    for (size_t i = 0; i < ws.size(); i += 2)
        for (size_t j = i; j < ws.size(); j += 3)
            for (size_t k = j; k < ws.size(); k += 2) {
                long long d = oc.triple_invariant_dim(ws[i], ws[j], ws[k]);
                CHECK(d == oc.triple_invariant_dim(ws[j], ws[i], ws[k]));
                CHECK(d == oc.triple_invariant_dim(ws[k], ws[j], ws[i]));
                CHECK(d == oc.triple_invariant_dim(ws[j], ws[k], ws[i]));
                CHECK(d == oc.triple_invariant_dim(c2.contragredient(ws[i]),
                                                   c2.contragredient(ws[j]),
                                                   c2.contragredient(ws[k])));
            }
}

TEST_CASE("resource caps fail loudly")
{
    RootSystem c2 = RootSystem::build("C2");
    CharOracle oc(c2, 8);
    CHECK_THROWS_AS(oc.weight_multiplicities(fw(c2, 9, 0)), cap_error);
}

TEST_CASE("TSL_CACHE_DIR persists Freudenthal tables")
{
    std::string dir = "/tmp/tsl_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    setenv("TSL_CACHE_DIR", dir.c_str(), 1);

    RootSystem c2 = RootSystem::build("C2");
    {
        CharOracle oc(c2);
        CHECK(oc.weight_multiplicities(fw(c2, 2, 1)).dim == 35);
    }
    CHECK(std::filesystem::exists(dir + "/C2_2_1.json"));
    {
        // a fresh oracle instance reloads the persisted table
        CharOracle oc(c2);
        const auto& t = oc.weight_multiplicities(fw(c2, 2, 1));
        CHECK(t.dim == 35);
        CHECK(t.at({2, 1}) == 1);
    }
    unsetenv("TSL_CACHE_DIR");
    std::filesystem::remove_all(dir);
}
