// Command-line interface: exact dimensions, weight tables, tensor products,
// Tens membership by oracle / path model / closed criterion, verification
// scans, and elementary-set decompositions.
//
// Exit codes: 0 pass/member, 1 fail/non-member/counterexample or method
// discrepancy, 2 usage error or inapplicable criterion, 3 resource cap.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsl/semigroup.hpp"

using namespace tsl;

namespace {

struct Options {
    std::string system = "C2";
    long long box = -1;
    std::string method = "all";
    int workers = 1;
    unsigned long long seed = 1;
    std::string out;
    std::string format = "text";
};

void write_output(const Options& opt, const nlohmann::ordered_json& doc,
                  const std::string& text, const std::string& csv)
{
    std::string payload;
    if (opt.format == "json")
        payload = doc.dump(2) + "\n";
    else if (opt.format == "csv")
        payload = csv;
    else
        payload = text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw error("cannot open output file " + opt.out);
        f << payload;
    } else {
        std::cout << payload;
    }
}

std::string ivec_str(const IVec& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string triple_text(const std::array<IVec, 3>& t)
{
    auto one = [](const IVec& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    return "(" + one(t[0]) + "," + one(t[1]) + "," + one(t[2]) + ")";
}

int cmd_dim(const Options& opt, const std::string& weight)
{
    RootSystem rs = RootSystem::build(opt.system);
    CharOracle oracle(rs);
    Weight w = rs.weight_parse(weight);
    long long d = oracle.weyl_dim(w);
    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["weight"] = iv_from_weight(rs, w);
    j["dim"] = d;
    write_output(opt, j, std::to_string(d) + "\n", "dim\n" + std::to_string(d) + "\n");
    return 0;
}

int cmd_weights(const Options& opt, const std::string& weight)
{
    RootSystem rs = RootSystem::build(opt.system);
    CharOracle oracle(rs);
    Weight w = rs.weight_parse(weight);
    const WeightMultiplicityTable& t = oracle.weight_multiplicities(w);
    std::vector<IVec> keys;
    for (const auto& [k, m] : t.mult) keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["weight"] = t.highest;
    j["dim"] = t.dim;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::string text, csv = "weight,multiplicity\n";
    for (const IVec& k : keys) {
        rows.push_back({{"weight", k}, {"m", t.mult.at(k)}});
        text += ivec_str(k) + ": " + std::to_string(t.mult.at(k)) + "\n";
        csv += "\"" + ivec_str(k) + "\"," + std::to_string(t.mult.at(k)) + "\n";
    }
    j["mult"] = std::move(rows);
    text += "dim " + std::to_string(t.dim) + "\n";
    write_output(opt, j, text, csv);
    return 0;
}

int cmd_tensor(const Options& opt, const std::string& w1, const std::string& w2)
{
    RootSystem rs = RootSystem::build(opt.system);
    CharOracle oracle(rs);
    DecompositionTable t = oracle.tensor_decompose(rs.weight_parse(w1), rs.weight_parse(w2));

    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["lambda"] = t.lhs;
    j["mu"] = t.rhs;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::string text, csv = "nu,multiplicity\n";
    for (const auto& [nu, c] : t.coeff) {
        rows.push_back({{"nu", nu}, {"multiplicity", c}});
        text += ivec_str(nu) + ": " + std::to_string(c) + "\n";
        csv += "\"" + ivec_str(nu) + "\"," + std::to_string(c) + "\n";
    }
    j["summands"] = std::move(rows);
    write_output(opt, j, text, csv);
    return 0;
}

int cmd_member(const Options& opt, const std::string& w1, const std::string& w2,
               const std::string& w3)
{
    RootSystem rs = RootSystem::build(opt.system);
    Semigroup sg(rs);
    Triple t{rs.weight_parse(w1), rs.weight_parse(w2), rs.weight_parse(w3)};
    if (!sg.dominant(t) || !sg.integral(t)) {
        std::cerr << "error: weights must be dominant and integral\n";
        return 2;
    }

    bool criterion_supported = rs.id() == "C2" || rs.id() == "G2";
    std::vector<std::string> methods;
    if (opt.method == "all") {
        methods = {"oracle", "paths"};
        if (criterion_supported) methods.push_back("criterion");
    } else {
        methods = {opt.method};
    }

    std::optional<bool> verdict;
    bool discrepancy = false;
    long long invariant_dim = -1;
    nlohmann::ordered_json per_method;
    nlohmann::ordered_json witness_paths;
    std::string text;
    for (const std::string& m : methods) {
        std::optional<bool> got;
        if (m == "oracle") {
            CharOracle oracle(rs);
            invariant_dim = oracle.triple_invariant_dim(t.lam, t.mu, t.nu);
            got = invariant_dim > 0;
            text += "oracle: invariant dimension " + std::to_string(invariant_dim) + "\n";
        } else if (m == "paths") {
            PathModel pm(rs);
            IVec comps = iv_from_weight(rs, t.mu);
            Weight target = rs.contragredient(t.nu);
            long long count = pm.path_tensor_multiplicity(t.lam, comps, target);
            got = count > 0;
            text += "paths: " + std::to_string(count) + " lattice paths\n";
            if (count > 0 && count <= 32) {
                nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
                for (const PLPath& p : pm.crystal(comps)) {
                    Weight at = t.lam;
                    bool inside = rs.is_dominant(at);
                    for (const Segment& s : p.segments()) {
                        if (!inside) break;
                        at = vec_add(at, vec_scale(s.duration, s.direction));
                        inside = rs.is_dominant(at);
                    }
                    if (inside && at == target) witnesses.push_back(pm.path_to_json(p));
                }
                witness_paths = std::move(witnesses);
            }
        } else if (m == "criterion") {
            if (!criterion_supported) {
                std::cerr << "error: no closed criterion for system " << rs.id() << "\n";
                return 2;
            }
            Verdict v = rs.id() == "C2" ? sg.tens_c2_criterion(t) : sg.tens_g2_criterion(t);
            if (v == Verdict::Inapplicable) {
                std::cerr << "INAPPLICABLE: triple violates the criterion hypotheses "
                             "(cone/lattice/trace)\n";
                return 2;
            }
            got = v == Verdict::Member;
            text += std::string("criterion: ") + (*got ? "member" : "non-member") + "\n";
        } else {
            std::cerr << "error: unknown method " << m << "\n";
            return 2;
        }
        per_method[m] = *got;
        if (verdict && got && *verdict != *got) discrepancy = true;
        if (!verdict) verdict = got;
    }

    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["triple"] = {iv_from_weight(rs, t.lam), iv_from_weight(rs, t.mu),
                   iv_from_weight(rs, t.nu)};
    j["methods"] = per_method;
    if (invariant_dim >= 0) j["invariant_dim"] = invariant_dim;
    if (!witness_paths.is_null()) j["witness_paths"] = witness_paths;
    if (discrepancy) {
        j["verdict"] = "DISCREPANCY";
        write_output(opt, j, text + "DISCREPANCY: methods disagree\n", "verdict\nDISCREPANCY\n");
        return 1;
    }
    j["verdict"] = *verdict ? "member" : "non-member";
    text += std::string(*verdict ? "member" : "non-member") + "\n";
    write_output(opt, j, text,
                 std::string("verdict\n") + (*verdict ? "member" : "non-member") + "\n");
    return *verdict ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& theorem, const std::string& sets_file)
{
    RootSystem rs = RootSystem::build(opt.system);
    Semigroup sg(rs);
    long long box = opt.box;
    if (box < 0) box = theorem == "deep" ? 10000 : 4;

    VerificationReport rep;
    if (theorem == "decomposition" && !sets_file.empty()) {
        // consume a previously written decomposition
        std::ifstream in(sets_file);
        if (!in) throw error("cannot read " + sets_file);
        nlohmann::json doc;
        in >> doc;
        std::vector<ElementarySet> sets;
        for (const auto& js : doc.at("sets")) sets.push_back(es_from_json(js));
        auto start = std::chrono::steady_clock::now();
        rep.theorem = "decomposition";
        rep.box = box;
        long long total = 1;
        for (int i = 0; i < 6; ++i) total *= box + 1;
        CharOracle oracle(rs);
        for (long long idx = 0; idx < total; ++idx) {
            IVec c(6);
            long long v = idx;
            for (int i = 0; i < 6; ++i) {
                c[i] = v % (box + 1);
                v /= box + 1;
            }
            Triple t{iv_to_weight(rs, {c[0], c[1]}), iv_to_weight(rs, {c[2], c[3]}),
                     iv_to_weight(rs, {c[4], c[5]})};
            ++rep.scanned;
            bool truth = oracle.triple_invariant_dim(t.lam, t.mu, t.nu) > 0;
            if (es_union_member(sets, c) != truth)
                rep.mismatches.push_back(
                    {IVec{c[0], c[1]}, IVec{c[2], c[3]}, IVec{c[4], c[5]}});
        }
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } else {
        rep = sg.verify(theorem, box, opt.workers, opt.seed);
    }

    nlohmann::ordered_json j = report_to_json(rep);
    std::string text = rep.theorem + " box " + std::to_string(rep.box) + ": scanned " +
                       std::to_string(rep.scanned) + ", mismatches " +
                       std::to_string(rep.mismatches.size()) + "\n";
    for (const auto& m : rep.mismatches) text += "  " + triple_text(m) + "\n";
    for (const auto& n : rep.notes) text += "  " + n + "\n";
    text += rep.pass() ? "PASS\n" : "FAIL\n";
    write_output(opt, j, text,
                 "theorem,scanned,mismatches\n" + rep.theorem + "," +
                     std::to_string(rep.scanned) + "," +
                     std::to_string(rep.mismatches.size()) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_decompose(const Options& opt)
{
    RootSystem rs = RootSystem::build(opt.system);
    Semigroup sg(rs);
    std::vector<ElementarySet> sets = sg.compute_tens_decomposition();
    nlohmann::ordered_json j;
    j["system"] = rs.id();
    j["dim"] = 3 * rs.rank();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ElementarySet& e : sets) arr.push_back(es_to_json(e));
    j["sets"] = std::move(arr);
    std::string text = "union of " + std::to_string(sets.size()) + " elementary sets\n";
    Options json_opt = opt;
    json_opt.format = "json";
    write_output(json_opt, j, text, text);
    if (opt.out.empty()) return 0;
    std::cout << text;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact tensor-product semigroup computations for rank-2 reductive groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--root-system", opt.system, "A1, A2, C2 or G2")->capture_default_str();
    app.add_option("--box", opt.box, "box bound for scans (max fundamental coordinate)");
    app.add_option("--method", opt.method, "member method: oracle, paths, criterion or all");
    app.add_option("--workers", opt.workers, "worker threads for scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for sampling commands");
    app.add_option("--out", opt.out, "write the result to this file");
    app.add_option("--format", opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string w1, w2, w3, theorem, sets_file;

    CLI::App* dim = app.add_subcommand("dim", "dimension of the irreducible V_w");
    dim->add_option("weight", w1, "fundamental coordinates p/q,p/q")->required();

    CLI::App* weights = app.add_subcommand("weights", "weight multiplicities of V_w");
    weights->add_option("weight", w1)->required();

    CLI::App* tensor = app.add_subcommand("tensor", "decompose a tensor product");
    tensor->add_option("lambda", w1)->required();
    tensor->add_option("mu", w2)->required();

    CLI::App* member = app.add_subcommand("member", "decide membership in Tens(G)");
    member->add_option("lambda", w1)->required();
    member->add_option("mu", w2)->required();
    member->add_option("nu", w3)->required();

    CLI::App* verify = app.add_subcommand("verify", "scan a theorem against the oracle");
    verify
        ->add_option("theorem", theorem,
                     "paths, mainBC, esets, g2, saturation, kumar, deep, decomposition, "
                     "C1.1, C1.2, C1.3 or kumar2")
        ->required();
    verify->add_option("sets", sets_file, "optional decomposition JSON to consume");

    app.add_subcommand("decompose", "emit Tens(G) as a union of elementary sets");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (dim->parsed()) return cmd_dim(opt, w1);
        if (weights->parsed()) return cmd_weights(opt, w1);
        if (tensor->parsed()) return cmd_tensor(opt, w1, w2);
        if (member->parsed()) return cmd_member(opt, w1, w2, w3);
        if (verify->parsed()) return cmd_verify(opt, theorem, sets_file);
        return cmd_decompose(opt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
