// Command-line surface for the representation-function toolkit.
//
// Exit codes: 0 = success / checked property holds, 1 = a checked
// property failed, 2 = invalid input.

#include "repsets/cube.hpp"
#include "repsets/genfun.hpp"
#include "repsets/integer_set.hpp"
#include "repsets/partition.hpp"
#include "repsets/rep_profile.hpp"
#include "repsets/search.hpp"
#include "repsets/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace repsets;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInvalidInput = 2;

struct Output {
    std::string format = "text"; // text | json | csv
    std::string out_path;
    bool quiet = false;

    void add_flags(CLI::App* cmd, bool allow_csv = false) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"text", "json", "csv"}
                                            : std::vector<std::string>{"text", "json"}));
        cmd->add_option("--out", out_path, "Write the JSON report to this file");
        cmd->add_flag("--quiet", quiet, "Suppress stdout echo");
    }

    void deliver(const std::string& text_body, const json& report) const {
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file) throw std::invalid_argument("cannot write " + out_path);
            file << report.dump(2) << "\n";
        }
        if (!quiet) std::cout << (format == "text" || format == "csv"
                                      ? text_body
                                      : report.dump(2) + "\n");
    }
};

IntegerSet parse_set_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) throw std::invalid_argument("cannot read set file " + arg.substr(1));
        std::stringstream buffer;
        buffer << file.rdbuf();
        std::string text = buffer.str();
        for (char& ch : text)
            if (ch == '\n' || ch == '\t' || ch == '\r') ch = ' ';
        return parse_integer_set(text);
    }
    return parse_integer_set(arg);
}

json classification_json(const Classification& cls) {
    if (cls.kind == PairClass::hilbert_pair)
        return json{{"generators", cls.generators->values()}};
    return json(to_string(cls.kind));
}

CubeGenerators parse_generators(const std::string& gens_arg, const std::string& rule_arg,
                                std::optional<Int> bound) {
    if (!gens_arg.empty()) return CubeGenerators(parse_set_argument(gens_arg).values());
    if (rule_arg.empty())
        throw std::invalid_argument("need --generators or --rule");
    if (!bound) throw std::invalid_argument("--rule needs --bound");
    if (rule_arg == "pow2") return truncate_rule(pow2_rule(), *bound);
    if (rule_arg.rfind("chenlev:", 0) == 0) {
        const int l = std::stoi(rule_arg.substr(8));
        return chenlev_generators(l, *bound);
    }
    throw std::invalid_argument("unknown rule '" + rule_arg + "' (use pow2 or chenlev:<l>)");
}

// ---------------------------------------------------------------- repfn

struct RepfnArgs {
    std::string set;
    int h = 2;
    std::string variant = "strict";
    Int n_max = 0;
    Output out;
};

int run_repfn(const RepfnArgs& args) {
    const auto variant = parse_variant(args.variant);
    if (!variant) throw std::invalid_argument("unknown variant " + args.variant);
    const IntegerSet a = parse_set_argument(args.set);
    const RepProfile profile = rep_function(a, args.h, *variant, args.n_max);

    json report{{"config", {{"command", "repfn"},
                            {"set", a.values()},
                            {"h", args.h},
                            {"variant", args.variant},
                            {"n_max", args.n_max}}},
                {"counts", profile.counts}};
    std::ostringstream text;
    if (args.out.format == "csv") {
        text << "n,count\n";
        for (Int n = 0; n <= profile.n_max; ++n) text << n << "," << profile.at(n) << "\n";
    } else {
        for (Int n = 0; n <= profile.n_max; ++n)
            if (profile.at(n) != 0) text << n << ": " << profile.at(n) << "\n";
    }
    args.out.deliver(text.str(), report);
    return kExitOk;
}

// ----------------------------------------------------------------- cube

struct CubeArgs {
    std::string generators;
    std::string rule;
    Int bound = -1; // -1: no bound
    bool parts = false;
    bool nondegenerate = false;
    Int verify_bound = -1;
    bool identities = false;
    Output out;
};

int run_cube(const CubeArgs& args) {
    const std::optional<Int> bound =
        args.bound >= 0 ? std::optional<Int>(args.bound) : std::nullopt;
    const CubeGenerators gens = parse_generators(args.generators, args.rule, bound);
    const bool nothing_asked =
        !args.parts && !args.nondegenerate && args.verify_bound < 0 && !args.identities;

    json report{{"config",
                 {{"command", "cube"},
                  {"generators", gens.values()},
                  {"bound", bound ? json(*bound) : json(nullptr)}}}};
    std::ostringstream text;
    bool failed = false;

    if (args.parts || nothing_asked) {
        const CubeParts parts = cube_parts(gens, bound);
        report["even"] = parts.even.values();
        report["odd"] = parts.odd.values();
        text << "H0 = {" << to_string(parts.even) << "}\n";
        text << "H1 = {" << to_string(parts.odd) << "}\n";
    }
    if (args.nondegenerate) {
        const auto witness = half_degeneracy_witness(gens);
        report["half_nondegenerate"] = !witness.has_value();
        if (witness) {
            failed = true;
            report["collision"] = {{"first", witness->first},
                                   {"second", witness->second},
                                   {"sum", witness->sum}};
            text << "degenerate: {" << to_string(IntegerSet(witness->first)) << "} and {"
                 << to_string(IntegerSet(witness->second)) << "} both sum to " << witness->sum
                 << "\n";
        } else {
            text << "half non-degenerate\n";
        }
    }
    if (args.verify_bound >= 0) {
        const bool ok = verify_half_coincidence(gens, args.verify_bound);
        report["halves_coincide"] = ok;
        failed |= !ok;
        text << "halves coincide on [0, " << args.verify_bound
             << "]: " << (ok ? "true" : "false") << "\n";
    }
    if (args.identities) {
        const bool ok = product_identities(gens);
        report["product_identities"] = ok;
        failed |= !ok;
        text << "product identities: " << (ok ? "true" : "false") << "\n";
    }
    args.out.deliver(text.str(), report);
    return failed ? kExitPropertyFailed : kExitOk;
}

// ----------------------------------------------------- verify / certify

int run_verify(const std::string& c_arg, const std::string& d_arg, const Output& out) {
    const IntegerSet c = parse_set_argument(c_arg), d = parse_set_argument(d_arg);
    const bool equal = coincidence_criterion(c, d);
    json report{{"config", {{"command", "verify-eq1"}, {"C", c.values()}, {"D", d.values()}}},
                {"coincide", equal}};
    out.deliver(std::string(equal ? "true" : "false") + "\n", report);
    return equal ? kExitOk : kExitPropertyFailed;
}

int run_cert(const std::string& c_arg, const std::string& d_arg, const Output& out) {
    const IntegerSet c = parse_set_argument(c_arg), d = parse_set_argument(d_arg);
    const MultiplicityCertificate cert = unit_root_multiplicity(c, d);
    json report{{"config", {{"command", "cert-mult"}, {"C", c.values()}, {"D", d.values()}}},
                {"multiplicity", cert.multiplicity},
                {"quotient", cert.quotient.to_string()},
                {"cardinality_sum", c.size() + d.size()}};
    std::ostringstream text;
    text << "multiplicity " << cert.multiplicity << ", quotient " << cert.quotient.to_string()
         << "\n";
    out.deliver(text.str(), report);
    return kExitOk;
}

// ------------------------------------------------------------ nathanson

struct NathansonArgs {
    std::string fc, fd, t;
    Int m = 1, n0 = 1;
    int h = 2;
    Int bound = -1;
    bool build = false;
    Output out;
};

int run_nathanson(const NathansonArgs& args) {
    NathansonSpec spec{parse_set_argument(args.fc), parse_set_argument(args.fd),
                       parse_set_argument(args.t), args.m, args.n0, args.h};
    const bool divisible = divisibility_check(spec);
    json report{{"config", {{"command", "nathanson"},
                            {"F_C", spec.f_c.values()},
                            {"F_D", spec.f_d.values()},
                            {"T", spec.t.values()},
                            {"M", spec.m},
                            {"n0", spec.n0},
                            {"h", spec.h}}},
                {"divisible", divisible}};
    std::ostringstream text;
    text << "divisibility: " << (divisible ? "true" : "false") << "\n";
    if (args.build) {
        if (args.bound < 0) throw std::invalid_argument("--build needs --bound");
        const auto [c, d] = nathanson_build(spec, args.bound);
        report["C"] = c.values();
        report["D"] = d.values();
        text << "C = {" << to_string(c) << "}\n";
        text << "D = {" << to_string(d) << "}\n";
    }
    args.out.deliver(text.str(), report);
    return divisible ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------- solve / classify

int run_solve(const std::string& d_arg, std::size_t max_solutions, Int n_max_opt,
              const Output& out) {
    const IntegerSet d = parse_set_argument(d_arg);
    if (d.empty()) throw std::invalid_argument("solve: D must be nonempty");
    const Int window = n_max_opt >= 0 ? n_max_opt : 2 * d.max_element();
    const auto solutions = solve_coinciding(d, max_solutions, window);
    json sols = json::array(), classifications = json::array();
    std::ostringstream text;
    for (const auto& c : solutions) {
        sols.push_back(c.values());
        classifications.push_back(classification_json(classify_pair(c, d)));
        text << "{" << to_string(c) << "}\n";
    }
    json report{{"config",
                 {{"command", "solve"}, {"max_solutions", max_solutions}, {"n_max", window}}},
                {"D", d.values()},
                {"solutions", sols},
                {"classification", classifications}};
    if (solutions.empty()) text << "(no solutions)\n";
    out.deliver(text.str(), report);
    return kExitOk;
}

int run_classify(const std::string& c_arg, const std::string& d_arg, const Output& out) {
    const IntegerSet c = parse_set_argument(c_arg), d = parse_set_argument(d_arg);
    const Classification cls = classify_pair(c, d);
    json report{{"config", {{"command", "classify"}, {"C", c.values()}, {"D", d.values()}}},
                {"classification", classification_json(cls)}};
    std::ostringstream text;
    if (cls.kind == PairClass::hilbert_pair)
        text << "hilbert_pair(" << to_string(IntegerSet(cls.generators->values())) << ")\n";
    else
        text << to_string(cls.kind) << "\n";
    out.deliver(text.str(), report);
    return cls.kind == PairClass::non_hilbert ? kExitPropertyFailed : kExitOk;
}

// ------------------------------------------------------------ partition

struct PartitionVerifyArgs {
    int l = 1;
    Int bound = 200;
    Output out;
};

int run_partition_verify(const PartitionVerifyArgs& args) {
    const PartitionSpec spec = PartitionSpec::chen_lev(args.l);
    const auto [c, d] = chenlev_sets(args.l, args.bound);
    const PartitionReport result = verify_partition(c, d, spec, args.bound);
    json report{{"config", {{"command", "partition verify"},
                            {"l", args.l},
                            {"r", spec.r},
                            {"m", spec.m},
                            {"bound", args.bound}}},
                {"union", result.union_ok},
                {"intersection", result.intersection_ok},
                {"rep_equal", result.rep_equal},
                {"window", {result.window_lo, result.window_hi}}};
    std::ostringstream text;
    text << "union: " << (result.union_ok ? "true" : "false")
         << "\nintersection: " << (result.intersection_ok ? "true" : "false")
         << "\nrep_equal on [0, " << result.window_hi
         << "]: " << (result.rep_equal ? "true" : "false") << "\n";
    args.out.deliver(text.str(), report);
    return result.all_ok() ? kExitOk : kExitPropertyFailed;
}

struct PartitionScanArgs {
    Int bound = 40;
    Int max_m = 8;
    int jobs = 1;
    Output out;
};

int run_partition_scan(const PartitionScanArgs& args) {
    const auto found = overlap_partition_scan(args.bound, args.max_m, args.jobs);
    json list = json::array();
    std::ostringstream text;
    for (const auto& cand : found) {
        list.push_back(
            {{"r", cand.r}, {"m", cand.m}, {"C", cand.c.values()}, {"D", cand.d.values()}});
        text << "r=" << cand.r << " m=" << cand.m << "\n  C = {" << to_string(cand.c)
             << "}\n  D = {" << to_string(cand.d) << "}\n";
    }
    if (found.empty()) text << "(no candidates)\n";
    json report{{"config", {{"command", "partition scan"},
                            {"bound", args.bound},
                            {"max_m", args.max_m},
                            {"jobs", args.jobs}}},
                {"candidates", list}};
    args.out.deliver(text.str(), report);
    return kExitOk;
}

// --------------------------------------------------------------- search

struct SearchArgs {
    Int max_element = 24;
    std::size_t size = 4;
    int jobs = 1;
    bool any_size = false;
    bool audit = false;
    std::string checkpoint;
    std::string resume;
    Output out;
};

json shard_to_json(const ShardResult& shard) {
    json pairs = json::array();
    for (const auto& [c, d] : shard.pairs) pairs.push_back({c.values(), d.values()});
    return json{{"shard", shard.shard_key},
                {"pairs", pairs},
                {"nodes", shard.stats.nodes},
                {"profile_prunes", shard.stats.profile_prunes},
                {"capacity_prunes", shard.stats.capacity_prunes}};
}

ShardResult shard_from_json(const json& item) {
    ShardResult shard;
    shard.shard_key = item.at("shard").get<Int>();
    for (const auto& pair : item.at("pairs"))
        shard.pairs.emplace_back(IntegerSet(pair.at(0).get<std::vector<Int>>()),
                                 IntegerSet(pair.at(1).get<std::vector<Int>>()));
    shard.stats.nodes = item.value("nodes", std::uint64_t(0));
    shard.stats.profile_prunes = item.value("profile_prunes", std::uint64_t(0));
    shard.stats.capacity_prunes = item.value("capacity_prunes", std::uint64_t(0));
    return shard;
}

int run_search(const SearchArgs& args) {
    const SearchOptions opts{args.max_element, args.size, args.jobs, args.any_size};
    std::vector<ShardResult> completed;
    if (!args.resume.empty()) {
        std::ifstream in(args.resume);
        if (!in) throw std::invalid_argument("cannot read checkpoint " + args.resume);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) completed.push_back(shard_from_json(json::parse(line)));
    }

    std::vector<Int> pending;
    for (Int key : all_shard_keys(opts)) {
        bool done = false;
        for (const auto& shard : completed) done |= shard.shard_key == key;
        if (!done) pending.push_back(key);
    }

    const std::string checkpoint_path = !args.checkpoint.empty() ? args.checkpoint : args.resume;
    std::ofstream checkpoint;
    std::mutex checkpoint_mutex;
    if (!checkpoint_path.empty()) {
        checkpoint.open(checkpoint_path, args.resume.empty() ? std::ios::trunc : std::ios::app);
        if (!checkpoint) throw std::invalid_argument("cannot write checkpoint " + checkpoint_path);
    }

    std::atomic<std::size_t> next{0};
    std::vector<ShardResult> fresh(pending.size());
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            fresh[i] = run_shard(opts, pending[i]);
            if (checkpoint.is_open()) {
                std::lock_guard<std::mutex> lock(checkpoint_mutex);
                checkpoint << shard_to_json(fresh[i]).dump() << "\n";
                checkpoint.flush();
            }
        }
    };
    if (args.jobs <= 1 || pending.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < args.jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    completed.insert(completed.end(), fresh.begin(), fresh.end());

    // merge into a canonical report; re-verify and classify every pair
    SearchReport report;
    report.max_element = opts.max_element;
    report.size = opts.size;
    for (const auto& shard : completed) {
        for (const auto& [c, d] : shard.pairs) {
            if (!coincidence_criterion(c, d))
                throw std::runtime_error("checkpoint pair fails re-verification");
            report.pairs.push_back({c, d, classify_pair(c, d)});
        }
        report.stats.nodes += shard.stats.nodes;
        report.stats.profile_prunes += shard.stats.profile_prunes;
        report.stats.capacity_prunes += shard.stats.capacity_prunes;
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const ClassifiedPair& a, const ClassifiedPair& b) {
                  return a.c.values() != b.c.values() ? a.c.values() < b.c.values()
                                                      : a.d.values() < b.d.values();
              });

    std::size_t non_hilbert = 0;
    json pair_list = json::array();
    std::ostringstream text;
    for (const auto& pair : report.pairs) {
        non_hilbert += pair.classification.kind != PairClass::hilbert_pair ? 1 : 0;
        pair_list.push_back({{"C", pair.c.values()},
                             {"D", pair.d.values()},
                             {"classification", classification_json(pair.classification)}});
        text << "C = {" << to_string(pair.c) << "}  D = {" << to_string(pair.d) << "}  "
             << to_string(pair.classification.kind) << "\n";
    }
    json out{{"config", {{"command", "search"},
                         {"max_element", opts.max_element},
                         {"size", opts.size},
                         {"jobs", opts.jobs},
                         {"any_size", opts.any_size},
                         {"audit", args.audit}}},
             {"pairs", pair_list},
             {"stats", {{"nodes", report.stats.nodes},
                        {"profile_prunes", report.stats.profile_prunes},
                        {"capacity_prunes", report.stats.capacity_prunes}}}};
    if (args.audit) {
        out["verdict"] = non_hilbert == 0 ? "all_hilbert" : "non_hilbert_candidates";
        out["non_hilbert_count"] = non_hilbert;
        text << "verdict: " << out["verdict"].get<std::string>() << "\n";
    }
    text << report.pairs.size() << " pair(s), " << report.stats.nodes << " nodes\n";
    args.out.deliver(text.str(), out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive representation functions, Hilbert cube halves, and coinciding pairs"};
    app.require_subcommand(1);

    RepfnArgs repfn;
    auto* repfn_cmd = app.add_subcommand("repfn", "Representation-function profile of a set");
    repfn_cmd->add_option("--set", repfn.set, "Set literal or @file")->required();
    repfn_cmd->add_option("--arity", repfn.h, "Arity (>= 2)");
    repfn_cmd->add_option("--variant", repfn.variant, "ordered | non-decreasing | strict");
    repfn_cmd->add_option("--n-max", repfn.n_max, "Profile window top")->required();
    repfn.out.add_flags(repfn_cmd, /*allow_csv=*/true);

    CubeArgs cube;
    auto* cube_cmd = app.add_subcommand("cube", "Hilbert cube parts and checks");
    cube_cmd->add_option("--generators", cube.generators, "Comma-separated generators");
    cube_cmd->add_option("--rule", cube.rule, "Named rule: pow2 | chenlev:<l>");
    cube_cmd->add_option("--bound", cube.bound, "Truncate cube elements at this bound");
    cube_cmd->add_flag("--parts", cube.parts, "Print even/odd parts");
    cube_cmd->add_flag("--nondegenerate", cube.nondegenerate, "Check half non-degeneracy");
    cube_cmd->add_option("--verify", cube.verify_bound,
                         "Verify the halves' profiles coincide up to this bound");
    cube_cmd->add_flag("--identities", cube.identities, "Check the product identities");
    cube.out.add_flags(cube_cmd);

    std::string verify_c, verify_d;
    auto* verify_cmd = app.add_subcommand("verify-eq1", "Exact polynomial coincidence criterion");
    verify_cmd->add_option("--C", verify_c)->required();
    verify_cmd->add_option("--D", verify_d)->required();
    Output verify_out;
    verify_out.add_flags(verify_cmd);

    std::string cert_c, cert_d;
    auto* cert_cmd =
        app.add_subcommand("cert-mult", "Unit-root multiplicity certificate of C(z) - D(z)");
    cert_cmd->add_option("--C", cert_c)->required();
    cert_cmd->add_option("--D", cert_d)->required();
    Output cert_out;
    cert_out.add_flags(cert_cmd);

    NathansonArgs nathanson;
    auto* nath_cmd =
        app.add_subcommand("nathanson", "Eventually periodic pair: divisibility and build");
    nath_cmd->add_option("--fc", nathanson.fc, "Finite part of C")->required();
    nath_cmd->add_option("--fd", nathanson.fd, "Finite part of D")->required();
    nath_cmd->add_option("--t", nathanson.t, "Residues T")->required();
    nath_cmd->add_option("--m", nathanson.m, "Modulus M")->required();
    nath_cmd->add_option("--n0", nathanson.n0, "Period start n0")->required();
    nath_cmd->add_option("--arity", nathanson.h, "Arity");
    nath_cmd->add_option("--bound", nathanson.bound, "Truncation bound for --build");
    nath_cmd->add_flag("--build", nathanson.build, "Also materialize the pair");
    nathanson.out.add_flags(nath_cmd);

    std::string solve_d;
    std::size_t solve_max = 16;
    Int solve_n_max = -1;
    auto* solve_cmd = app.add_subcommand("solve", "All C coinciding with a given D");
    solve_cmd->add_option("--D", solve_d)->required();
    solve_cmd->add_option("--max-solutions", solve_max);
    solve_cmd->add_option("--n-max", solve_n_max, "Element ceiling (default 2*max(D))");
    Output solve_out;
    solve_out.add_flags(solve_cmd);

    std::string classify_c, classify_d;
    auto* classify_cmd = app.add_subcommand("classify", "Hilbert-pair classification");
    classify_cmd->add_option("--C", classify_c)->required();
    classify_cmd->add_option("--D", classify_d)->required();
    Output classify_out;
    classify_out.add_flags(classify_cmd);

    auto* partition_cmd = app.add_subcommand("partition", "Partition-with-overlap tools");
    partition_cmd->require_subcommand(1);
    PartitionVerifyArgs pverify;
    auto* pverify_cmd = partition_cmd->add_subcommand("verify", "Verify the level-l partition");
    pverify_cmd->add_option("--l", pverify.l, "Construction level")->required();
    pverify_cmd->add_option("--bound", pverify.bound, "Truncation bound");
    pverify.out.add_flags(pverify_cmd);
    PartitionScanArgs pscan;
    auto* pscan_cmd = partition_cmd->add_subcommand("scan", "Exhaustive overlap-partition scan");
    pscan_cmd->add_option("--bound", pscan.bound, "Assignment window top")->required();
    pscan_cmd->add_option("--max-m", pscan.max_m, "Largest overlap modulus")->required();
    pscan_cmd->add_option("--jobs", pscan.jobs, "Worker threads");
    pscan.out.add_flags(pscan_cmd);

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive coinciding-pair enumeration");
    search_cmd->add_option("--max-element", search.max_element)->required();
    search_cmd->add_option("--size", search.size)->required();
    search_cmd->add_option("--jobs", search.jobs);
    search_cmd->add_flag("--any-size", search.any_size, "Lift the power-of-two restriction");
    search_cmd->add_flag("--audit", search.audit, "Summarize classifications into a verdict");
    search_cmd->add_option("--checkpoint", search.checkpoint, "Write JSONL shard checkpoints");
    search_cmd->add_option("--resume", search.resume, "Resume from a JSONL checkpoint");
    search.out.add_flags(search_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return kExitInvalidInput;
    }

    try {
        if (repfn_cmd->parsed()) return run_repfn(repfn);
        if (cube_cmd->parsed()) return run_cube(cube);
        if (verify_cmd->parsed()) return run_verify(verify_c, verify_d, verify_out);
        if (cert_cmd->parsed()) return run_cert(cert_c, cert_d, cert_out);
        if (nath_cmd->parsed()) return run_nathanson(nathanson);
        if (solve_cmd->parsed()) return run_solve(solve_d, solve_max, solve_n_max, solve_out);
        if (classify_cmd->parsed()) return run_classify(classify_c, classify_d, classify_out);
        if (pverify_cmd->parsed()) return run_partition_verify(pverify);
        if (pscan_cmd->parsed()) return run_partition_scan(pscan);
        if (search_cmd->parsed()) return run_search(search);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
