#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qpath/json.hpp"
#include "qpath/verify.hpp"

using namespace qpath;
using nlohmann::json;

namespace {

// exit codes: 0 solved/ok, 1 infeasible/verification failure,
// 2 malformed input, 3 below threshold or unknown
constexpr int kOk = 0, kInfeasible = 1, kBadInput = 2, kOpen = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Fault parse_fault(int n, const std::string& s) {
    std::vector<Vertex> vs;
    for (auto& t : split(s, ',')) vs.push_back(Vertex::parse(t));
    return Fault(n, std::move(vs));
}

PairSet parse_pairs(int n, const std::string& s) {
    std::vector<VertexPair> ps;
    for (auto& t : split(s, ';')) {
        auto ends = split(t, '-');
        if (ends.size() != 2) throw RangeError("pair must be 'aaaa-bbbb'");
        ps.emplace_back(Vertex::parse(ends[0]), Vertex::parse(ends[1]));
    }
    return PairSet(n, std::move(ps));
}

struct InstanceArgs {
    std::string file;
    int n = 0;
    std::string fault, pairs;
    bool cycle = false;

    void add(CLI::App* cmd, bool with_cycle = true) {
        cmd->add_option("--instance", file, "instance JSON file");
        cmd->add_option("--n", n, "dimension");
        cmd->add_option("--fault", fault, "deleted vertices 'aaaa,bbbb'");
        cmd->add_option("--pairs", pairs, "terminal pairs 'aaaa-bbbb;cccc-dddd'");
        if (with_cycle) cmd->add_flag("--cycle", cycle, "Hamiltonian cycle request");
    }

    Instance load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw RangeError("cannot read instance file");
            json j = json::parse(in);
            return instance_from_json(j);
        }
        if (n < 1 || n > kMaxDim) throw RangeError("dimension out of range");
        return Instance(n, parse_fault(n, fault), parse_pairs(n, pairs));
    }

    std::pair<int, Fault> load_cycle() const {
        if (n < 1 || n > kMaxDim) throw RangeError("dimension out of range");
        return {n, parse_fault(n, fault)};
    }
};

int outcome_exit(const SolveOutcome& o) {
    switch (o.status) {
        case Status::Solved: return kOk;
        case Status::InfeasibleCertified: return kInfeasible;
        default: return kOpen;
    }
}

int run_solve(const InstanceArgs& args, bool trace) {
    SolveOutcome o;
    if (args.cycle) {
        auto [n, f] = args.load_cycle();
        o = solve_cycle(n, f, trace);
    } else {
        o = solve(args.load(), trace);
    }
    std::cout << to_json(o).dump(2) << "\n";
    return outcome_exit(o);
}

int run_verify(const InstanceArgs& args, const std::string& covering_file) {
    json j;
    if (covering_file.empty()) {
        j = json::parse(std::cin);
    } else {
        std::ifstream in(covering_file);
        if (!in) throw RangeError("cannot read covering file");
        j = json::parse(in);
    }
    if (j.is_object() && j.contains("covering")) j = j.at("covering");
    Covering cov = covering_from_json(j);
    VerifyResult res;
    if (args.cycle) {
        auto [n, f] = args.load_cycle();
        if (cov.size() != 1) {
            res.fail("a cycle certificate is a single closed path");
        } else {
            res = verify_cycle(n, f, cov[0]);
        }
    } else {
        res = verify_covering(args.load(), cov);
    }
    json out{{"ok", res.ok}, {"problems", res.problems}};
    std::cout << out.dump(2) << "\n";
    return res.ok ? kOk : kInfeasible;
}

int run_oracle(const InstanceArgs& args) {
    SearchResult r;
    json extra;
    if (args.cycle) {
        auto [n, f] = args.load_cycle();
        r = oracle_cycle(n, f);
    } else {
        r = oracle_solve(args.load());
    }
    const char* verdict = r.verdict == Verdict::Feasible     ? "feasible"
                          : r.verdict == Verdict::Infeasible ? "infeasible"
                                                             : "indeterminate";
    json out{{"verdict", verdict}, {"nodes", r.nodes}};
    if (r.covering) out["covering"] = to_json(*r.covering);
    std::cout << out.dump(2) << "\n";
    return r.verdict == Verdict::Feasible     ? kOk
           : r.verdict == Verdict::Infeasible ? kInfeasible
                                              : kOpen;
}

struct SweepTally {
    long long checked = 0, solved = 0, infeasible = 0, below = 0, unknown = 0;
    long long failures = 0;
    std::vector<json> witnesses;

    void add(const SweepTally& o) {
        checked += o.checked;
        solved += o.solved;
        infeasible += o.infeasible;
        below += o.below;
        unknown += o.unknown;
        failures += o.failures;
        for (auto& w : o.witnesses)
            if (witnesses.size() < 5) witnesses.push_back(w);
    }
};

template <class Item, class Fn>
SweepTally parallel_tally(const std::vector<Item>& items, int jobs, Fn fn) {
    jobs = std::max(1, jobs);
    std::vector<SweepTally> parts(jobs);
    std::vector<std::thread> ts;
    for (int t = 0; t < jobs; ++t)
        ts.emplace_back([&, t] {
            for (size_t i = t; i < items.size(); i += jobs) fn(items[i], parts[t]);
        });
    for (auto& th : ts) th.join();
    SweepTally total;
    for (auto& p : parts) total.add(p);
    return total;
}

void tally_outcome(const SolveOutcome& o, const json& desc, SweepTally& t) {
    ++t.checked;
    switch (o.status) {
        case Status::Solved: ++t.solved; break;
        case Status::InfeasibleCertified:
            ++t.infeasible;
            if (t.witnesses.size() < 5) t.witnesses.push_back(desc);
            break;
        case Status::BelowThreshold: ++t.below; break;
        case Status::Unknown: ++t.unknown; break;
    }
}

int run_sweep(const std::string& sig_str, int n, const std::string& mode,
              long long count, uint64_t seed, int jobs) {
    SweepTally tally;
    auto cyc = split(sig_str, '-');
    if (cyc.size() == 2 && cyc[1] == "cycle") {
        int m = std::stoi(cyc[0]);
        std::vector<Fault> faults;
        if (mode == "exhaustive") {
            for_each_fault(n, m, 0, [&](const Fault& f) {
                faults.push_back(f);
                return true;
            });
        } else {
            std::mt19937_64 rng(seed);
            for (long long i = 0; i < count; ++i)
                faults.push_back(random_fault(n, m, 0, rng));
        }
        tally = parallel_tally(faults, jobs, [&](const Fault& f, SweepTally& t) {
            try {
                tally_outcome(solve_cycle(n, f), to_json(Instance(n, f, PairSet(n, {}))),
                              t);
            } catch (const Error&) {
                ++t.checked;
                ++t.failures;
            }
        });
    } else {
        auto parts = split(sig_str, ',');
        if (parts.size() != 4) throw RangeError("sig must be 'M,C,N,O' or 'm-cycle'");
        Signature sig{std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]),
                      std::stoi(parts[3])};
        std::vector<Instance> insts;
        if (mode == "exhaustive") {
            for_each_fault(n, sig.M, sig.C, [&](const Fault& f) {
                for_each_pairset(n, f, sig.N, sig.O, [&](const PairSet& ps) {
                    insts.emplace_back(n, f, ps);
                    return true;
                });
                return true;
            });
        } else {
            std::mt19937_64 rng(seed);
            for (long long i = 0; i < count; ++i)
                insts.push_back(random_instance(n, sig, rng));
        }
        tally = parallel_tally(insts, jobs, [&](const Instance& inst, SweepTally& t) {
            try {
                tally_outcome(solve(inst), to_json(inst), t);
            } catch (const Error&) {
                ++t.checked;
                ++t.failures;
            }
        });
    }
    json out{{"checked", tally.checked},     {"solved", tally.solved},
             {"infeasible", tally.infeasible}, {"below_threshold", tally.below},
             {"unknown", tally.unknown},     {"failures", tally.failures},
             {"witnesses", tally.witnesses}};
    std::cout << out.dump(2) << "\n";
    return tally.failures == 0 ? kOk : kInfeasible;
}

int run_counterexample(bool list, const std::string& name, int which, int k) {
    if (list) {
        for (auto& r : counterexample_catalog()) std::cout << r.name << "\n";
        return kOk;
    }
    Instance inst;
    std::string label;
    if (!name.empty()) {
        for (auto& r : counterexample_catalog())
            if (r.name == name) {
                inst = r.instance;
                label = r.name;
            }
        if (label.empty()) throw RangeError("unknown catalog record name");
    } else {
        inst = conjecture_counterexample(which, k);
        label = "conjecture-" + std::to_string(which) + "-k" + std::to_string(k);
    }
    SearchResult r = oracle_solve(inst);
    json out{{"name", label},
             {"instance", to_json(inst)},
             {"verdict", r.verdict == Verdict::Infeasible ? "infeasible" : "feasible"},
             {"nodes", r.nodes}};
    std::cout << out.dump(2) << "\n";
    return r.verdict == Verdict::Infeasible ? kOk : kInfeasible;
}

int run_catalog_rebuild(const std::string& out_file) {
    catalog_clear();
    json records = json::array();
    // deterministic base stock: every Q3 instance of the low signatures
    std::vector<Signature> sigs{
        {0, 0, 1, 0}, {0, 0, 2, 0}, {1, 1, 0, 1}, {2, 0, 1, 0}, {0, 0, 0, 2}};
    for (auto& sig : sigs)
        for_each_fault(3, sig.M, sig.C, [&](const Fault& f) {
            for_each_pairset(3, f, sig.N, sig.O, [&](const PairSet& ps) {
                Instance inst(3, f, ps);
                json rec{{"instance", to_json(inst)}};
                if (catalog_feasible(inst))
                    rec["covering"] = to_json(catalog_cover(inst));
                else
                    rec["covering"] = nullptr;
                records.push_back(std::move(rec));
                return true;
            });
            return true;
        });
    std::ofstream out(out_file);
    if (!out) throw RangeError("cannot write catalog file");
    out << records.dump(2) << "\n";
    std::cout << json{{"records", records.size()}, {"memoized", catalog_size()}}.dump(2)
              << "\n";
    return kOk;
}

int run_bench() {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(1);
    json out;
    {
        auto t0 = clock::now();
        for (int i = 0; i < 100; ++i) {
            Fault f = random_fault(6, 8, 0, rng);
            cycle_with_neutral_fault(6, f);
        }
        out["cycle_mass8_q6_x100_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
                .count();
    }
    {
        auto t0 = clock::now();
        for (int i = 0; i < 100; ++i) {
            Instance inst = random_instance(6, Signature{4, 2, 0, 2}, rng);
            solve(inst);
        }
        out["solve_4202_q6_x100_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
                .count();
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path coverings with prescribed ends in faulty hypercubes"};
    app.require_subcommand(1);

    InstanceArgs solve_args, verify_args, oracle_args;
    bool trace = false;
    std::string covering_file;

    auto* c_solve = app.add_subcommand("solve", "solve an instance");
    solve_args.add(c_solve);
    c_solve->add_flag("--trace", trace, "emit the build trace");

    auto* c_verify = app.add_subcommand("verify", "check a covering certificate");
    verify_args.add(c_verify);
    c_verify->add_option("--covering", covering_file,
                         "covering JSON (default: standard input)");

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive search verdict");
    oracle_args.add(c_oracle);

    std::string sweep_sig, sweep_mode = "exhaustive";
    int sweep_n = 0, jobs = 1, cx_which = 0, cx_k = 0;
    long long sweep_count = 1000;
    uint64_t seed = 0;
    bool table_csv = false, cx_list = false;
    std::string cx_name, catalog_out = "catalog.json";

    auto* c_sweep = app.add_subcommand("sweep", "sweep a signature at a dimension");
    c_sweep->add_option("--sig", sweep_sig, "'M,C,N,O' or 'm-cycle'")->required();
    c_sweep->add_option("--n", sweep_n, "dimension")->required();
    c_sweep->add_option("--mode", sweep_mode, "exhaustive|sample");
    c_sweep->add_option("--count", sweep_count, "sample count");
    c_sweep->add_option("--seed", seed, "random seed");
    c_sweep->add_option("--jobs", jobs, "worker threads");

    auto* c_table = app.add_subcommand("table", "known-value table");
    c_table->add_flag("--csv", table_csv, "CSV instead of markdown");

    auto* c_cx = app.add_subcommand("counterexample", "infeasibility certificates");
    c_cx->add_flag("--list", cx_list, "list catalog record names");
    c_cx->add_option("--name", cx_name, "catalog record name");
    c_cx->add_option("--conjecture", cx_which, "conjecture family (2, 3 or 4)");
    c_cx->add_option("--k", cx_k, "family parameter");

    auto* c_cat = app.add_subcommand("catalog-rebuild", "regenerate the base catalog");
    c_cat->add_option("--out", catalog_out, "output file");

    app.add_subcommand("bench", "time representative builds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_solve->parsed()) return run_solve(solve_args, trace);
        if (c_verify->parsed()) return run_verify(verify_args, covering_file);
        if (c_oracle->parsed()) return run_oracle(oracle_args);
        if (c_sweep->parsed())
            return run_sweep(sweep_sig, sweep_n, sweep_mode, sweep_count, seed, jobs);
        if (c_table->parsed()) {
            std::cout << (table_csv ? render_table_csv() : render_table_markdown());
            return kOk;
        }
        if (c_cx->parsed()) return run_counterexample(cx_list, cx_name, cx_which, cx_k);
        if (c_cat->parsed()) return run_catalog_rebuild(catalog_out);
        return run_bench();
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
