#include "cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "qid/analytics.h"
#include "qid/montecarlo.h"
#include "qid/serialize.h"
#include "qid/sym_optimizer.h"

namespace qid::cli {

namespace {

struct RunConfig {
    int d = 2;
    long trials = 100000;
    uint64_t seed = 1;
    double resolution = 0.01;
    std::string mode = "eigen";
    std::string format = "json";
    std::string out_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_hint() {
    if (const char *env = std::getenv("QID_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) {
        throw UsageError("cannot open --out file " + cfg.out_path);
    }
    f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

int cmd_build(const RunConfig &cfg, std::ostream &out) {
    Povm povm = build_povm(QuditDim(cfg.d));
    emit(cfg, out, dump(to_json(povm)));
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.d > Povm::kMaxDenseD) {
        throw UsageError("verify needs dense operators and supports d <= 4; d = 5 is limited to simulate, build "
                         "and optimize");
    }
    VerificationReport r = verify_povm(QuditDim(cfg.d));
    emit(cfg, out, dump(to_json(r)));
    if (!r.ok()) {
        for (const auto &name : r.failed()) {
            err << "verification check failed: " << name << "\n";
        }
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    std::vector<TrialRecord> records;
    const bool csv = cfg.format == "csv";
    ExperimentReport r = run_experiment(QuditDim(cfg.d), cfg.trials, cfg.seed, thread_hint(), csv ? &records : nullptr);
    if (csv) {
        std::ostringstream s;
        write_trials_csv(s, records);
        emit(cfg, out, s.str());
        err << "success_rate=" << r.success_rate << " error_rate=" << r.error_rate
            << " inconclusive_rate=" << r.inconclusive_rate << "\n";
    } else {
        json j = to_json(r);
        j["failed"] = r.errors == 0 ? json::array() : json::array({"unambiguity"});
        emit(cfg, out, dump(j));
    }
    if (r.errors != 0) {
        err << "verification check failed: unambiguity (" << r.errors << " misidentifications)\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_optimize(const RunConfig &cfg, std::ostream &out) {
    SymmetricFamily fam = build_symmetric_family(cfg.d);
    if (cfg.mode == "eigen") {
        emit(cfg, out, dump(to_json(optimal_alpha_eigen(fam), cfg.d)));
        return kExitOk;
    }
    if (cfg.d > 3) {
        throw UsageError("--mode grid supports d <= 3");
    }
    if (!(cfg.resolution > 0 && cfg.resolution <= 0.1)) {
        throw UsageError("--resolution must lie in (0, 0.1]");
    }
    GridOptimum g = brute_force_alpha(fam, cfg.resolution, thread_hint());
    json j = to_json(g, cfg.d, cfg.resolution);
    j["spectrum"] = optimal_alpha_eigen(fam).spectrum;
    emit(cfg, out, dump(j));
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Optimal unambiguous identification of d unknown qudit states", "qid"};
    app.require_subcommand(1);

    auto add_d = [&](CLI::App *sub) { sub->add_option("--d", cfg.d, "Qudit dimension")->check(CLI::Range(2, 5)); };
    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", cfg.out_path, "Write output to this file"); };

    CLI::App *build = app.add_subcommand("build", "Emit the optimal POVM as JSON");
    add_d(build);
    add_out(build);

    CLI::App *verify = app.add_subcommand("verify", "Check the POVM against every invariant (d <= 4)");
    add_d(verify);
    add_out(verify);

    CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo identification experiment");
    add_d(simulate);
    add_out(simulate);
    simulate->add_option("--trials", cfg.trials, "Number of trials");
    simulate->add_option("--seed", cfg.seed, "RNG seed");
    simulate->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    CLI::App *optimize = app.add_subcommand("optimize", "Re-derive the optimal coefficient");
    add_d(optimize);
    add_out(optimize);
    optimize->add_option("--mode", cfg.mode, "eigen or grid")->check(CLI::IsMember({"eigen", "grid"}));
    optimize->add_option("--resolution", cfg.resolution, "Grid spacing for --mode grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*build) {
            return cmd_build(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out, err);
        }
        if (*simulate) {
            return cmd_simulate(cfg, out, err);
        }
        return cmd_optimize(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConsistencyError &e) {
        err << "verification check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace qid::cli
