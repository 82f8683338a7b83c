// ammsim - run static and oracle-tracking AMM pool simulations, write the
// per-step time series as CSV, and evaluate the pointwise trade metrics.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ammsim/csv.hpp"
#include "ammsim/engine.hpp"
#include "ammsim/metrics.hpp"

namespace fs = std::filesystem;
using namespace ammsim;

namespace {

struct CommonFlags {
    std::int64_t steps = 1000;
    std::uint64_t seed = 42;
    double fee = 0.02;
    std::string schedule_spec = "linear:0:10";
    double p_min = 0.01;
    std::string replay_file;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--steps", flags.steps, "Number of time steps")->capture_default_str();
    cmd.add_option("--seed", flags.seed, "Trade-sequence seed")->capture_default_str();
    cmd.add_option("--fee", flags.fee, "Fee rate charged on |delta_x| * pool price")
        ->capture_default_str();
    cmd.add_option("--price-schedule", flags.schedule_spec,
                   "Market price: linear:<p0>:<p1>, constant:<p>, or file:<path>")
        ->capture_default_str();
    cmd.add_option("--p-min", flags.p_min, "Positive floor applied to every market price")
        ->capture_default_str();
    cmd.add_option("--replay-file", flags.replay_file,
                   "Replay trades from file (one signed amount per line); overrides --seed");
}

SimConfig make_config(const CommonFlags& flags) {
    SimConfig cfg;
    cfg.steps = flags.steps;
    cfg.seed = flags.seed;
    cfg.fee_rate = flags.fee;
    cfg.schedule = PriceSchedule::from_spec(flags.schedule_spec, flags.p_min);
    if (!flags.replay_file.empty()) cfg.trades = load_trade_sequence(flags.replay_file);
    return cfg;
}

int run_simulate(const CommonFlags& flags, const std::string& amm, const std::string& out_path) {
    SimConfig cfg = make_config(flags);
    cfg.amm_kind = curve_kind_from_string(amm);
    const RunResult res = run(cfg);
    write_csv(out_path + ".csv", res.records);
    std::cout << summary_text(res.summary);
    std::cout << "wrote " << out_path << ".csv (" << res.records.size() << " rows)\n";
    return 0;
}

int run_compare(const CommonFlags& flags, const std::string& out_dir) {
    SimConfig cfg = make_config(flags);
    fs::create_directories(out_dir);

    if (cfg.trades.empty()) {
        cfg.trades = generate_trade_sequence(cfg.seed, static_cast<std::size_t>(cfg.steps)).draws;
    }
    const fs::path dir(out_dir);
    save_trade_sequence((dir / "trades.txt").string(), cfg.trades);

    std::ofstream summary(dir / "summary.txt");
    if (!summary) throw ConfigError("cannot open summary file in " + out_dir);

    for (const LabeledRun& lr : run_comparison(cfg)) {
        write_csv((dir / (std::string(to_string(lr.kind)) + ".csv")).string(), lr.result.records);
        summary << summary_text(lr.result.summary) << '\n';
        std::cout << summary_text(lr.result.summary) << '\n';
    }
    std::cout << "wrote 4 csv files, trades.txt and summary.txt under " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static and oracle-tracking AMM pool simulator"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    std::string sim_amm;
    std::string sim_out;
    CLI::App* simulate = app.add_subcommand("simulate", "Run one AMM and write <out>.csv");
    simulate->add_option("--amm", sim_amm,
                         "static-sum, static-product, dynamic-sum, or dynamic-product")
        ->required();
    add_common_flags(*simulate, sim_flags);
    simulate->add_option("--out", sim_out, "Output path stem")->required();

    CommonFlags cmp_flags;
    std::string cmp_out;
    CLI::App* compare = app.add_subcommand(
        "compare", "Run all four AMM kinds on one shared trade sequence");
    add_common_flags(*compare, cmp_flags);
    compare->add_option("--out", cmp_out, "Output directory")->required();

    CLI::App* metrics = app.add_subcommand("metrics", "Evaluate pointwise formulas");
    metrics->require_subcommand(1);

    double rho = 1.0;
    CLI::App* dloss = metrics->add_subcommand(
        "divergence-loss", "Constant-product divergence loss at a price ratio");
    dloss->add_option("--rho", rho, "New price / old price")->required();

    double pv_x = 0.0, pv_y = 0.0, pv_price = 0.0;
    CLI::App* pvalue = metrics->add_subcommand("pool-value", "Mark reserves at a price");
    pvalue->add_option("--x", pv_x, "X reserve")->required();
    pvalue->add_option("--y", pv_y, "Y reserve")->required();
    pvalue->add_option("--price", pv_price, "Reference price (Y per X)")->required();

    std::string slip_amm = "static-product";
    double slip_x = 1000.0, slip_y = 1000.0, slip_dx = 0.0;
    CLI::App* slip = metrics->add_subcommand(
        "slippage", "Slippage of one trade against a fresh pool");
    slip->add_option("--amm", slip_amm, "Curve kind")->capture_default_str();
    slip->add_option("--pool-x", slip_x, "X reserve")->capture_default_str();
    slip->add_option("--pool-y", slip_y, "Y reserve")->capture_default_str();
    slip->add_option("--dx", slip_dx, "Signed trade size (positive buys X)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(sim_flags, sim_amm, sim_out);
        if (compare->parsed()) return run_compare(cmp_flags, cmp_out);
        if (dloss->parsed()) {
            std::printf("%.12g\n", divergence_loss_constant_product(rho));
            return 0;
        }
        if (pvalue->parsed()) {
            std::printf("%.12g\n", pool_value(pv_x, pv_y, pv_price));
            return 0;
        }
        if (slip->parsed()) {
            const PoolState pool{slip_x, slip_y};
            const CurveSpec curve = initial_curve(curve_kind_from_string(slip_amm), pool);
            std::printf("%.12g\n", slippage(curve, pool, slip_dx));
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
