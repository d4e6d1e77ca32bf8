// Batch front end: dataset ingestion, estimator sweeps, simulation
// campaigns, bootstrap level selection and convergence reports, emitting
// CSV or versioned JSON for external plotting tools.
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evt/asymptotics.hpp"
#include "evt/cluster_ei.hpp"
#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "evt/evi_estimators.hpp"
#include "evt/parallel.hpp"
#include "evt/port.hpp"
#include "evt/reduced_bias.hpp"
#include "evt/resampling.hpp"
#include "evt/rng.hpp"
#include "evt/tail_stats.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitSelection = 4;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits, locale independent.
std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// One numeric value per line; '#' starts a comment; blank lines ignored.
std::vector<double> read_values(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw input_error(path + ": cannot open");
        in = &file;
    }
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r") + 1;
        double v = 0.0;
        const char* first = line.data() + b;
        const char* last = line.data() + e;
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last) {
            throw input_error(path + ":" + std::to_string(lineno) + ": not a number: '" +
                              line.substr(b, e - b) + "'");
        }
        values.push_back(v);
    }
    if (values.size() < 2) {
        throw input_error(path + ": need at least 2 values, got " + std::to_string(values.size()));
    }
    return values;
}

struct KRange {
    std::size_t lo = 0, hi = 0, step = 1;  // lo == 0 means "default sweep"
};

KRange parse_krange(const std::string& spec) {
    if (spec.empty()) return {};
    KRange r;
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto colon = spec.find(':', pos);
        const std::string tok = spec.substr(pos, colon == std::string::npos ? colon : colon - pos);
        std::size_t v = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
            throw input_error("bad --k range '" + spec + "' (use K or a:b:step)");
        }
        parts.push_back(v);
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() == 1) {
        r.lo = r.hi = parts[0];
    } else if (parts.size() == 2) {
        r.lo = parts[0];
        r.hi = parts[1];
    } else if (parts.size() == 3) {
        r.lo = parts[0];
        r.hi = parts[1];
        r.step = parts[2];
    } else {
        throw input_error("bad --k range '" + spec + "'");
    }
    if (r.lo == 0 || r.hi < r.lo || r.step == 0) {
        throw input_error("bad --k range '" + spec + "'");
    }
    return r;
}

std::vector<std::size_t> expand_ks(KRange r, std::size_t n) {
    if (r.lo == 0) {  // default sweep 2 : n/2 : 1
        r.lo = 2;
        r.hi = std::max<std::size_t>(2, n / 2);
        r.step = 1;
    }
    std::vector<std::size_t> ks;
    for (std::size_t k = r.lo; k <= r.hi && k < n; k += r.step) ks.push_back(k);
    if (ks.empty()) throw input_error("--k range selects no levels below n");
    return ks;
}

// Tabular emitter: one header, rows of cells, CSV or rows-of-objects JSON.
class Table {
  public:
    Table(std::string command, std::vector<std::string> columns)
        : command_(std::move(command)), columns_(std::move(columns)) {}

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void emit(const std::string& format) const {
        if (format == "json") {
            json doc;
            doc["schema"] = 1;
            doc["command"] = command_;
            json rows = json::array();
            for (const auto& r : rows_) {
                json obj;
                for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = r[i];
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            std::cout << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
        }
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::cout << r[i] << (i + 1 < r.size() ? "," : "\n");
            }
        }
    }

  private:
    std::string command_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

evt::EviEstimate run_method(const evt::OrderedSample& sample, const std::string& method,
                            std::size_t k, double p) {
    if (method == "hill") return evt::hill(sample, {k});
    if (method == "moment") return evt::moment(sample, {k});
    if (method == "mm") return evt::mixed_moment(sample, {k});
    if (method == "mop") return evt::mean_order_p_evi(sample, {k}, p);
    if (method == "pme") return evt::power_mean_evi(sample, {k}, p);
    throw input_error("unknown method '" + method + "'");
}

double quantile_type7(std::vector<double> sorted, double q) {
    if (sorted.empty()) return std::nan("");
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto i = static_cast<std::size_t>(h);
    if (i + 1 >= sorted.size()) return sorted.back();
    return sorted[i] + (h - i) * (sorted[i + 1] - sorted[i]);
}

// ---- estimate ----------------------------------------------------------

struct EstimateArgs {
    std::string input, method = "hill", krange, format = "csv";
    double p = 0.0;
    bool with_mvrb = false;
};

int cmd_estimate(const EstimateArgs& a) {
    const evt::OrderedSample sample(read_values(a.input), a.input);
    const auto ks = expand_ks(parse_krange(a.krange), sample.size());
    std::optional<evt::SecondOrderEstimate> so;
    if (a.with_mvrb) so = evt::estimate_second_order(sample);
    Table table("estimate", {"k", "method", "estimate"});
    for (std::size_t k : ks) {
        const auto est = run_method(sample, a.method, k, a.p);
        table.row({std::to_string(k), a.method, fmt(est.value)});
        if (so) {
            const auto corrected = evt::mvrb_hill(sample, {k}, *so);
            table.row({std::to_string(k), "mvrb", fmt(corrected.value)});
        }
    }
    table.emit(a.format);
    return kExitOk;
}

// ---- port --------------------------------------------------------------

struct PortArgs {
    std::string input, method = "hill", krange, format = "csv";
    double s = 0.1;
};

int cmd_port(const PortArgs& a) {
    const evt::OrderedSample sample(read_values(a.input), a.input);
    evt::PortBase base;
    if (a.method == "hill") base = evt::PortBase::Hill;
    else if (a.method == "moment") base = evt::PortBase::Moment;
    else if (a.method == "mm") base = evt::PortBase::MixedMoment;
    else throw input_error("unknown PORT base '" + a.method + "'");
    const evt::PortConfig cfg{a.s};
    const auto excess_count = sample.size() - cfg.n_s(sample.size());
    const auto ks = expand_ks(parse_krange(a.krange), excess_count);
    Table table("port", {"k", "method", "s", "estimate"});
    for (std::size_t k : ks) {
        const auto est = evt::port_evi(sample, cfg, {k}, base);
        table.row({std::to_string(k), evt::method_name(est.method), fmt(a.s), fmt(est.value)});
    }
    table.emit(a.format);
    return kExitOk;
}

// ---- bootstrap-k -------------------------------------------------------

struct BootstrapArgs {
    std::string input, estimator = "hill", format = "csv";
    double p = 0.0;
    std::size_t B = 250, n1 = 0, n2 = 0;
    std::uint64_t seed = 0;
    bool diagnostics = false;
};

int cmd_bootstrap(const BootstrapArgs& a) {
    const evt::OrderedSample sample(read_values(a.input), a.input);
    evt::BootstrapEstimator est;
    if (a.estimator == "hill") est = evt::BootstrapEstimator::Hill;
    else if (a.estimator == "mop") est = evt::BootstrapEstimator::MeanOrderP;
    else if (a.estimator == "mvrb") est = evt::BootstrapEstimator::Mvrb;
    else throw input_error("unknown bootstrap estimator '" + a.estimator + "'");
    const evt::BootstrapPlan plan{a.n1, a.n2, a.B, a.seed};
    const auto result = evt::bootstrap_osf(sample, est, plan, a.p);

    Table table("bootstrap-k",
                {"k_hat", "k1_star", "k2_star", "c_rho", "rho_hat", "estimate_at_k_hat"});
    const double at_k_hat = evt::hill(sample, {result.k_hat}).value;
    table.row({std::to_string(result.k_hat), std::to_string(result.k1_star),
               std::to_string(result.k2_star), fmt(result.c_rho), fmt(result.rho_hat),
               fmt(at_k_hat)});
    table.emit(a.format);
    if (a.diagnostics) {
        Table curves("bootstrap-k-diagnostics", {"k", "mse_n1", "mse_n2"});
        const std::size_t m = std::max(result.mse_n1.size(), result.mse_n2.size());
        for (std::size_t k = 2; k < m; ++k) {
            const double m1 = k < result.mse_n1.size() ? result.mse_n1[k] : std::nan("");
            const double m2 = k < result.mse_n2.size() ? result.mse_n2[k] : std::nan("");
            if (std::isnan(m1) && std::isnan(m2)) continue;
            curves.row({std::to_string(k), fmt(m1), fmt(m2)});
        }
        curves.emit(a.format);
    }
    return kExitOk;
}

// ---- simulate ----------------------------------------------------------

struct SimulateArgs {
    std::string model = "gev", methods = "hill", krange, format = "csv";
    double xi = 0.0, loc = 0.0, scale = 1.0;          // gev
    double beta = 1.0, rho = -1.0, C = 1.0;           // hall-welsh
    double alpha = 0.5;                               // armax
    double p = 0.0;
    std::size_t n = 1000, reps = 1;
    std::uint64_t seed = 0;
    bool raw = false;
};

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

int cmd_simulate(const SimulateArgs& a) {
    if (a.model == "armax") {
        if (!a.raw) throw input_error("armax simulation is raw-only (use --raw)");
        const auto series = evt::armax_sample(a.alpha, a.n, a.seed);
        for (double v : series) std::cout << fmt(v) << "\n";
        return kExitOk;
    }

    std::optional<evt::GevParams> gev;
    std::optional<evt::HallWelshModel> hw;
    double true_shape;
    if (a.model == "gev") {
        gev = evt::GevParams(a.xi, a.loc, a.scale);
        true_shape = a.xi;
    } else if (a.model == "hall-welsh") {
        hw = evt::HallWelshModel(a.xi, a.beta, a.rho, a.C);
        true_shape = a.xi;
    } else {
        throw input_error("unknown model '" + a.model + "'");
    }
    auto draw = [&](std::uint64_t seed) {
        return gev ? evt::gev_sample(*gev, a.n, seed) : hw->sample(a.n, seed);
    };

    if (a.raw) {
        if (a.reps != 1) throw input_error("--raw needs --reps 1");
        const auto sample = draw(a.seed);
        for (double v : sample.values()) std::cout << fmt(v) << "\n";
        return kExitOk;
    }

    const auto methods = split_csv_list(a.methods);
    if (methods.empty()) throw input_error("no methods given");
    const auto ks = expand_ks(parse_krange(a.krange), a.n);

    // paths[r][m][j]: estimate of methods[m] at ks[j] in replicate r (NaN when
    // the estimator was undefined there); filled in parallel, reduced in order.
    std::vector<std::vector<std::vector<double>>> paths(
        a.reps, std::vector<std::vector<double>>(methods.size(),
                                                 std::vector<double>(ks.size(), std::nan(""))));
    evt::parallel_for(a.reps, [&](std::size_t r) {
        const auto sample = draw(evt::derive_seed(a.seed, 1, r));
        std::optional<evt::SecondOrderEstimate> so;
        for (std::size_t m = 0; m < methods.size(); ++m) {
            for (std::size_t j = 0; j < ks.size(); ++j) {
                try {
                    if (methods[m] == "mvrb") {
                        if (!so) so = evt::estimate_second_order(sample);
                        paths[r][m][j] = evt::mvrb_hill(sample, {ks[j]}, *so).value;
                    } else {
                        paths[r][m][j] = run_method(sample, methods[m], ks[j], a.p).value;
                    }
                } catch (const evt::domain_error&) {
                } catch (const evt::estimation_failure&) {
                }
            }
        }
    });

    std::vector<std::string> cols{"k"};
    for (const auto& m : methods) {
        cols.push_back(m + "_median");
        cols.push_back(m + "_q25");
        cols.push_back(m + "_q75");
        cols.push_back(m + "_mse");
        cols.push_back(m + "_defined");
    }
    Table table("simulate", cols);
    for (std::size_t j = 0; j < ks.size(); ++j) {
        std::vector<std::string> cells{std::to_string(ks[j])};
        for (std::size_t m = 0; m < methods.size(); ++m) {
            std::vector<double> vals;
            double sq = 0.0;
            for (std::size_t r = 0; r < a.reps; ++r) {
                const double v = paths[r][m][j];
                if (std::isnan(v)) continue;
                vals.push_back(v);
                sq += (v - true_shape) * (v - true_shape);
            }
            std::sort(vals.begin(), vals.end());
            const double cnt = static_cast<double>(vals.size());
            cells.push_back(fmt(quantile_type7(vals, 0.5)));
            cells.push_back(fmt(quantile_type7(vals, 0.25)));
            cells.push_back(fmt(quantile_type7(vals, 0.75)));
            cells.push_back(fmt(vals.empty() ? std::nan("") : sq / cnt));
            cells.push_back(std::to_string(vals.size()));
        }
        table.row(std::move(cells));
    }
    table.emit(a.format);
    return kExitOk;
}

// ---- ei ----------------------------------------------------------------

struct EiArgs {
    std::string input, format = "csv";
    std::size_t block_len = 0;  // 0 -> floor(sqrt(n))
    double threshold = std::nan("");
    double threshold_quantile = std::nan("");
};

int cmd_ei(const EiArgs& a) {
    // time-ordered input: do not sort
    const auto series = read_values(a.input);
    const std::size_t n = series.size();
    const std::size_t block = a.block_len ? a.block_len
                                          : static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    double threshold;
    if (!std::isnan(a.threshold)) {
        threshold = a.threshold;
    } else {
        const double q = std::isnan(a.threshold_quantile) ? 0.95 : a.threshold_quantile;
        if (!(q > 0.0) || !(q < 1.0)) throw input_error("--threshold-quantile must lie in (0,1)");
        std::vector<double> sorted(series);
        std::sort(sorted.begin(), sorted.end());
        threshold = quantile_type7(std::move(sorted), q);
    }
    const auto est = evt::blocks_ei(series, block, threshold);
    Table table("ei", {"theta_hat", "block_len", "threshold", "exceedances"});
    table.row({fmt(est.theta_hat), std::to_string(est.block_len), fmt(est.threshold),
               std::to_string(est.exceedance_count)});
    table.emit(a.format);
    return kExitOk;
}

// ---- converge ----------------------------------------------------------

struct ConvergeArgs {
    std::string model = "normal", ns = "100,1000", format = "csv";
    double alpha = 1.0;
};

int cmd_converge(const ConvergeArgs& a) {
    evt::ConvergenceModel model{};
    if (a.model == "normal") model.family = evt::ModelFamily::Normal;
    else if (a.model == "exponential") model.family = evt::ModelFamily::Exponential;
    else if (a.model == "uniform") model.family = evt::ModelFamily::Uniform;
    else if (a.model == "frechet") model.family = evt::ModelFamily::Frechet;
    else throw input_error("unknown model '" + a.model + "'");
    model.alpha = a.alpha;

    Table table("converge",
                {"n", "a_n", "b_n", "ultimate_distance", "penultimate_distance", "penultimate_shape"});
    for (const auto& tok : split_csv_list(a.ns)) {
        std::size_t n = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (res.ec != std::errc() || n < 2) throw input_error("bad --n entry '" + tok + "'");
        const auto rep = evt::penultimate_fit(model, n);
        table.row({std::to_string(rep.n), fmt(rep.constants.a_n), fmt(rep.constants.b_n),
                   fmt(rep.sup_distance_ultimate), fmt(rep.sup_distance_penultimate),
                   fmt(rep.penultimate_shape)});
    }
    table.emit(a.format);
    return kExitOk;
}

// ---- choose-model ------------------------------------------------------

struct ChooseArgs {
    std::string input, format = "csv";
};

int cmd_choose(const ChooseArgs& a) {
    const evt::OrderedSample sample(read_values(a.input), a.input);
    Table table("choose-model", {"n", "gumbel_w"});
    table.row({std::to_string(sample.size()), fmt(evt::gumbel_statistic(sample))});
    table.emit(a.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-parametric tail analysis: estimator sweeps, PORT variants, bootstrap\n"
                 "level selection, simulation campaigns, clustering and convergence reports."};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 2 input/configuration error, 3 numeric-domain error,\n"
               "4 selection failure.\n"
               "Input files: one value per line, '#' comments, '-' reads stdin.\n"
               "Environment: EVT_THREADS (worker count), EVT_KERNELS=scalar (reference kernels).");

    EstimateArgs est;
    auto* c_est = app.add_subcommand("estimate", "Tail-shape estimates over a sweep of levels k");
    c_est->add_option("--input", est.input, "Data file ('-' for stdin)")->required();
    c_est->add_option("--method", est.method, "hill|moment|mm|mop|pme")
        ->check(CLI::IsMember({"hill", "moment", "mm", "mop", "pme"}));
    c_est->add_option("--p", est.p, "Order p for mop/pme");
    c_est->add_option("--k", est.krange, "Level K or range a:b:step (default 2:n/2:1)");
    c_est->add_flag("--with-mvrb", est.with_mvrb, "Also emit the bias-corrected companion");
    c_est->add_option("--format", est.format)->check(CLI::IsMember({"csv", "json"}));

    PortArgs port;
    auto* c_port = app.add_subcommand("port", "Location-invariant estimates from excesses over an empirical quantile");
    c_port->add_option("--input", port.input)->required();
    c_port->add_option("--method", port.method, "hill|moment|mm")
        ->check(CLI::IsMember({"hill", "moment", "mm"}));
    c_port->add_option("--s", port.s, "Quantile level in [0,1) (default 0.1)");
    c_port->add_option("--k", port.krange, "Level K or range a:b:step");
    c_port->add_option("--format", port.format)->check(CLI::IsMember({"csv", "json"}));

    BootstrapArgs boot;
    auto* c_boot = app.add_subcommand("bootstrap-k", "Double-bootstrap selection of the level k");
    c_boot->add_option("--input", boot.input)->required();
    c_boot->add_option("--estimator", boot.estimator, "hill|mop|mvrb")
        ->check(CLI::IsMember({"hill", "mop", "mvrb"}));
    c_boot->add_option("--p", boot.p, "Order p for mop");
    c_boot->add_option("--B", boot.B, "Bootstrap replicates (default 250)");
    c_boot->add_option("--n1", boot.n1, "First sub-sample size (default n^0.955)");
    c_boot->add_option("--n2", boot.n2, "Second sub-sample size (default n1^2/n)");
    c_boot->add_option("--seed", boot.seed, "RNG seed (required)")->required();
    c_boot->add_flag("--diagnostics", boot.diagnostics, "Also emit the bootstrap MSE curves");
    c_boot->add_option("--format", boot.format)->check(CLI::IsMember({"csv", "json"}));

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "Simulation campaigns (or raw sample emission)");
    c_sim->add_option("--model", sim.model, "gev|hall-welsh|armax")
        ->check(CLI::IsMember({"gev", "hall-welsh", "armax"}));
    c_sim->add_option("--xi", sim.xi, "Shape");
    c_sim->add_option("--loc", sim.loc, "Location (gev)");
    c_sim->add_option("--scale", sim.scale, "Scale (gev)");
    c_sim->add_option("--beta", sim.beta, "Second-order scale (hall-welsh)");
    c_sim->add_option("--rho", sim.rho, "Second-order shape (hall-welsh)");
    c_sim->add_option("--C", sim.C, "Leading scale (hall-welsh)");
    c_sim->add_option("--alpha", sim.alpha, "Dependence parameter (armax)");
    c_sim->add_option("--n", sim.n, "Sample size")->required();
    c_sim->add_option("--seed", sim.seed, "RNG seed (required)")->required();
    c_sim->add_option("--reps", sim.reps, "Campaign replicates (default 1)");
    c_sim->add_flag("--raw", sim.raw, "Emit one sample, one value per line");
    c_sim->add_option("--methods", sim.methods, "Comma list: hill,mvrb,moment,mm,mop,pme");
    c_sim->add_option("--p", sim.p, "Order p for mop/pme");
    c_sim->add_option("--k", sim.krange, "Level K or range a:b:step");
    c_sim->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}));

    EiArgs ei;
    auto* c_ei = app.add_subcommand("ei", "Clustering index of a time-ordered series (blocks estimator)");
    c_ei->add_option("--input", ei.input, "Time-ordered data file")->required();
    c_ei->add_option("--block-len", ei.block_len, "Block length (default floor(sqrt(n)))");
    c_ei->add_option("--threshold", ei.threshold, "Absolute threshold");
    c_ei->add_option("--threshold-quantile", ei.threshold_quantile,
                     "Empirical quantile threshold (default 0.95)");
    c_ei->add_option("--format", ei.format)->check(CLI::IsMember({"csv", "json"}));

    ConvergeArgs conv;
    auto* c_conv = app.add_subcommand("converge", "Finite-n distance to the limit law and its penultimate fit");
    c_conv->add_option("--model", conv.model, "normal|exponential|uniform|frechet")
        ->check(CLI::IsMember({"normal", "exponential", "uniform", "frechet"}));
    c_conv->add_option("--alpha", conv.alpha, "Tail exponent (frechet)");
    c_conv->add_option("--n", conv.ns, "Comma list of sample sizes (default 100,1000)");
    c_conv->add_option("--format", conv.format)->check(CLI::IsMember({"csv", "json"}));

    ChooseArgs choose;
    auto* c_choose = app.add_subcommand("choose-model", "Range-ratio statistic for choosing among the three types");
    c_choose->add_option("--input", choose.input)->required();
    c_choose->add_option("--format", choose.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c_est) return cmd_estimate(est);
        if (*c_port) return cmd_port(port);
        if (*c_boot) return cmd_bootstrap(boot);
        if (*c_sim) return cmd_simulate(sim);
        if (*c_ei) return cmd_ei(ei);
        if (*c_conv) return cmd_converge(conv);
        if (*c_choose) return cmd_choose(choose);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const evt::selection_failure& e) {
        std::cerr << "error: " << e.what() << "\n" << e.diagnostics << "\n";
        return kExitSelection;
    } catch (const evt::estimation_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitInput;
}
