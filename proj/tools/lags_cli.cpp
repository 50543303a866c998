// Command-line front end: fit, path, cv, simulate, bench, dantzig.
// All output is byte-deterministic given identical flags and seed.
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lags/baselines.hpp"
#include "lags/core_data.hpp"
#include "lags/errors.hpp"
#include "lags/io.hpp"
#include "lags/lags_core.hpp"
#include "lags/model_selection.hpp"
#include "lags/rng.hpp"
#include "lags/synth_bench.hpp"
#include "lags/weights.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string input;
    std::string response;
    std::string out;     // empty: stdout
    std::string format;  // "json" or "csv"
    std::string weights;  // "", "corr", "ols", "ridge", "uniform"
    double phi = 0.2;
    std::uint64_t seed = 0;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        lags::write_file(out_path, content);
    }
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

json weights_to_json(const Eigen::VectorXd& w) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::isfinite(w(i))) {
            arr.push_back(w(i));
        } else {
            arr.push_back("inf");
        }
    }
    return arr;
}

lags::WeightScheme parse_scheme(const std::string& s) {
    if (s == "corr") return lags::WeightScheme::Correlation;
    if (s == "ols") return lags::WeightScheme::InverseOls;
    if (s == "ridge") return lags::WeightScheme::InverseRidge;
    if (s == "uniform") return lags::WeightScheme::Uniform;
    throw lags::InvalidArgument("unknown weight scheme '" + s + "'");
}

lags::RuleSpec parse_rule(const std::string& s) {
    lags::RuleSpec r;
    if (s == "min") {
        r.rule = lags::SelectionRule::MinError;
    } else if (s == "1se") {
        r.rule = lags::SelectionRule::OneSe;
    } else if (s.rfind("fse:", 0) == 0) {
        r.rule = lags::SelectionRule::FractionSe;
        try {
            r.fraction = std::stod(s.substr(4));
        } catch (const std::exception&) {
            throw lags::InvalidArgument("bad --rule fraction in '" + s + "'");
        }
    } else {
        throw lags::InvalidArgument("unknown --rule '" + s + "' (use min, 1se, or fse:F)");
    }
    return r;
}

// The two problem spaces a fit command can run in.  Without --weights the
// file's columns form the residual system directly (uniform penalties, no
// standardization); with --weights the standardized Gram pipeline is used
// and coefficients are also reported on the original scale.
struct FitProblem {
    bool standardized = false;
    lags::Dataset data;
    lags::GradientSystem sys;          // gradient mode
    lags::StandardizedDesign s;        // standardized mode
    lags::GramCache g;                 // standardized mode
    lags::WeightVector w;
    std::vector<std::string> names;
};

FitProblem load_problem(const CommonOpts& o) {
    FitProblem pr;
    pr.data = lags::load_csv(o.input, o.response);
    pr.names = pr.data.column_names;
    if (o.weights.empty()) {
        pr.standardized = false;
        pr.sys.M = pr.data.X;
        pr.sys.rhs = pr.data.y;
        pr.w = lags::uniform_weights(pr.data.p());
    } else {
        pr.standardized = true;
        pr.s = lags::standardize(pr.data);
        pr.g = lags::gram(pr.s);
        switch (parse_scheme(o.weights)) {
            case lags::WeightScheme::Correlation:
                pr.w = lags::correlation_weights(lags::correlations(pr.s));
                break;
            case lags::WeightScheme::InverseOls:
                pr.w = lags::ols_weights_from_gram(pr.g);
                break;
            case lags::WeightScheme::InverseRidge:
                pr.w = lags::ridge_weights_from_gram(pr.g, o.phi);
                break;
            case lags::WeightScheme::Uniform:
                pr.w = lags::uniform_weights(pr.data.p());
                break;
        }
    }
    return pr;
}

std::vector<double> parse_grid(const std::string& spec, const FitProblem& pr, int default_k) {
    std::vector<double> grid;
    std::string s = spec.empty() ? ("auto:" + std::to_string(default_k)) : spec;
    if (s.rfind("auto:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(s.substr(5));
        } catch (const std::exception&) {
            throw lags::InvalidArgument("bad --lambda-grid '" + s + "'");
        }
        return pr.standardized ? lags::default_lambda_grid(pr.g, pr.w, k)
                               : lags::default_lambda_grid(pr.sys, pr.w, k);
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
        try {
            grid.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw lags::InvalidArgument("bad --lambda-grid entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(grid.begin(), grid.end(), std::greater<double>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

int run_fit(const CommonOpts& o, double lambda, bool dantzig) {
    const FitProblem pr = load_problem(o);
    lags::LagsFit f;
    Eigen::VectorXd full_gradient;
    if (pr.standardized) {
        f = dantzig ? lags::weighted_dantzig(pr.g, lambda, pr.w)
                    : lags::fit(pr.g, lambda, pr.w);
        full_gradient = pr.g.xty - pr.g.C * f.beta;
    } else {
        f = dantzig ? lags::weighted_dantzig(pr.sys, lambda, pr.w)
                    : lags::fit(pr.sys, lambda, pr.w);
        full_gradient = pr.sys.rhs - pr.sys.M * f.beta;
    }

    if (o.format == "csv") {
        std::string out = "variable,coefficient\n";
        for (Eigen::Index j = 0; j < f.beta.size(); ++j) {
            out += pr.names[static_cast<std::size_t>(j)];
            out += ',';
            out += lags::format_double(f.beta(j));
            out += '\n';
        }
        emit(o.out, out);
        return 0;
    }
    json doc;
    doc["mode"] = pr.standardized ? "standardized" : "gradient";
    doc["estimator"] = dantzig ? "dantzig" : "lags";
    doc["lambda"] = lambda;
    doc["beta"] = vector_to_json(f.beta);
    doc["gradient"] = vector_to_json(full_gradient);
    doc["objective"] = f.objective;
    doc["active_set"] = f.active_set;
    doc["iterations"] = f.lp_iterations;
    doc["weights"] = weights_to_json(f.weights);
    doc["variables"] = pr.names;
    if (pr.standardized) {
        const lags::RescaledFit r = lags::destandardize(f.beta, pr.s);
        doc["beta_original_scale"] = vector_to_json(r.beta);
        doc["intercept"] = r.intercept;
    }
    emit(o.out, doc.dump(2) + "\n");
    return 0;
}

int run_path(const CommonOpts& o, const std::string& grid_spec) {
    const FitProblem pr = load_problem(o);
    const std::vector<double> grid = parse_grid(grid_spec, pr, 100);
    const lags::PathResult r = pr.standardized ? lags::fit_path(pr.g, grid, pr.w)
                                               : lags::fit_path(pr.sys, grid, pr.w);
    if (o.format == "json") {
        json doc;
        doc["points"] = json::array();
        for (const auto& pt : r.points) {
            json jp;
            jp["lambda"] = pt.lambda;
            if (pt.fit.has_value()) {
                jp["beta"] = vector_to_json(pt.fit->beta);
                jp["objective"] = pt.fit->objective;
            } else {
                jp["error"] = pt.error;
            }
            doc["points"].push_back(jp);
        }
        doc["segments"] = json::array();
        for (const auto& seg : r.segments) {
            json js;
            js["lambda_high"] = seg.lambda_high;
            js["lambda_low"] = seg.lambda_low;
            js["first_index"] = seg.first_index;
            js["last_index"] = seg.last_index;
            doc["segments"].push_back(js);
        }
        doc["variables"] = pr.names;
        emit(o.out, doc.dump(2) + "\n");
        return 0;
    }
    emit(o.out, lags::emit_path_csv(r, pr.names) + "\n" + lags::emit_segments_csv(r));
    return 0;
}

int run_cv(const CommonOpts& o, const std::string& grid_spec, int k, const std::string& rule_s,
           const std::string& method_s) {
    if (k < 2) throw lags::InvalidArgument("--cv-k must be at least 2");
    const lags::RuleSpec rule = parse_rule(rule_s);
    lags::CvMethod method = lags::CvMethod::Lags;
    if (method_s == "lasso") {
        method = lags::CvMethod::LassoCd;
    } else if (method_s != "lags") {
        throw lags::InvalidArgument("cv --method must be lags or lasso");
    }

    CommonOpts oo = o;
    if (oo.weights.empty()) oo.weights = "ols";
    // The Lasso ignores penalty weights; don't let an irrelevant weight
    // computation fail the command.
    if (method == lags::CvMethod::LassoCd) oo.weights = "uniform";
    const FitProblem pr = load_problem(oo);
    std::vector<double> grid;
    if (method == lags::CvMethod::LassoCd) {
        // Raw-scale Lasso grid from the full-data Gram.
        const double top = static_cast<double>(pr.g.n) *
                           pr.g.xty.lpNorm<Eigen::Infinity>() * (1.0 + 1e-12);
        std::string s = grid_spec.empty() ? "auto:50" : grid_spec;
        if (s.rfind("auto:", 0) == 0) {
            int count = 0;
            try {
                count = std::stoi(s.substr(5));
            } catch (const std::exception&) {
                throw lags::InvalidArgument("bad --lambda-grid '" + s + "'");
            }
            if (count < 1) throw lags::InvalidArgument("grid size must be at least 1");
            for (int i = 0; i < count; ++i) {
                grid.push_back(count == 1 ? top
                                          : top * std::pow(10.0, -4.0 * i / (count - 1)));
            }
        } else {
            grid = parse_grid(s, pr, 50);
        }
    } else {
        grid = parse_grid(grid_spec, pr, 50);
    }

    const lags::CvReport rep = lags::cross_validate(pr.data, k, grid,
                                                    parse_scheme(oo.weights), o.seed, rule,
                                                    method, o.phi);
    if (o.format == "csv") {
        std::string out = "lambda,mean_err,se_err,nonzeros\n";
        for (std::size_t l = 0; l < rep.lambdas.size(); ++l) {
            out += lags::format_double(rep.lambdas[l]);
            out += ',';
            out += lags::format_double(rep.mean_err(static_cast<Eigen::Index>(l)));
            out += ',';
            out += lags::format_double(rep.se_err(static_cast<Eigen::Index>(l)));
            out += ',';
            out += lags::format_double(rep.nonzeros[l]);
            out += '\n';
        }
        out += "\nchosen_lambda\n";
        out += lags::format_double(rep.chosen_lambda);
        out += '\n';
        emit(o.out, out);
        return 0;
    }
    json doc;
    doc["chosen_lambda"] = rep.chosen_lambda;
    doc["lambdas"] = rep.lambdas;
    json me = json::array(), se = json::array();
    for (Eigen::Index l = 0; l < rep.mean_err.size(); ++l) {
        me.push_back(rep.mean_err(l));
        se.push_back(rep.se_err(l));
    }
    doc["mean_err"] = me;
    doc["se_err"] = se;
    doc["nonzeros"] = rep.nonzeros;
    doc["failed_fits"] = rep.failed_fits;
    doc["rule"] = rule_s;
    doc["method"] = method_s;
    doc["folds"] = k;
    emit(o.out, doc.dump(2) + "\n");
    return 0;
}

int run_simulate(const CommonOpts& o, int n, int p, int p0, double rho, double snr) {
    lags::SimDesign d;
    d.n = n;
    d.p = p;
    d.p0 = p0;
    d.rho = rho;
    d.snr = snr;
    d.beta_true = lags::pattern_beta(p, p0);
    d.seed = o.seed;
    const lags::SimData sim = lags::generate(d);
    emit(o.out, lags::emit_dataset_csv(sim.data));
    return 0;
}

int run_bench(const CommonOpts& o, int n, int p, int p0, double rho, double snr, double split,
              int cv_k, int replicates, const std::string& methods_s, const std::string& rule_s,
              int grid_size) {
    if (cv_k < 2) throw lags::InvalidArgument("--cv-k must be at least 2");
    if (replicates < 1) throw lags::InvalidArgument("--replicates must be at least 1");
    std::vector<lags::BenchMethod> methods;
    std::size_t pos = 0;
    while (pos <= methods_s.size()) {
        const std::size_t comma = methods_s.find(',', pos);
        const std::string tok =
            methods_s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok == "lags") {
            methods.push_back(lags::BenchMethod::Lags);
        } else if (tok == "lasso") {
            methods.push_back(lags::BenchMethod::LassoCd);
        } else if (tok == "oracle") {
            methods.push_back(lags::BenchMethod::HardOracle);
        } else {
            throw lags::InvalidArgument("unknown bench method '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    const lags::RuleSpec rule = parse_rule(rule_s);

    std::string csv = lags::bench_csv_header();
    json rows = json::array();
    for (int rep = 0; rep < replicates; ++rep) {
        lags::SimDesign d;
        d.n = n;
        d.p = p;
        d.p0 = p0;
        d.rho = rho;
        d.snr = snr;
        d.beta_true = lags::pattern_beta(p, p0);
        d.seed = lags::Rng::derive(o.seed, static_cast<std::uint64_t>(rep));
        const auto results = lags::run_benchmark(
            d, methods, split, cv_k, lags::Rng::derive(o.seed, 1000 + static_cast<std::uint64_t>(rep)),
            rule, grid_size);
        for (const auto& r : results) {
            csv += lags::bench_csv_row(r, d);
            json jr;
            jr["method"] = r.method;
            jr["seed"] = d.seed;
            jr["nonzeros"] = r.nonzeros;
            jr["train_err"] = r.train_err;
            jr["test_err"] = r.test_err;
            jr["support_recovered"] = r.support_recovered;
            jr["l2_err_sq"] = r.l2_err_sq;
            jr["chosen_lambda"] = r.chosen_lambda;
            rows.push_back(jr);
        }
    }
    if (o.format == "json") {
        emit(o.out, rows.dump(2) + "\n");
    } else {
        emit(o.out, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LAGS: sparse regression by L1 gradient minimization"};
    app.require_subcommand(1);

    CommonOpts o;
    double lambda = 0.0;
    std::string grid_spec;
    std::string rule_s = "fse:0.5";
    std::string method_s = "lags";
    int cv_k = 5;
    int sim_n = 100, sim_p = 10, sim_p0 = 3;
    double sim_rho = 0.0, sim_snr = 2.0, bench_split = 0.25;
    int replicates = 1, grid_size = 50;
    std::string methods_s = "lags,lasso";

    const auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) {
            cmd->add_option("--input", o.input, "input CSV file")->required();
            cmd->add_option("--response", o.response, "response column name")->required();
        }
        cmd->add_option("--out", o.out, "output file (default: stdout)");
        cmd->add_option("--format", o.format, "output format (json or csv)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", o.seed, "random seed");
    };

    CLI::App* fit_cmd = app.add_subcommand("fit", "solve at a single penalty level");
    add_io(fit_cmd, true);
    fit_cmd->add_option("--lambda", lambda, "penalty level")->required();
    fit_cmd->add_option("--weights", o.weights, "penalty weight scheme")
        ->check(CLI::IsMember({"corr", "ols", "ridge", "uniform"}));
    fit_cmd->add_option("--phi", o.phi, "ridge level for --weights ridge");
    fit_cmd->add_option("--method", method_s, "estimator: lags or wds")
        ->check(CLI::IsMember({"lags", "wds"}));

    CLI::App* dantzig_cmd = app.add_subcommand("dantzig", "solve the max-residual variant");
    add_io(dantzig_cmd, true);
    dantzig_cmd->add_option("--lambda", lambda, "penalty level")->required();
    dantzig_cmd->add_option("--weights", o.weights, "penalty weight scheme")
        ->check(CLI::IsMember({"corr", "ols", "ridge", "uniform"}));
    dantzig_cmd->add_option("--phi", o.phi, "ridge level for --weights ridge");

    CLI::App* path_cmd = app.add_subcommand("path", "solve along a penalty grid");
    add_io(path_cmd, true);
    path_cmd->add_option("--lambda-grid", grid_spec, "auto:K or comma-separated values")
        ->required();
    path_cmd->add_option("--weights", o.weights, "penalty weight scheme")
        ->check(CLI::IsMember({"corr", "ols", "ridge", "uniform"}));
    path_cmd->add_option("--phi", o.phi, "ridge level for --weights ridge");

    CLI::App* cv_cmd = app.add_subcommand("cv", "k-fold cross-validation over a grid");
    add_io(cv_cmd, true);
    cv_cmd->add_option("--lambda-grid", grid_spec, "auto:K or comma-separated values");
    cv_cmd->add_option("--cv-k", cv_k, "number of folds");
    cv_cmd->add_option("--weights", o.weights, "penalty weight scheme (default ols)")
        ->check(CLI::IsMember({"corr", "ols", "ridge", "uniform"}));
    cv_cmd->add_option("--phi", o.phi, "ridge level for --weights ridge");
    cv_cmd->add_option("--rule", rule_s, "selection rule: min, 1se, or fse:F");
    cv_cmd->add_option("--method", method_s, "cv target: lags or lasso")
        ->check(CLI::IsMember({"lags", "lasso"}));

    CLI::App* sim_cmd = app.add_subcommand("simulate", "emit a synthetic dataset as CSV");
    add_io(sim_cmd, false);
    sim_cmd->add_option("--n", sim_n, "rows")->required();
    sim_cmd->add_option("--p", sim_p, "predictors")->required();
    sim_cmd->add_option("--p0", sim_p0, "true support size")->required();
    sim_cmd->add_option("--rho", sim_rho, "equicorrelation");
    sim_cmd->add_option("--snr", sim_snr, "signal-to-noise ratio");

    CLI::App* bench_cmd = app.add_subcommand("bench", "synthetic method comparison");
    add_io(bench_cmd, false);
    bench_cmd->add_option("--n", sim_n, "rows (train+test)");
    bench_cmd->add_option("--p", sim_p, "predictors");
    bench_cmd->add_option("--p0", sim_p0, "true support size");
    bench_cmd->add_option("--rho", sim_rho, "equicorrelation");
    bench_cmd->add_option("--snr", sim_snr, "signal-to-noise ratio");
    bench_cmd->add_option("--split", bench_split, "train fraction");
    bench_cmd->add_option("--cv-k", cv_k, "folds for penalty selection");
    bench_cmd->add_option("--replicates", replicates, "independent repetitions");
    bench_cmd->add_option("--methods", methods_s, "comma list: lags,lasso,oracle");
    bench_cmd->add_option("--rule", rule_s, "selection rule: min, 1se, or fse:F");
    bench_cmd->add_option("--grid", grid_size, "penalty grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (o.format.empty()) {
            // Tabular commands default to CSV, single-model commands to JSON.
            o.format = (path_cmd->parsed() || sim_cmd->parsed() || bench_cmd->parsed())
                           ? "csv"
                           : "json";
        }
        if (fit_cmd->parsed()) return run_fit(o, lambda, method_s == "wds");
        if (dantzig_cmd->parsed()) return run_fit(o, lambda, true);
        if (path_cmd->parsed()) return run_path(o, grid_spec);
        if (cv_cmd->parsed()) return run_cv(o, grid_spec, cv_k, rule_s, method_s);
        if (sim_cmd->parsed()) return run_simulate(o, sim_n, sim_p, sim_p0, sim_rho, sim_snr);
        if (bench_cmd->parsed()) {
            return run_bench(o, sim_n, sim_p, sim_p0, sim_rho, sim_snr, bench_split, cv_k,
                             replicates, methods_s, rule_s, grid_size);
        }
        std::fprintf(stderr, "error: no command selected\n");
        return 1;
    } catch (const lags::InvalidArgument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const lags::BadK& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const lags::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const lags::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const lags::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
