// fractorus CLI — reproducible batch front end over the library.
//
// Subcommands: apply, kernel-table, limits, extension, regularity, selftest.
// Every report embeds the resolved configuration and the library version and
// contains no timestamps, so identical invocations produce identical bytes.
//
// Exit codes: 0 success; 1 acceptance/monotonicity failure; 2 invalid
// configuration; 3 numerical failure (diagnostic JSON on stdout).
#include <array>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fractorus/acceptance.hpp"
#include "fractorus/builtins.hpp"
#include "fractorus/errors.hpp"
#include "fractorus/extension.hpp"
#include "fractorus/fields.hpp"
#include "fractorus/io.hpp"
#include "fractorus/kernels.hpp"
#include "fractorus/pointwise.hpp"
#include "fractorus/regularity.hpp"
#include "fractorus/special.hpp"
#include "fractorus/spectral.hpp"
#include "fractorus/version.hpp"

namespace {

using nlohmann::json;
using namespace fractorus;

struct FieldOpts {
    int dim = 1;
    int m = 64;
    std::string name = "cos2x";
    std::string input;  // CSV path; takes precedence over the builtin name
};

void add_field_opts(CLI::App* cmd, FieldOpts& o) {
    cmd->add_option("--dim", o.dim, "torus dimension (1-3)")->capture_default_str();
    cmd->add_option("--m", o.m, "grid points per axis (even, >= 4)")->capture_default_str();
    cmd->add_option("--f", o.name, "builtin input field (const, cosx, cos2x, ..., cos_x1_cos_x2, gauss:<w>)")
        ->capture_default_str();
    cmd->add_option("--input", o.input, "read the input field from a CSV file instead of --f");
}

GridField load_field(const FieldOpts& o) {
    if (!o.input.empty()) return read_field_csv(o.input);
    GridSpec spec{o.dim, o.m};
    spec.validate();
    return builtin_field(o.name, spec);
}

json field_opts_json(const FieldOpts& o, const GridField& f) {
    json j{{"dim", f.spec.dim}, {"m", f.spec.m}};
    if (!o.input.empty())
        j["input"] = o.input;
    else
        j["f"] = o.name;
    return j;
}

struct OutOpts {
    std::string format = "json";
    std::string output = "-";
};

void add_out_opts(CLI::App* cmd, OutOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", o.output, "output path ('-' = stdout)")
        ->capture_default_str();
}

void emit(const OutOpts& o, const std::string& text) {
    if (o.output == "-")
        std::cout << text;
    else
        write_text_file(o.output, text);
}

struct PvOpts {
    double delta = 0.0;
    int taylor_order = 2;
    double tol = 1e-8;
};

void add_pv_opts(CLI::App* cmd, PvOpts& o) {
    cmd->add_option("--delta", o.delta, "excluded-box half-width (0 = derive from --tol)")
        ->capture_default_str();
    cmd->add_option("--taylor-order", o.taylor_order, "local correction order (1 or 2)")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "pointwise-route error-budget target")
        ->capture_default_str();
}

PVConfig make_pv(const PvOpts& o) {
    PVConfig cfg;
    cfg.delta = o.delta;
    cfg.taylor_order = o.taylor_order;
    cfg.tol = o.tol;
    cfg.validate();
    return cfg;
}

json pv_json(const PvOpts& o) {
    return json{{"delta", o.delta}, {"taylor_order", o.taylor_order}, {"tol", o.tol}};
}

double sup_diff(const GridField& a, const GridField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

// ---------------------------------------------------------------- apply ----
int run_apply(const FieldOpts& fo, const OutOpts& oo, const PvOpts& po, double sigma,
              const std::string& route) {
    const GridField f = load_field(fo);
    const PVConfig pv = make_pv(po);

    json config = field_opts_json(fo, f);
    config["sigma"] = sigma;
    config["route"] = route;
    config["pv"] = pv_json(po);
    config["format"] = oo.format;

    if (route == "all") {
        std::vector<Route> routes{Route::spectral, Route::pointwise, Route::heat_integral};
        if (f.spec.dim == 1) routes.push_back(Route::poisson_1d);

        std::vector<PointwiseFieldResult> results;
        for (Route r : routes) results.push_back(apply_route(f, sigma, r, pv));

        double max_disc = 0.0;
        for (std::size_t i = 0; i < results.size(); ++i)
            for (std::size_t j = i + 1; j < results.size(); ++j)
                max_disc = std::max(max_disc, sup_diff(results[i].values, results[j].values));

        if (oo.format == "csv") {
            std::string csv = "route,sup_diff_vs_spectral,est_error\n";
            for (std::size_t i = 0; i < routes.size(); ++i) {
                char row[160];
                std::snprintf(row, sizeof row, "%s,%.17g,%.17g\n",
                              route_name(routes[i]).c_str(),
                              sup_diff(results[i].values, results[0].values),
                              results[i].est_error);
                csv += row;
            }
            emit(oo, csv);
            return 0;
        }
        json routes_j = json::array();
        for (std::size_t i = 0; i < routes.size(); ++i) {
            json rj{{"route", route_name(routes[i])},
                    {"sup_diff_vs_spectral", sup_diff(results[i].values, results[0].values)},
                    {"est_error", results[i].est_error}};
            if (routes[i] == Route::pointwise) {
                rj["delta"] = results[i].delta;
                rj["node_count"] = results[i].node_count;
            }
            routes_j.push_back(rj);
        }
        json rep{{"version", kVersion},     {"command", "apply"},
                 {"config", config},        {"routes", routes_j},
                 {"max_route_discrepancy", max_disc},
                 {"field", field_to_json(results[0].values)}};
        emit(oo, rep.dump(2) + "\n");
        return 0;
    }

    const PointwiseFieldResult r = apply_route(f, sigma, route_from_string(route), pv);
    if (oo.format == "csv") {
        emit(oo, field_to_csv(r.values));
        return 0;
    }
    json rep{{"version", kVersion}, {"command", "apply"}, {"config", config},
             {"est_error", r.est_error}, {"field", field_to_json(r.values)}};
    if (route == "pointwise") {
        rep["delta"] = r.delta;
        rep["node_count"] = r.node_count;
    }
    emit(oo, rep.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------- kernel-table ----
int run_kernel_table(const OutOpts& oo, const std::string& kernel, int dim, double sigma,
                     double t, double x_min, double x_max, int x_count) {
    if (x_count < 1) throw InputError("kernel-table: x-count must be >= 1");
    if (!(x_min <= x_max)) throw InputError("kernel-table: need x-min <= x-max");
    const bool needs_sigma =
        kernel == "riesz" || kernel == "riesz-heat" || kernel == "riesz-poisson";
    const bool one_d = kernel == "riesz-poisson" || kernel == "poisson" ||
                       kernel == "poisson-difference";
    if (one_d && dim != 1) throw InputError("kernel-table: '" + kernel + "' is 1D only");

    std::vector<std::string> columns{"x"};
    columns.push_back(needs_sigma ? "sigma" : "t");
    columns.push_back("value");
    columns.push_back("est_error");

    const KernelConfig kcfg;
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < x_count; ++i) {
        const double x =
            x_count == 1 ? x_min : x_min + (x_max - x_min) * i / (x_count - 1.0);
        const std::array<double, 3> p{x, 0.0, 0.0};
        KernelValue kv{};
        if (kernel == "riesz")
            kv = riesz_kernel(p, dim, sigma, kcfg);
        else if (kernel == "riesz-heat")
            kv = riesz_kernel_heat(p, dim, sigma, kcfg);
        else if (kernel == "riesz-poisson")
            kv = riesz_kernel_poisson(x, sigma, kcfg);
        else if (kernel == "heat")
            kv = heat_kernel(p, dim, t, kcfg);
        else if (kernel == "poisson")
            kv = KernelValue{poisson_kernel_1d(x, t), 0.0};
        else if (kernel == "poisson-difference")
            kv = KernelValue{poisson_difference_kernel_1d(x, t), 0.0};
        else
            throw InputError("kernel-table: unknown kernel '" + kernel + "'");
        rows.push_back({x, needs_sigma ? sigma : t, kv.value, kv.est_error});
    }

    if (oo.format == "csv") {
        emit(oo, table_to_csv(columns, rows));
        return 0;
    }
    json config{{"kernel", kernel}, {"dim", dim},     {"x_min", x_min},
                {"x_max", x_max},   {"x_count", x_count}};
    if (needs_sigma)
        config["sigma"] = sigma;
    else
        config["t"] = t;
    json rep{{"version", kVersion}, {"command", "kernel-table"}, {"config", config},
             {"columns", columns},  {"rows", rows}};
    emit(oo, rep.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- limits ----
int run_limits(const FieldOpts& fo, const OutOpts& oo, const PvOpts& po,
               const std::string& target, std::vector<double> sigmas, bool include_above) {
    const GridField f = load_field(fo);
    const PVConfig pv = make_pv(po);
    if (sigmas.empty()) {
        if (target == "zero")
            sigmas = {0.9, 0.7, 0.5, 0.3, 0.1};
        else
            sigmas = include_above ? std::vector<double>{1.2, 1.5, 1.8, 1.95, 2.05, 2.2, 2.5}
                                   : std::vector<double>{1.2, 1.5, 1.8, 1.95};
    }

    LimitScanReport rep;
    if (target == "zero")
        rep = limit_zero_scan(f, sigmas, pv);
    else if (target == "two")
        rep = limit_two_scan(f, sigmas, include_above, pv);
    else
        throw InputError("limits: target must be 'zero' or 'two'");

    if (oo.format == "csv") {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < rep.sigmas.size(); ++i)
            rows.push_back({rep.sigmas[i], rep.sup_errors[i]});
        emit(oo, table_to_csv({"sigma", "sup_error"}, rows));
    } else {
        json config = field_opts_json(fo, f);
        config["target"] = target;
        config["sigmas"] = sigmas;
        config["include_above"] = include_above;
        config["pv"] = pv_json(po);
        json out{{"version", kVersion}, {"command", "limits"}, {"config", config},
                 {"report", limit_scan_to_json(rep)}};
        emit(oo, out.dump(2) + "\n");
    }
    return rep.monotone ? 0 : 1;
}

// ------------------------------------------------------------- extension ----
int run_extension(const FieldOpts& fo, const OutOpts& oo, double gamma, double y_min,
                  double y_max, int y_count, double residual_y) {
    const GridField f = load_field(fo);
    if (y_count < 2) throw InputError("extension: y-count must be >= 2");
    if (!(0 < y_min && y_min < y_max)) throw InputError("extension: need 0 < y-min < y-max");
    std::vector<double> y_grid(y_count);
    const double step = std::log(y_max / y_min) / (y_count - 1);
    for (int i = 0; i < y_count; ++i) y_grid[i] = y_min * std::exp(step * i);
    y_grid.back() = y_max;

    const FourierField F = to_fourier(f);
    const ExtensionSlice slice = extension_solve(F, gamma, y_grid);
    const TraceReport trace = neumann_trace(slice);
    const double residual = pde_residual(slice, residual_y);

    if (oo.format == "csv") {
        std::vector<std::vector<double>> rows;
        for (std::size_t j = 0; j < slice.y_grid.size(); ++j)
            rows.push_back({slice.y_grid[j], trace.trace_sup_seq[j]});
        emit(oo, table_to_csv({"y", "trace_sup_error"}, rows));
        return 0;
    }

    json config = field_opts_json(fo, f);
    config["gamma"] = gamma;
    config["y_min"] = y_min;
    config["y_max"] = y_max;
    config["y_count"] = y_count;
    config["residual_y"] = residual_y;
    json rep{{"version", kVersion},  {"command", "extension"}, {"config", config},
             {"trace", trace_report_to_json(trace)}, {"pde_residual", residual}};
    if (gamma < 1.0) {
        const double l2 = l2_trace_limit(slice);
        rep["l2_trace_limit"] = l2;
        rep["l2_trace_reference"] = std::abs(mu_gamma(gamma)) *
                                    std::pow(2.0 * kPi, 0.5 * F.dim) *
                                    sobolev_norm(F, 2.0 * gamma);
    }
    emit(oo, rep.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------ regularity ----
int run_regularity(const FieldOpts& fo, const OutOpts& oo, const std::string& kind,
                   double beta, int k, double alpha, int l, double sigma, int nu_max) {
    json config{{"kind", kind}};
    config["format"] = oo.format;

    if (kind == "family") {
        // Single-mode family scan: heat-route seminorm and transfer ratio.
        if (nu_max < 1) throw InputError("regularity: nu-max must be >= 1");
        std::vector<std::vector<double>> rows;
        const GridSpec spec{1, std::max(4 * nu_max, 8)};
        for (int nu = 1; nu <= nu_max; ++nu) {
            const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec);
            const double value = heat_lambda_seminorm(f, beta).value;
            const double ratio = transfer_ratio(f, sigma, beta);
            rows.push_back({static_cast<double>(nu), beta, sigma, value, ratio});
        }
        const std::vector<std::string> columns{"family_member", "beta", "sigma", "value",
                                               "ratio"};
        if (oo.format == "csv") {
            emit(oo, table_to_csv(columns, rows));
        } else {
            config["beta"] = beta;
            config["sigma"] = sigma;
            config["nu_max"] = nu_max;
            json rep{{"version", kVersion}, {"command", "regularity"}, {"config", config},
                     {"columns", columns},  {"rows", rows}};
            emit(oo, rep.dump(2) + "\n");
        }
        return 0;
    }

    const GridField f = load_field(fo);
    config.update(field_opts_json(fo, f));

    SeminormReport rep;
    if (kind == "holder") {
        rep = holder_seminorm(f, k, alpha);
        config["k"] = k;
        config["alpha"] = alpha;
    } else if (kind == "zygmund") {
        rep = zygmund_seminorm(f);
    } else if (kind == "heat-lambda") {
        rep = heat_lambda_seminorm(f, beta);
        config["beta"] = beta;
    } else if (kind == "poisson-lambda") {
        rep = poisson_lambda_seminorm_1d(f, beta);
        config["beta"] = beta;
    } else if (kind == "equivalence") {
        const auto [a, b] = equivalence_scan(f, beta, k, l);
        config["beta"] = beta;
        config["k"] = k;
        config["l"] = l;
        if (oo.format == "csv") {
            emit(oo, table_to_csv({"beta", "k_value", "l_value", "ratio"},
                                  {{beta, a, b, a / b}}));
        } else {
            json out{{"version", kVersion}, {"command", "regularity"}, {"config", config},
                     {"k_value", a},        {"l_value", b},            {"ratio", a / b}};
            emit(oo, out.dump(2) + "\n");
        }
        return 0;
    } else if (kind == "transfer") {
        const double ratio = transfer_ratio(f, sigma, beta);
        config["beta"] = beta;
        config["sigma"] = sigma;
        if (oo.format == "csv") {
            emit(oo, table_to_csv({"sigma", "beta", "ratio"}, {{sigma, beta, ratio}}));
        } else {
            json out{{"version", kVersion}, {"command", "regularity"}, {"config", config},
                     {"ratio", ratio}};
            emit(oo, out.dump(2) + "\n");
        }
        return 0;
    } else {
        throw InputError("regularity: unknown kind '" + kind +
                         "' (holder, zygmund, heat-lambda, poisson-lambda, equivalence, "
                         "transfer, family)");
    }

    if (oo.format == "csv") {
        emit(oo, table_to_csv({"value", "k_used", "beta"},
                              {{rep.value, static_cast<double>(rep.k_used), rep.beta}}));
    } else {
        json out{{"version", kVersion}, {"command", "regularity"}, {"config", config},
                 {"report", seminorm_report_to_json(rep)}};
        emit(oo, out.dump(2) + "\n");
    }
    return 0;
}

// -------------------------------------------------------------- selftest ----
int run_selftest(const std::string& filter, bool list_only, const std::string& output) {
    if (list_only) {
        for (const auto& id : acceptance::criterion_ids()) std::cout << id << "\n";
        return 0;
    }
    const auto results = acceptance::run_all(filter, &std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    std::cout << (failed == 0
                      ? "all " + std::to_string(results.size()) + " criteria passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) +
                            " criteria FAILED")
              << std::endl;
    if (!output.empty() && output != "-") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"id", r.id},
                               {"passed", r.passed},
                               {"elapsed_s", r.elapsed_s},
                               {"detail", r.detail}});
        json rep{{"version", kVersion}, {"command", "selftest"},
                 {"config", json{{"filter", filter}}}, {"criteria", arr}};
        write_text_file(output, rep.dump(2) + "\n");
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractorus — fractional Laplacian on the torus: multiplier, "
                 "singular-kernel and semigroup routes, extension problem, and "
                 "smoothness-seminorm estimators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "",
                   "TOML-style key=value config file ([subcommand] sections; "
                   "command-line flags win)");

    int exit_code = 0;

    // apply
    FieldOpts ap_f;
    OutOpts ap_o;
    PvOpts ap_pv;
    double ap_sigma = 0.5;
    std::string ap_route = "spectral";
    auto* apply = app.add_subcommand("apply", "evaluate (-Δ)^{σ/2} f by one route or all");
    apply->configurable();
    add_field_opts(apply, ap_f);
    add_out_opts(apply, ap_o);
    add_pv_opts(apply, ap_pv);
    apply->add_option("--sigma", ap_sigma, "fractional order σ ∈ (0,2)")->required();
    apply->add_option("--route", ap_route,
                      "spectral | pointwise | heat-integral | poisson-1d | all")
        ->capture_default_str();
    apply->callback(
        [&] { exit_code = run_apply(ap_f, ap_o, ap_pv, ap_sigma, ap_route); });

    // kernel-table
    OutOpts kt_o;
    std::string kt_kernel = "riesz";
    int kt_dim = 1;
    double kt_sigma = 0.5, kt_t = 0.1;
    double kt_xmin = kPi / 16.0, kt_xmax = kPi;
    int kt_xcount = 16;
    auto* ktab = app.add_subcommand("kernel-table",
                                    "tabulate a kernel along the first axis");
    ktab->configurable();
    add_out_opts(ktab, kt_o);
    ktab->add_option("--kernel", kt_kernel,
                     "riesz | riesz-heat | riesz-poisson | heat | poisson | "
                     "poisson-difference")
        ->capture_default_str();
    ktab->add_option("--dim", kt_dim, "torus dimension (1-3)")->capture_default_str();
    ktab->add_option("--sigma", kt_sigma, "order σ (riesz kernels)")->capture_default_str();
    ktab->add_option("--t", kt_t, "time t (heat/poisson kernels)")->capture_default_str();
    ktab->add_option("--x-min", kt_xmin, "first evaluation point")->capture_default_str();
    ktab->add_option("--x-max", kt_xmax, "last evaluation point")->capture_default_str();
    ktab->add_option("--x-count", kt_xcount, "number of points")->capture_default_str();
    ktab->callback([&] {
        exit_code = run_kernel_table(kt_o, kt_kernel, kt_dim, kt_sigma, kt_t, kt_xmin,
                                     kt_xmax, kt_xcount);
    });

    // limits
    FieldOpts li_f;
    OutOpts li_o;
    PvOpts li_pv;
    std::string li_target = "zero";
    std::vector<double> li_sigmas;
    bool li_above = false;
    auto* limits = app.add_subcommand("limits", "σ→0⁺ / σ→2 limit scans");
    limits->configurable();
    add_field_opts(limits, li_f);
    add_out_opts(limits, li_o);
    add_pv_opts(limits, li_pv);
    limits->add_option("--target", li_target, "zero | two")->capture_default_str();
    limits->add_option("--sigmas", li_sigmas,
                       "σ values (descending for zero, ascending for two)")
        ->delimiter(',');
    limits->add_flag("--include-above", li_above, "extend the σ→2 scan past 2");
    limits->callback([&] {
        exit_code = run_limits(li_f, li_o, li_pv, li_target, li_sigmas, li_above);
    });

    // extension
    FieldOpts ex_f;
    OutOpts ex_o;
    double ex_gamma = 0.5, ex_ymin = 1e-4, ex_ymax = 4.0, ex_resy = 0.5;
    int ex_ycount = 40;
    auto* ext = app.add_subcommand(
        "extension", "solve the extension problem and recover the weighted trace");
    ext->configurable();
    add_field_opts(ext, ex_f);
    add_out_opts(ext, ex_o);
    ext->add_option("--gamma", ex_gamma, "noninteger power order γ > 0")->required();
    ext->add_option("--y-min", ex_ymin, "smallest extension height")->capture_default_str();
    ext->add_option("--y-max", ex_ymax, "largest extension height")->capture_default_str();
    ext->add_option("--y-count", ex_ycount, "geometric y-grid size")->capture_default_str();
    ext->add_option("--residual-y", ex_resy, "interior height for the PDE residual")
        ->capture_default_str();
    ext->callback([&] {
        exit_code = run_extension(ex_f, ex_o, ex_gamma, ex_ymin, ex_ymax, ex_ycount, ex_resy);
    });

    // regularity
    FieldOpts re_f;
    OutOpts re_o;
    std::string re_kind = "heat-lambda";
    double re_beta = 1.0, re_alpha = 1.0, re_sigma = 0.5;
    int re_k = 0, re_l = 2, re_numax = 8;
    auto* reg = app.add_subcommand("regularity", "smoothness-seminorm estimators");
    reg->configurable();
    add_field_opts(reg, re_f);
    add_out_opts(reg, re_o);
    reg->add_option("--kind", re_kind,
                    "holder | zygmund | heat-lambda | poisson-lambda | equivalence | "
                    "transfer | family")
        ->capture_default_str();
    reg->add_option("--beta", re_beta, "smoothness order β")->capture_default_str();
    reg->add_option("--k", re_k, "derivative order (holder/equivalence)")
        ->capture_default_str();
    reg->add_option("--alpha", re_alpha, "Hölder exponent α ∈ (0,1]")->capture_default_str();
    reg->add_option("--l", re_l, "second derivative order (equivalence)")
        ->capture_default_str();
    reg->add_option("--sigma", re_sigma, "fractional order (transfer/family)")
        ->capture_default_str();
    reg->add_option("--nu-max", re_numax, "largest mode of the family scan")
        ->capture_default_str();
    reg->callback([&] {
        exit_code = run_regularity(re_f, re_o, re_kind, re_beta, re_k, re_alpha, re_l,
                                   re_sigma, re_numax);
    });

    // selftest
    std::string st_filter;
    std::string st_output;
    bool st_list = false;
    auto* st = app.add_subcommand("selftest", "run the built-in verification suite");
    st->configurable();
    st->add_option("--filter", st_filter, "run only criteria whose id contains this string");
    st->add_option("-o,--output", st_output, "also write a JSON report to this path");
    st->add_flag("--list", st_list, "list criterion ids and exit");
    st->callback([&] { exit_code = run_selftest(st_filter, st_list, st_output); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // config/flag errors are exit 2
    } catch (const InputError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        const json diag{{"version", kVersion},
                        {"error", json{{"type", "numerical"}, {"message", e.what()}}}};
        std::cout << diag.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        const json diag{{"version", kVersion},
                        {"error", json{{"type", "internal"}, {"message", e.what()}}}};
        std::cout << diag.dump(2) << "\n";
        return 3;
    }
    return exit_code;
}
