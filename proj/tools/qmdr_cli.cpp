// qmdr: batch front end for the deformation-quantization MDR toolkit.
//
// Subcommands: verify, mdr, sw-map, flux, a4, constrain.
// Exit codes: 0 pass, 1 verification counterexample, 2 input schema
// violation, 3 numeric domain error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qmdr/serialize.hpp"
#include "qmdr/verify.hpp"

namespace {

using qmdr::Json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;

struct CommonOpts {
    std::string input_path;
    std::string output_path;
    std::string format = "json";
    unsigned order = 4;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input) cmd->add_option("--input", opts.input_path, "input JSON file");
    cmd->add_option("--output", opts.output_path, "output file (default stdout)");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--order", opts.order, "truncation order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", opts.seed, "random seed for property suites");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.output_path);
    out << text;
}

Json load_input(const CommonOpts& opts) {
    if (opts.input_path.empty()) throw qmdr::SchemaError("", "missing --input file");
    std::ifstream in(opts.input_path);
    if (!in) throw qmdr::SchemaError("", "cannot open input file: " + opts.input_path);
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw qmdr::SchemaError("", "malformed JSON in " + opts.input_path);
    return j;
}

Json header(const std::string& command) {
    Json j;
    j["schema_version"] = qmdr::kSchemaVersion;
    j["command"] = command;
    return j;
}

int cmd_verify(const CommonOpts& opts, unsigned samples, bool corrupt_c2) {
    qmdr::VerifyConfig cfg;
    cfg.order = opts.order;
    cfg.samples = samples;
    cfg.seed = opts.seed;
    if (corrupt_c2) cfg.corrupt_c2 = qmdr::Rat(1, 2);
    std::vector<qmdr::CheckReport> reports = qmdr::run_verification(cfg);

    Json out = header("verify");
    out["order"] = cfg.order;
    out["samples"] = cfg.samples;
    out["seed"] = cfg.seed;
    Json checks = Json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        checks.push_back(qmdr::check_report_to_json(r));
        all_pass = all_pass && r.pass;
    }
    out["checks"] = std::move(checks);
    out["status"] = all_pass ? "pass" : "fail";
    emit(opts, out.dump(2) + "\n");
    return all_pass ? kExitPass : kExitCounterexample;
}

qmdr::Realization realization_from_opts(const Json& input) {
    return qmdr::realization_from_json(input);
}

int cmd_mdr(const CommonOpts& opts) {
    Json input = load_input(opts);
    qmdr::Realization r = realization_from_opts(input);
    unsigned order = std::max(4u, opts.order % 2 == 0 ? opts.order : opts.order + 1);
    qmdr::Polynomial disp = qmdr::realization_dispersion(r, order);
    qmdr::MdrExtract mdr = qmdr::extract_mdr(disp);

    std::vector<std::string> names{"k", "lambda", "theta"};
    if (opts.format == "csv") {
        // numeric samples need a numeric scale
        if (!r.scale_sq) throw qmdr::SchemaError("/scale_sq", "csv sampling needs a numeric scale");
        double m = input.value("mass", 0.0);
        qmdr::Dispersion d{m, static_cast<double>(*r.scale_sq), r.sigma()};
        std::string csv = "p,E,v\n";
        double p_max = std::sqrt(d.domain_threshold / std::max(d.ell_star_sq, 1e-300));
        char buf[160];
        for (int i = 1; i <= 50; ++i) {
            double p = p_max * i / 51.0;
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p, qmdr::energy(d, p),
                          qmdr::group_velocity(d, p));
            csv += buf;
        }
        emit(opts, csv);
        return kExitPass;
    }
    Json out = header("mdr");
    out["realization"] = r.name();
    out["order"] = order;
    out["dispersion"] = qmdr::polynomial_to_json(disp, &names);
    out["quartic_coefficient"] = qmdr::polynomial_to_json(mdr.quartic_coefficient, &names);
    out["sigma"] = mdr.sigma;
    out["ell_star_sq"] = qmdr::polynomial_to_json(mdr.ell_star_sq, &names);
    emit(opts, out.dump(2) + "\n");
    return kExitPass;
}

int cmd_sw_map(const CommonOpts& opts) {
    qmdr::BackgroundFields bg = qmdr::background_from_json(load_input(opts));
    qmdr::OpenStringData open = qmdr::seiberg_witten_map(bg);
    Json out = header("sw-map");
    out["G_open"] = qmdr::pi_matrix_to_json(open.G_open);
    out["G_open_inv"] = qmdr::pi_matrix_to_json(open.G_open_inv);
    out["Theta"] = qmdr::pi_matrix_to_json(open.Theta);
    out["theta_norm_sq"] = open.theta_norm_sq.to_string();
    Json norm;
    if (open.theta_norm.exact) {
        norm["exact"] = true;
        norm["coefficient"] = qmdr::rat_to_string(open.theta_norm.exact->first);
        norm["pi_power"] = open.theta_norm.exact->second;
    } else {
        norm["exact"] = false;
    }
    norm["approx"] = open.theta_norm.approx;
    out["theta_norm"] = std::move(norm);
    out["note"] = "flux normalization drops order-unity metric factors";
    emit(opts, out.dump(2) + "\n");
    return kExitPass;
}

int cmd_flux(const CommonOpts& opts) {
    Json input = load_input(opts);
    qmdr::FluxData flux = qmdr::flux_from_json(input);
    long n_abs = flux.n < 0 ? -flux.n : flux.n;
    qmdr::PiRat theta;
    if (input.contains("alpha_prime")) {
        qmdr::Rat alpha = input.at("alpha_prime").is_string()
                              ? qmdr::rat_from_string(input.at("alpha_prime").get<std::string>())
                              : qmdr::Rat(input.at("alpha_prime").get<long>());
        theta = qmdr::flux_theta(flux, alpha);
    } else {
        // with ell_s^2 = 2 pi alpha', the pi cancels: |theta| = ell_s^2 |n|
        theta = qmdr::PiRat(flux.ell_s * flux.ell_s * qmdr::Rat(n_abs));
    }
    qmdr::ScalarResult gamma = qmdr::immirzi_from_flux(flux);
    Json out = header("flux");
    out["n"] = flux.n;
    out["theta"] = theta.to_string();
    out["gamma"] = qmdr::enclosure_to_json(gamma.value, gamma.exact);
    if (gamma.exact) {
        qmdr::BracketReport br = qmdr::bracket_scale_check(gamma.value.lo, flux.ell_P);
        Json bracket;
        bracket["coefficient"] = qmdr::rat_to_string(br.coefficient);
        bracket["matches_gamma_ellP_sq"] = br.matches_gamma_ellP_sq;
        out["holonomy_flux_bracket"] = std::move(bracket);
    }
    out["note"] = "theta = 2 pi alpha' |n| up to order-unity metric factors";
    emit(opts, out.dump(2) + "\n");
    return kExitPass;
}

int cmd_a4(const CommonOpts& opts) {
    Json input = load_input(opts);
    qmdr::Realization r = realization_from_opts(input);
    qmdr::Polynomial disp = qmdr::realization_dispersion(r, 6);
    qmdr::A4Result a4 = qmdr::a4_from_symbol({disp, qmdr::Rat(0)});
    std::vector<std::string> names{"k", "lambda", "theta"};
    Json out = header("a4");
    out["realization"] = r.name();
    if (r.scale_sq) {
        out["a4"] = qmdr::rat_to_string(a4.a4.constant_term().re);
        out["ell_star_sq"] = qmdr::rat_to_string(a4.ell_star_sq.constant_term().re);
    } else {
        out["a4"] = qmdr::polynomial_to_json(a4.a4, &names);
        out["ell_star_sq"] = qmdr::polynomial_to_json(a4.ell_star_sq, &names);
    }
    out["sigma"] = a4.sigma;
    emit(opts, out.dump(2) + "\n");
    return kExitPass;
}

int cmd_constrain(const CommonOpts& opts, int sigma, double mass) {
    Json input = load_input(opts);
    qmdr::UnitRegistry units;
    std::vector<qmdr::ObservationChannel> channels = qmdr::channels_from_json(input, units);
    Json out = header("constrain");
    Json rows = Json::array();
    std::string csv = "channel,sigma,ell_star_sq_bound,ell_star_sq_bound_in_planck_units,"
                      "unconstrained\n";
    // natural-unit bound (GeV^-2) -> Planck units via the configured Planck energy
    double planck_sq = units.planck_energy_GeV * units.planck_energy_GeV;
    for (size_t i = 0; i < channels.size(); ++i) {
        qmdr::BoundResult b = qmdr::invert_bound(channels[i], sigma, mass);
        Json row;
        row["channel"] = i;
        row["sigma"] = sigma;
        row["ell_star_sq_bound"] = b.ell_star_sq_bound;
        row["ell_star_sq_bound_in_planck_units"] = b.ell_star_sq_bound * planck_sq;
        row["unconstrained"] = b.unconstrained;
        rows.push_back(row);
        char buf[200];
        std::snprintf(buf, sizeof buf, "%zu,%d,%.17g,%.17g,%d\n", i, sigma, b.ell_star_sq_bound,
                      b.ell_star_sq_bound * planck_sq, b.unconstrained ? 1 : 0);
        csv += buf;
    }
    out["bounds"] = std::move(rows);
    emit(opts, opts.format == "csv" ? csv : out.dump(2) + "\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformation-quantized phase spaces and the quartic MDR"};
    app.require_subcommand(1);

    CommonOpts verify_opts, mdr_opts, sw_opts, flux_opts, a4_opts, constrain_opts;
    unsigned verify_samples = 200;
    bool corrupt_c2 = false;
    int constrain_sigma = +1;
    double constrain_mass = 0;

    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suites");
    add_common(verify, verify_opts, false);
    verify->add_option("--samples", verify_samples, "random samples per suite");
    verify->add_flag("--corrupt-c2", corrupt_c2, "debug: halve C_2 to force a counterexample");

    CLI::App* mdr = app.add_subcommand("mdr", "realization dispersion and universal-form data");
    add_common(mdr, mdr_opts);

    CLI::App* sw = app.add_subcommand("sw-map", "Seiberg-Witten open-string map");
    add_common(sw, sw_opts);

    CLI::App* flux = app.add_subcommand("flux", "NS flux quantization and the Immirzi parameter");
    add_common(flux, flux_opts);

    CLI::App* a4 = app.add_subcommand("a4", "heat-kernel a4 per realization");
    add_common(a4, a4_opts);

    CLI::App* constrain = app.add_subcommand("constrain", "invert time-of-flight bounds");
    add_common(constrain, constrain_opts);
    constrain->add_option("--sigma", constrain_sigma, "sign of the quartic term")
        ->check(CLI::IsMember({-1, 1}));
    constrain->add_option("--mass", constrain_mass, "particle mass in GeV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(verify_opts, verify_samples, corrupt_c2);
        if (mdr->parsed()) return cmd_mdr(mdr_opts);
        if (sw->parsed()) return cmd_sw_map(sw_opts);
        if (flux->parsed()) return cmd_flux(flux_opts);
        if (a4->parsed()) return cmd_a4(a4_opts);
        if (constrain->parsed()) return cmd_constrain(constrain_opts, constrain_sigma,
                                                      constrain_mass);
    } catch (const qmdr::SchemaError& e) {
        std::cerr << "schema error at " << (e.path.empty() ? "/" : e.path) << ": " << e.what()
                  << "\n";
        return kExitSchema;
    } catch (const qmdr::DomainError& e) {
        std::cerr << "numeric domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
    return kExitPass;
}
