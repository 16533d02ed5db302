// Command-line front end: bound-state energies, potentials, wavefunctions,
// reference-table regressions, figure series and oracle comparisons for a
// hydrogen atom in quantum plasma under AB-flux, magnetic and electric fields.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plasmah/figures.hpp"
#include "plasmah/oracle.hpp"
#include "plasmah/parallel.hpp"
#include "plasmah/susy.hpp"
#include "plasmah/tables.hpp"

namespace {

using plasmah::format_number;

struct CommonOpts {
    plasmah::PlasmaFieldConfig cfg;
    plasmah::QuantumNumbers qn;
    std::string format = "text";
    std::string output;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_state = true) {
    cmd->add_option("--A", o.cfg.A, "coupling strength Z e^2 (a.u.)")
        ->capture_default_str();
    cmd->add_option("--lambda-d", o.cfg.lambda_d, "Debye screening length (bohr)")
        ->capture_default_str();
    cmd->add_option("--g", o.cfg.g, "plasma mode: 0 weakly coupled, 1 dense quantum")
        ->capture_default_str();
    cmd->add_option("--F", o.cfg.F, "electric field strength (a.u.)")
        ->capture_default_str();
    cmd->add_option("--B", o.cfg.B, "magnetic field strength (a.u.)")
        ->capture_default_str();
    cmd->add_option("--xi", o.cfg.xi, "AB-flux ratio Phi_AB/Phi_0")
        ->capture_default_str();
    cmd->add_option("--mu", o.cfg.mu, "effective electron mass (a.u.)")
        ->capture_default_str();
    cmd->add_option("--hbar", o.cfg.hbar, "reduced Planck constant (a.u.)")
        ->capture_default_str();
    if (with_state) {
        cmd->add_option("--n", o.qn.n, "radial quantum number")->capture_default_str();
        cmd->add_option("--m", o.qn.m, "magnetic quantum number")->capture_default_str();
    }
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "structured"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output, "write to file instead of stdout");
}

void check_config(const CommonOpts& o) {
    for (const std::string& w : plasmah::validate(o.cfg))
        std::cerr << "warning: " << w << "\n";
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw plasmah::ArgumentError("cannot open output file: " + o.output);
    out << payload;
}

nlohmann::json config_json(const plasmah::PlasmaFieldConfig& cfg) {
    return {{"A", cfg.A},   {"lambda_d", cfg.lambda_d}, {"g", cfg.g},
            {"F", cfg.F},   {"B", cfg.B},               {"xi", cfg.xi},
            {"mu", cfg.mu}, {"hbar", cfg.hbar}};
}

nlohmann::json breakdown_json(const plasmah::EnergyBreakdown& b) {
    return {{"e0", b.e0}, {"shift", b.shift}, {"e1", b.e1},
            {"e2", b.e2}, {"total", b.total}};
}

std::string breakdown_text(const plasmah::QuantumNumbers& qn,
                           const plasmah::EnergyBreakdown& b) {
    std::ostringstream os;
    os << "state n=" << qn.n << " m=" << qn.m << "\n";
    os << "  e0    " << format_number(b.e0) << "\n";
    os << "  shift " << format_number(b.shift) << "\n";
    os << "  e1    " << format_number(b.e1) << "\n";
    os << "  e2    " << format_number(b.e2) << "\n";
    os << "  total " << format_number(b.total) << "\n";
    return os.str();
}

struct GridFlags {
    plasmah::GridPolicy policy;

    void add(CLI::App* cmd) {
        cmd->add_option("--grid-points", policy.initial_points,
                        "initial grid size for the eigensolver")
            ->capture_default_str();
        cmd->add_option("--grid-max-points", policy.max_points,
                        "grid-size cap for automatic refinement")
            ->capture_default_str();
        cmd->add_option("--grid-target", policy.target_estimate,
                        "Richardson error-estimate target")
            ->capture_default_str();
        cmd->add_option("--r-max", policy.r_max_override,
                        "force the outer grid radius (bohr)");
        cmd->add_flag("--box-mode", policy.box_mode,
                      "allow F > 0: eigenvalues become box-resonance estimates");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "plasmah: spectra of a hydrogen atom in quantum plasma under AB-flux,\n"
        "magnetic and electric fields (atomic units). Worker threads are capped\n"
        "by the PLASMAH_THREADS environment variable."};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- energy ---------------------------------------------------------
    CommonOpts energy_opts;
    auto* energy = app.add_subcommand("energy", "total-energy breakdown for one state");
    add_common_flags(energy, energy_opts);
    energy->callback([&] {
        check_config(energy_opts);
        const auto b = plasmah::total_energy(energy_opts.qn, energy_opts.cfg);
        if (energy_opts.format == "structured") {
            nlohmann::json j{{"state", {{"n", energy_opts.qn.n}, {"m", energy_opts.qn.m}}},
                             {"config", config_json(energy_opts.cfg)},
                             {"energy", breakdown_json(b)}};
            emit(energy_opts, j.dump(2) + "\n");
        } else if (energy_opts.format == "csv") {
            std::ostringstream os;
            os << "n,m,e0,shift,e1,e2,total\n"
               << energy_opts.qn.n << "," << energy_opts.qn.m << ","
               << format_number(b.e0) << "," << format_number(b.shift) << ","
               << format_number(b.e1) << "," << format_number(b.e2) << ","
               << format_number(b.total) << "\n";
            emit(energy_opts, os.str());
        } else {
            emit(energy_opts, breakdown_text(energy_opts.qn, b));
        }
    });

    // --- spectrum ---------------------------------------------------------
    CommonOpts spec_opts;
    int n_min = 0, n_max = 3, m_min = 0, m_max = 1;
    auto* spectrum = app.add_subcommand("spectrum", "energy breakdowns over (n, m) ranges");
    add_common_flags(spectrum, spec_opts, false);
    spectrum->add_option("--n-min", n_min)->capture_default_str();
    spectrum->add_option("--n-max", n_max)->capture_default_str();
    spectrum->add_option("--m-min", m_min)->capture_default_str();
    spectrum->add_option("--m-max", m_max)->capture_default_str();
    spectrum->callback([&] {
        check_config(spec_opts);
        if (n_max < n_min || m_max < m_min)
            throw plasmah::ArgumentError("spectrum: empty (n, m) range");
        std::vector<plasmah::QuantumNumbers> states;
        for (int m = m_min; m <= m_max; ++m)
            for (int n = n_min; n <= n_max; ++n) states.push_back({n, m});
        std::vector<plasmah::EnergyBreakdown> result(states.size());
        plasmah::parallel_for(states.size(), [&](std::size_t i) {
            result[i] = plasmah::total_energy(states[i], spec_opts.cfg);
        });
        if (spec_opts.format == "structured") {
            nlohmann::json j{{"config", config_json(spec_opts.cfg)},
                             {"states", nlohmann::json::array()}};
            for (std::size_t i = 0; i < states.size(); ++i) {
                auto entry = breakdown_json(result[i]);
                entry["n"] = states[i].n;
                entry["m"] = states[i].m;
                j["states"].push_back(entry);
            }
            emit(spec_opts, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "m,n,e0,shift,e1,e2,total\n";
            for (std::size_t i = 0; i < states.size(); ++i) {
                const auto& b = result[i];
                os << states[i].m << "," << states[i].n << ","
                   << format_number(b.e0) << "," << format_number(b.shift) << ","
                   << format_number(b.e1) << "," << format_number(b.e2) << ","
                   << format_number(b.total) << "\n";
            }
            emit(spec_opts, os.str());
        }
    });

    // --- potential ---------------------------------------------------------
    CommonOpts pot_opts;
    double r_min = 0.1, r_max = 10.0;
    int points = 201;
    auto* potential = app.add_subcommand(
        "potential", "effective potential vs its series truncation");
    add_common_flags(potential, pot_opts);
    potential->add_option("--r-min", r_min)->capture_default_str();
    potential->add_option("--r-max", r_max)->capture_default_str();
    potential->add_option("--points", points)->capture_default_str();
    potential->callback([&] {
        check_config(pot_opts);
        if (!(r_min > 0.0) || !(r_max > r_min) || points < 2)
            throw plasmah::ArgumentError("potential: need 0 < r-min < r-max, points >= 2");
        std::ostringstream os;
        os << "r,exact,series,residual\n";
        for (int i = 0; i < points; ++i) {
            const double r = r_min + (r_max - r_min) * i / (points - 1);
            const double exact = plasmah::effective_potential(r, pot_opts.qn, pot_opts.cfg);
            const double series = plasmah::series_potential(r, pot_opts.qn, pot_opts.cfg);
            os << format_number(r) << "," << format_number(exact) << ","
               << format_number(series) << "," << format_number(exact - series)
               << "\n";
        }
        emit(pot_opts, os.str());
    });

    // --- wavefunction ---------------------------------------------------------
    CommonOpts wf_opts;
    double wf_r_min = 0.0, wf_r_max = 10.0;
    int wf_points = 201;
    auto* wavefunction = app.add_subcommand(
        "wavefunction", "radial samples of P, Q, the moderated amplitude and |psi|");
    add_common_flags(wavefunction, wf_opts);
    wavefunction->add_option("--r-min", wf_r_min)->capture_default_str();
    wavefunction->add_option("--r-max", wf_r_max)->capture_default_str();
    wavefunction->add_option("--points", wf_points)->capture_default_str();
    wavefunction->callback([&] {
        check_config(wf_opts);
        const auto samples = plasmah::wavefunction_samples(wf_r_min, wf_r_max, wf_points,
                                                           wf_opts.qn, wf_opts.cfg);
        const double mod_norm = plasmah::moderated_norm(wf_opts.qn, wf_opts.cfg);
        const double renorm = 1.0 / std::sqrt(mod_norm);
        std::ostringstream os;
        os << "# moderated_norm=" << format_number(mod_norm)
           << " renormalization=" << format_number(renorm)
           << " (full psi carries e^{i m phi}/sqrt(2 pi r), m=" << wf_opts.qn.m
           << ")\n";
        os << "r,P,Q,moderated,moderated_renorm,abs_psi\n";
        for (const auto& s : samples) {
            const double q = s.unperturbed != 0.0 ? s.moderated / s.unperturbed : 1.0;
            const double abs_psi =
                s.r > 0.0 ? std::abs(s.moderated) / std::sqrt(2.0 * M_PI * s.r) : 0.0;
            os << format_number(s.r) << "," << format_number(s.unperturbed) << ","
               << format_number(q) << "," << format_number(s.moderated) << ","
               << format_number(s.moderated * renorm) << ","
               << format_number(abs_psi) << "\n";
        }
        emit(wf_opts, os.str());
    });

    // --- table ---------------------------------------------------------
    CommonOpts table_opts;
    int table_id = 1;
    std::string data_file;
    auto* table = app.add_subcommand("table", "regression diff against a reference table");
    table->add_option("--id", table_id, "reference table id")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    table->add_option("--data-file", data_file, "override the reference data file");
    table->add_option("--format", table_opts.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    table->add_option("--output", table_opts.output, "write to file instead of stdout");
    table->callback([&] {
        const auto report = plasmah::reproduce_table(table_id, data_file);
        emit(table_opts, table_opts.format == "structured"
                             ? plasmah::render_json(report)
                             : plasmah::render_text(report));
        exit_code = report.pass ? 0 : 1;
    });

    // --- figure ---------------------------------------------------------
    CommonOpts fig_opts;
    std::string figure_id;
    auto* figure = app.add_subcommand("figure", "CSV series behind one figure panel");
    figure->add_option("--id", figure_id, "figure panel id")
        ->check(CLI::IsMember(plasmah::known_figure_ids()))
        ->required();
    figure->add_option("--output", fig_opts.output, "write to file instead of stdout");
    figure->callback([&] {
        emit(fig_opts, plasmah::to_csv(plasmah::figure_data(figure_id)));
    });

    // --- oracle ---------------------------------------------------------
    CommonOpts oracle_opts;
    GridFlags oracle_grid;
    int k = 3;
    auto* oracle = app.add_subcommand(
        "oracle", "finite-difference eigenvalues of the exact potential");
    add_common_flags(oracle, oracle_opts);
    oracle->add_option("--k", k, "number of eigenvalues")->capture_default_str();
    oracle_grid.add(oracle);
    oracle->callback([&] {
        check_config(oracle_opts);
        const auto spec = plasmah::oracle_spectrum(oracle_opts.qn.m, k, oracle_opts.cfg,
                                                   oracle_grid.policy);
        if (oracle_opts.format == "structured") {
            nlohmann::json j{{"m", spec.m},
                             {"config", config_json(oracle_opts.cfg)},
                             {"grid",
                              {{"r_min", spec.grid.r_min},
                               {"r_max", spec.grid.r_max},
                               {"n_points", spec.grid.n_points}}},
                             {"eigenvalues", spec.eigenvalues},
                             {"error_estimates", spec.converged}};
            emit(oracle_opts, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "n,energy,error_estimate\n";
            for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j)
                os << j << "," << format_number(spec.eigenvalues[j]) << ","
                   << format_number(spec.converged[j]) << "\n";
            emit(oracle_opts, os.str());
        }
    });

    // --- compare ---------------------------------------------------------
    CommonOpts cmp_opts;
    GridFlags cmp_grid;
    auto* compare = app.add_subcommand(
        "compare", "perturbative total vs oracle eigenvalue for one state");
    add_common_flags(compare, cmp_opts);
    cmp_grid.add(compare);
    compare->callback([&] {
        check_config(cmp_opts);
        const auto cmp = plasmah::compare_with_perturbation(cmp_opts.qn, cmp_opts.cfg,
                                                            cmp_grid.policy);
        if (cmp_opts.format == "structured") {
            nlohmann::json j{{"state", {{"n", cmp_opts.qn.n}, {"m", cmp_opts.qn.m}}},
                             {"config", config_json(cmp_opts.cfg)},
                             {"perturbative", breakdown_json(cmp.perturbative)},
                             {"oracle_energy", cmp.oracle_energy},
                             {"abs_gap", cmp.abs_gap},
                             {"rel_gap", cmp.rel_gap},
                             {"oracle_estimate", cmp.oracle_estimate},
                             {"outside_validity", cmp.outside_validity}};
            emit(cmp_opts, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << breakdown_text(cmp_opts.qn, cmp.perturbative);
            os << "  oracle          " << format_number(cmp.oracle_energy) << "\n";
            os << "  abs gap         " << format_number(cmp.abs_gap) << "\n";
            os << "  rel gap         " << format_number(cmp.rel_gap) << "\n";
            os << "  oracle estimate " << format_number(cmp.oracle_estimate) << "\n";
            if (cmp.outside_validity)
                os << "  flag: outside validity regime (lambda_D < 2 or |e2| > 0.5 |e0|)\n";
            emit(cmp_opts, os.str());
        }
    });

    // --- delta-e ---------------------------------------------------------
    CommonOpts de_opts;
    std::vector<double> xi_list{1.0, 2.0, 4.0};
    double de_field = 1.2;
    auto* delta_e = app.add_subcommand(
        "delta-e", "AB-flux dominance: E(B=5) - E(B=0) at m = n = 0 per xi");
    add_common_flags(delta_e, de_opts, false);
    delta_e->add_option("--xi-list", xi_list, "AB-flux ratios to scan")
        ->delimiter(',')
        ->capture_default_str();
    delta_e->add_option("--de-F", de_field, "electric field used for the scan")
        ->capture_default_str();
    delta_e->callback([&] {
        check_config(de_opts);
        const auto rows = plasmah::delta_e_analysis(xi_list, de_field, de_opts.cfg);
        if (de_opts.format == "structured") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json row{{"xi", r.xi}, {"delta_e", r.delta_e},
                                   {"flagged", r.flagged}};
                if (r.has_quote) row["quoted"] = r.quoted;
                j.push_back(row);
            }
            emit(de_opts, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "xi,delta_e,quoted,flag\n";
            for (const auto& r : rows) {
                os << format_number(r.xi) << "," << format_number(r.delta_e) << ",";
                os << (r.has_quote ? format_number(r.quoted) : "-") << ",";
                os << (r.flagged ? "computed-disagrees-with-quoted" : "ok") << "\n";
            }
            emit(de_opts, os.str());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const plasmah::ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const plasmah::Error& e) {
        std::cerr << "physics-domain error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
