// tjcm - time sweeps of atomic inversion, entanglement entropies and atomic
// Wehrl entropy for a two-level atom in a two-mode squeezed vacuum.

#include "sweep.hpp"

#include "tjcm/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using tjcm::app::RunConfig;

void emit(const tjcm::app::Table& table, const RunConfig& config)
{
    if (config.out.empty() || config.out == "-") {
        tjcm::app::write_table(std::cout, table, config);
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + config.out + "'");
    tjcm::app::write_table(file, table, config);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-mode Jaynes-Cummings dynamics with a squeezed-vacuum field"};
    app.require_subcommand(0, 1);

    RunConfig config;
    std::string quantity = "inversion";
    std::string format = "csv";
    std::string theta = "0";
    std::string phi = "0";
    std::string time = "pi/2";
    std::string t_start = "0";
    std::string t_stop = "3pi";
    double sinh2r = 0.0;
    double r = 0.0;

    app.add_option("--quantity", quantity, "inversion | linear-entropy | vn-entropy | wehrl | qfunction | verify")
        ->capture_default_str();
    auto* sinh2r_opt = app.add_option("--sinh2r", sinh2r, "squeeze strength as sinh^2 r (default 10)");
    auto* r_opt = app.add_option("--r", r, "squeeze parameter r");
    sinh2r_opt->excludes(r_opt);
    app.add_option("--theta", theta, "atomic polar phase, e.g. 0, pi/2")->capture_default_str();
    app.add_option("--phi", phi, "atomic azimuthal phase, e.g. pi/6")->capture_default_str();
    app.add_option("--eta", config.eta, "Kerr ratio chi/lambda")->capture_default_str();
    app.add_option("--t-start", t_start, "first scaled time, e.g. 0, pi/2")->capture_default_str();
    app.add_option("--t-stop", t_stop, "last scaled time, e.g. 3pi")->capture_default_str();
    app.add_option("--t-steps", config.t_steps, "number of time points")->capture_default_str();
    app.add_option("--time", time, "scaled time of a qfunction snapshot")->capture_default_str();
    app.add_option("--tail-tol", config.tail_tol, "discarded Fock probability")->capture_default_str();
    app.add_option("--grid-theta", config.grid_theta, "Gauss-Legendre nodes in cos(Theta)")->capture_default_str();
    app.add_option("--grid-phi", config.grid_phi, "trapezoid nodes in Phi")->capture_default_str();
    app.add_option("--samples", config.samples, "verify: number of random draws")->capture_default_str();
    app.add_option("--seed", config.seed, "verify: RNG seed")->capture_default_str();
    app.add_flag("--dense", config.dense_oracle, "verify: use the full-matrix eigendecomposition oracle");
    app.add_option("--out", config.out, "output path (stdout when omitted)");
    app.add_option("--format", format, "csv | json")->capture_default_str();

    int figure = 0;
    auto* figures = app.add_subcommand("figures", "regenerate the data of figure 1, 2, 3 or 4");
    figures->add_option("figure", figure, "figure number")->required()->check(CLI::Range(1, 4));

    CLI11_PARSE(app, argc, argv);

    try {
        config.quantity = tjcm::app::parse_quantity(quantity);
        config.format = tjcm::app::parse_format(format);
        config.theta = tjcm::app::parse_angle(theta);
        config.phi = tjcm::app::parse_angle(phi);
        config.snapshot_time = tjcm::app::parse_angle(time);
        config.t_start = tjcm::app::parse_angle(t_start);
        config.t_stop = tjcm::app::parse_angle(t_stop);
        if (*sinh2r_opt)
            config.sinh2r = sinh2r;
        if (*r_opt)
            config.r = r;

        const tjcm::app::Table table =
            *figures ? tjcm::app::run_figure(figure, config) : tjcm::app::run(config);
        emit(table, config);
        if (config.quantity == tjcm::app::Quantity::verify && !*figures) {
            std::cerr << "max |analytic - oracle| amplitude: "
                      << tjcm::app::format_number(table.summary.at("max_amplitude_dev"))
                      << ", density: " << tjcm::app::format_number(table.summary.at("max_density_dev"))
                      << '\n';
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const tjcm::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
