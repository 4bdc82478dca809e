// sweep.hpp - parameter sweeps, figure presets and table output for the tjcm
// command-line tool.

#pragma once

#include "tjcm/husimi_wehrl.hpp"
#include "tjcm/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace tjcm::app {

enum class Quantity { inversion, linear_entropy, vn_entropy, wehrl, qfunction, verify };
enum class OutputFormat { csv, json };

Quantity parse_quantity(const std::string& name);
std::string to_string(Quantity q);
OutputFormat parse_format(const std::string& name);

/// Accepts plain numbers and multiples of pi: "1.2", "pi", "pi/2", "3pi/2", "0.5*pi".
double parse_angle(const std::string& text);

inline constexpr double kFigureSinh2r = 10.0;

struct RunConfig {
    Quantity quantity = Quantity::inversion;
    std::optional<double> sinh2r;
    std::optional<double> r;
    double theta = 0.0;
    double phi = 0.0;
    double eta = 0.0;
    double t_start = 0.0;
    double t_stop = 3.0 * std::numbers::pi;
    std::size_t t_steps = 601;
    double tail_tol = kDefaultTailTol;
    std::size_t grid_theta = kDefaultGridTheta;
    std::size_t grid_phi = kDefaultGridPhi;
    double snapshot_time = std::numbers::pi / 2.0;  // qfunction only
    std::size_t samples = 100;                      // verify only
    std::uint64_t seed = 20071;                     // verify only
    bool dense_oracle = false;                      // verify only
    std::string out;
    OutputFormat format = OutputFormat::csv;

    /// Throws std::invalid_argument with a usage message.
    void validate() const;
    /// r from whichever of sinh2r / r was given; sinh^2 r = 10 when neither.
    double squeeze() const;
    std::vector<double> time_grid() const;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, double> summary;
};

/// T grid sweep of one scalar quantity, or the oracle comparison for verify.
Table run_sweep(const RunConfig& config);

/// Q_a on the quadrature grid at config.snapshot_time: columns theta, phi, q, weight.
Table run_qfunction_snapshot(const RunConfig& config);

/// Dispatches on config.quantity.
Table run(const RunConfig& config);

/// Data behind figure 1..4, with the figure's own parameter sets. Only the T
/// range, truncation and grid settings are taken from config.
Table run_figure(int figure, const RunConfig& config);

/// 12 significant digits.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table, const RunConfig& config);
void write_table(std::ostream& os, const Table& table, const RunConfig& config);

} // namespace tjcm::app
