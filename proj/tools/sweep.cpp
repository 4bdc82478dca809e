#include "sweep.hpp"

#include "tjcm/dynamics.hpp"
#include "tjcm/observables.hpp"
#include "tjcm/oracle.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <random>
#include <regex>
#include <stdexcept>

namespace tjcm::app {

namespace {

constexpr double kPi = std::numbers::pi;

struct CurveSpec {
    std::string column;
    double theta;
    double phi;
    double eta;
};

// Everything needed to evaluate observables of one parameter set at any T.
class Evaluator {
public:
    Evaluator(double r, double theta, double phi, double eta, double tail_tol)
        : params_(make_params(r, theta, phi, eta, tail_tol)), coeffs_(tms_coefficients(params_))
    {
    }

    BlochVector bloch(double t) const { return bloch_vector(evolve(params_, coeffs_, t), params_.eta); }
    const ModelParams& params() const { return params_; }

private:
    ModelParams params_;
    TmsCoefficients coeffs_;
};

double scalar_quantity(Quantity q, const BlochVector& b, const SphereGrid& grid)
{
    switch (q) {
    case Quantity::inversion: return atomic_inversion(b);
    case Quantity::linear_entropy: return linear_entropy(b);
    case Quantity::vn_entropy: return von_neumann_entropy(b);
    case Quantity::wehrl: return wehrl_entropy(b, grid);
    default: throw std::logic_error("not a scalar time-series quantity");
    }
}

// Runs body(i) for i in [0, count) across threads; the first exception is
// rethrown on the calling thread.
template <class Body>
void parallel_for(long count, Body body)
{
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(tjcm_parallel_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

// One column per curve, rows in time-grid order.
Table time_series(Quantity q, const std::vector<CurveSpec>& curves, const RunConfig& config)
{
    const double r = config.squeeze();
    const std::vector<double> times = config.time_grid();
    const SphereGrid grid(config.grid_theta, config.grid_phi);

    std::vector<Evaluator> evaluators;
    evaluators.reserve(curves.size());
    for (const auto& c : curves)
        evaluators.emplace_back(r, c.theta, c.phi, c.eta, config.tail_tol);

    Table table;
    table.columns.push_back("t");
    for (const auto& c : curves)
        table.columns.push_back(c.column);
    table.rows.assign(times.size(), std::vector<double>(curves.size() + 1));

    if (q == Quantity::wehrl)
        (void)wehrl_entropy({}, grid);  // rejects coarse grids before any work starts

    parallel_for(static_cast<long>(times.size()), [&](long i) {
        auto& row = table.rows[static_cast<std::size_t>(i)];
        const double t = times[static_cast<std::size_t>(i)];
        row[0] = t;
        for (std::size_t k = 0; k < evaluators.size(); ++k)
            row[k + 1] = scalar_quantity(q, evaluators[k].bloch(t), grid);
    });
    return table;
}

double max_abs_diff(const AtomDensityMatrix& a, const AtomDensityMatrix& b)
{
    return std::max({std::abs(a.up_up - b.up_up), std::abs(a.up_down - b.up_down),
                     std::abs(a.down_up - b.down_up), std::abs(a.down_down - b.down_down)});
}

Table verify(const RunConfig& config)
{
    struct Draw {
        double r, theta, phi, eta, t;
    };
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Draw> draws(config.samples);
    for (auto& d : draws)
        d = {2.0 * unit(rng), kPi * unit(rng), 2.0 * kPi * unit(rng), 0.1 * unit(rng), 10.0 * unit(rng)};

    Table table;
    table.columns = {"draw", "r", "theta", "phi", "eta", "t", "amplitude_dev", "density_dev"};
    table.rows.assign(draws.size(), {});
    const OracleMethod method = config.dense_oracle ? OracleMethod::dense : OracleMethod::block;

    parallel_for(static_cast<long>(draws.size()), [&](long i) {
        const Draw& d = draws[static_cast<std::size_t>(i)];
        const ModelParams p = make_params(d.r, d.theta, d.phi, d.eta, config.tail_tol);
        const AmplitudeTable analytic = evolve(p, tms_coefficients(p), d.t);
        const AmplitudeTable oracle = brute_force_evolve(p, d.t, method);
        double amp_dev = 0.0;
        for (std::size_t n = 0; n < analytic.size(); ++n)
            amp_dev = std::max({amp_dev, std::abs(analytic.f1[n] - oracle.f1[n]),
                                std::abs(analytic.f2[n] - oracle.f2[n])});
        const double rho_dev =
            max_abs_diff(reduced_density(analytic, p.eta), brute_force_reduced_density(p, d.t, method));
        table.rows[static_cast<std::size_t>(i)] = {static_cast<double>(i), d.r, d.theta, d.phi, d.eta,
                                                   d.t, amp_dev, rho_dev};
    });

    double max_amp = 0.0;
    double max_rho = 0.0;
    for (const auto& row : table.rows) {
        max_amp = std::max(max_amp, row[6]);
        max_rho = std::max(max_rho, row[7]);
    }
    table.summary["max_amplitude_dev"] = max_amp;
    table.summary["max_density_dev"] = max_rho;
    return table;
}

Table snapshot(const std::vector<std::pair<double, CurveSpec>>& panels, const RunConfig& config)
{
    const double r = config.squeeze();
    const SphereGrid grid(config.grid_theta, config.grid_phi);
    const bool multi = panels.size() > 1;

    Table table;
    if (multi)
        table.columns.push_back("panel");
    for (const char* c : {"theta", "phi", "q", "weight"})
        table.columns.emplace_back(c);

    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& [t, spec] = panels[k];
        const Evaluator ev(r, spec.theta, spec.phi, spec.eta, config.tail_tol);
        const BlochVector b = ev.bloch(t);
        const QFunctionField q = q_function(b, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::vector<double> row;
            if (multi)
                row.push_back(static_cast<double>(k + 1));
            row.insert(row.end(), {grid.nodes()[i].theta, grid.nodes()[i].phi, q.values[i],
                                   grid.weights()[i]});
            table.rows.push_back(std::move(row));
        }
        table.summary[multi ? fmt::format("integral_{}", k + 1) : "integral"] = grid.integrate(q.values);
    }
    return table;
}

double round_to_output(double v) { return std::stod(format_number(v)); }

} // namespace

Quantity parse_quantity(const std::string& name)
{
    if (name == "inversion") return Quantity::inversion;
    if (name == "linear-entropy") return Quantity::linear_entropy;
    if (name == "vn-entropy") return Quantity::vn_entropy;
    if (name == "wehrl") return Quantity::wehrl;
    if (name == "qfunction") return Quantity::qfunction;
    if (name == "verify") return Quantity::verify;
    throw std::invalid_argument("unknown quantity '" + name +
                                "' (expected inversion, linear-entropy, vn-entropy, wehrl, qfunction, verify)");
}

std::string to_string(Quantity q)
{
    switch (q) {
    case Quantity::inversion: return "inversion";
    case Quantity::linear_entropy: return "linear-entropy";
    case Quantity::vn_entropy: return "vn-entropy";
    case Quantity::wehrl: return "wehrl";
    case Quantity::qfunction: return "qfunction";
    case Quantity::verify: return "verify";
    }
    return "unknown";
}

OutputFormat parse_format(const std::string& name)
{
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

double parse_angle(const std::string& text)
{
    static const std::regex pi_form(R"(^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?|[-+])?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        const std::string c = m[1].str();
        const double coef = c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : std::stod(c);
        const double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
        if (den == 0.0)
            throw std::invalid_argument("division by zero in angle '" + text + "'");
        return coef * kPi / den;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse angle '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("cannot parse angle '" + text + "'");
    return v;
}

void RunConfig::validate() const
{
    if (sinh2r && r)
        throw std::invalid_argument("give at most one of --sinh2r and --r");
    if (sinh2r && !(*sinh2r >= 0.0))
        throw std::invalid_argument("--sinh2r must be >= 0");
    if (r && !(*r >= 0.0))
        throw std::invalid_argument("--r must be >= 0");
    if (eta < 0.0)
        throw std::invalid_argument("--eta must be >= 0");
    if (quantity != Quantity::qfunction && quantity != Quantity::verify) {
        if (t_steps < 2)
            throw std::invalid_argument("--t-steps must be >= 2");
        if (!(t_start < t_stop))
            throw std::invalid_argument("--t-start must be smaller than --t-stop");
    }
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument("--tail-tol must lie in (0, 1)");
    if (grid_theta < 1 || grid_phi < 1)
        throw std::invalid_argument("--grid-theta and --grid-phi must be positive");
    if (quantity == Quantity::verify && samples < 1)
        throw std::invalid_argument("--samples must be positive");
}

double RunConfig::squeeze() const
{
    if (r)
        return *r;
    return squeeze_from_sinh2(sinh2r.value_or(kFigureSinh2r));
}

std::vector<double> RunConfig::time_grid() const
{
    std::vector<double> t(t_steps);
    const double step = (t_stop - t_start) / static_cast<double>(t_steps - 1);
    for (std::size_t i = 0; i < t_steps; ++i)
        t[i] = t_start + step * static_cast<double>(i);
    t.back() = t_stop;
    return t;
}

Table run_sweep(const RunConfig& config)
{
    config.validate();
    if (config.quantity == Quantity::verify)
        return verify(config);
    if (config.quantity == Quantity::qfunction)
        throw std::invalid_argument("qfunction is a snapshot, not a time sweep");
    const std::string column = config.quantity == Quantity::linear_entropy ? "linear_entropy"
                               : config.quantity == Quantity::vn_entropy   ? "vn_entropy"
                                                                           : to_string(config.quantity);
    return time_series(config.quantity, {{column, config.theta, config.phi, config.eta}}, config);
}

Table run_qfunction_snapshot(const RunConfig& config)
{
    config.validate();
    return snapshot({{config.snapshot_time, {"q", config.theta, config.phi, config.eta}}}, config);
}

Table run(const RunConfig& config)
{
    return config.quantity == Quantity::qfunction ? run_qfunction_snapshot(config) : run_sweep(config);
}

Table run_figure(int figure, const RunConfig& config)
{
    RunConfig cfg = config;
    switch (figure) {
    case 1:
        cfg.quantity = Quantity::inversion;
        cfg.validate();
        // The third set is the one named in the discussion of the dashed curve.
        return time_series(Quantity::inversion,
                           {{"inversion_a", 0.0, 0.0, 0.0},
                            {"inversion_b", kPi / 2, kPi / 6, 0.0},
                            {"inversion_text", kPi / 2, kPi / 2, 0.0}},
                           cfg);
    case 2:
        cfg.quantity = Quantity::linear_entropy;
        cfg.validate();
        return time_series(Quantity::linear_entropy,
                           {{"linear_entropy_a", 0.0, 0.0, 0.0},
                            {"linear_entropy_b", kPi / 2, kPi / 6, 0.0},
                            {"linear_entropy_c", 0.0, 0.0, 0.03}},
                           cfg);
    case 3:
        cfg.quantity = Quantity::qfunction;
        cfg.validate();
        return snapshot({{kPi / 2, {"a", 0.0, 0.0, 0.0}},
                         {kPi, {"b", kPi / 2, kPi / 2, 0.0}},
                         {kPi / 2, {"c", 0.0, 0.0, 0.03}}},
                        cfg);
    case 4:
        cfg.quantity = Quantity::wehrl;
        cfg.validate();
        return time_series(Quantity::wehrl, {{"wehrl_a", 0.0, 0.0, 0.0}, {"wehrl_b", 0.0, 0.0, 0.03}}, cfg);
    default:
        throw std::invalid_argument("figure must be 1, 2, 3 or 4");
    }
}

std::string format_number(double v) { return fmt::format("{:.12g}", v); }

void write_csv(std::ostream& os, const Table& table)
{
    for (std::size_t k = 0; k < table.columns.size(); ++k)
        os << (k ? "," : "") << table.columns[k];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            os << (k ? "," : "") << format_number(row[k]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& table, const RunConfig& config)
{
    nlohmann::ordered_json cfg;
    cfg["quantity"] = to_string(config.quantity);
    cfg["r"] = round_to_output(config.squeeze());
    if (config.sinh2r)
        cfg["sinh2r"] = *config.sinh2r;
    cfg["theta"] = round_to_output(config.theta);
    cfg["phi"] = round_to_output(config.phi);
    cfg["eta"] = config.eta;
    cfg["t_start"] = round_to_output(config.t_start);
    cfg["t_stop"] = round_to_output(config.t_stop);
    cfg["t_steps"] = config.t_steps;
    cfg["tail_tol"] = config.tail_tol;
    cfg["grid_theta"] = config.grid_theta;
    cfg["grid_phi"] = config.grid_phi;
    if (config.quantity == Quantity::qfunction)
        cfg["time"] = round_to_output(config.snapshot_time);
    if (config.quantity == Quantity::verify) {
        cfg["samples"] = config.samples;
        cfg["seed"] = config.seed;
        cfg["dense"] = config.dense_oracle;
    }

    nlohmann::ordered_json doc;
    doc["config"] = cfg;
    doc["columns"] = table.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        auto out = nlohmann::json::array();
        for (const double v : row)
            out.push_back(round_to_output(v));
        rows.push_back(std::move(out));
    }
    doc["rows"] = std::move(rows);
    if (!table.summary.empty()) {
        nlohmann::ordered_json summary;
        for (const auto& [k, v] : table.summary)
            summary[k] = round_to_output(v);
        doc["summary"] = summary;
    }
    os << doc.dump(1) << '\n';
}

void write_table(std::ostream& os, const Table& table, const RunConfig& config)
{
    if (config.format == OutputFormat::json)
        write_json(os, table, config);
    else
        write_csv(os, table);
}

} // namespace tjcm::app
