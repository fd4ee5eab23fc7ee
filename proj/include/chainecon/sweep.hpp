#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chainecon/econ.hpp"
#include "chainecon/errors.hpp"

// Parameter-sweep engine: Cartesian grids over up to three named axes, one
// row per grid point, deterministic row order (outer-to-inner axis,
// ascending). Output files are byte-identical for identical specs.

namespace chainecon {

enum class AxisSpacing { linear, log };

// Axis names follow the model's symbols: c, P, e, A, t, r, S, N, V_scale.
// V_scale replaces the attack-value model's scale coefficient per point.
// A t axis is evaluated as a real-valued escrow duration (>= 1) through the
// scalar operations; log spacing lands between whole blocks.
struct AxisSpec {
    std::string param;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    AxisSpacing spacing = AxisSpacing::linear;
};

enum class SweepOutput {
    verdict,        // 1 sustainable (margin >= 0), else 0
    margin,         // (A-1)ePt - V(e), dollars
    min_reward,     // V(e)/(e(A-1)t), tokens
    fe_curve,       // eP/N, dollars
    ic_curve,       // (V(e)+teP)/(AtN), dollars
    designer_cost,  // (V(e)+teP)/(At): deterrence floor, achievable iff margin >= 0
    elasticity      // (e/V)V'(e); NaN where V(e) = 0
};

inline const char* to_string(SweepOutput o) {
    switch (o) {
        case SweepOutput::verdict: return "verdict";
        case SweepOutput::margin: return "margin";
        case SweepOutput::min_reward: return "min_reward";
        case SweepOutput::fe_curve: return "fe_curve";
        case SweepOutput::ic_curve: return "ic_curve";
        case SweepOutput::designer_cost: return "designer_cost";
        case SweepOutput::elasticity: return "elasticity";
    }
    return "?";
}

// Values for the model symbols; unset entries must be covered by an axis
// before an output needing them is evaluated.
struct ParamSet {
    std::optional<double> node_cost;       // c
    std::optional<double> block_reward;    // P
    std::optional<double> exchange_rate;   // e
    std::optional<double> supermajority;   // A
    std::optional<double> escrow_blocks;   // t
    std::optional<double> interest_rate;   // r
    std::optional<double> stake;           // S
    std::optional<double> node_count;      // N
    std::optional<double> value_scale;     // V_scale

    std::optional<double>* slot(const std::string& name) {
        if (name == "c") return &node_cost;
        if (name == "P") return &block_reward;
        if (name == "e") return &exchange_rate;
        if (name == "A") return &supermajority;
        if (name == "t") return &escrow_blocks;
        if (name == "r") return &interest_rate;
        if (name == "S") return &stake;
        if (name == "N") return &node_count;
        if (name == "V_scale") return &value_scale;
        return nullptr;
    }
    const std::optional<double>* slot(const std::string& name) const {
        return const_cast<ParamSet*>(this)->slot(name);
    }
};

struct SweepSpec {
    std::vector<AxisSpec> axes;  // 1 to 3
    ParamSet fixed;
    AttackValueModel attack_value;
    std::vector<SweepOutput> outputs;

    void validate() const;
};

struct SweepResult {
    std::vector<std::string> columns;        // param_<axis>..., output_<name>...
    std::vector<std::vector<double>> rows;   // one per grid point
};

namespace detail {

inline std::vector<double> axis_values(const AxisSpec& axis) {
    std::vector<double> xs(static_cast<std::size_t>(axis.points));
    if (axis.spacing == AxisSpacing::log) {
        const double llo = std::log(axis.min);
        const double lhi = std::log(axis.max);
        for (int i = 0; i < axis.points; ++i)
            xs[static_cast<std::size_t>(i)] =
                std::exp(llo + (lhi - llo) * static_cast<double>(i) / (axis.points - 1));
    } else {
        for (int i = 0; i < axis.points; ++i)
            xs[static_cast<std::size_t>(i)] =
                axis.min + (axis.max - axis.min) * static_cast<double>(i) / (axis.points - 1);
    }
    xs.front() = axis.min;
    xs.back() = axis.max;
    return xs;
}

inline double required(const ParamSet& point, const char* name, SweepOutput output) {
    const auto* s = point.slot(name);
    if (!s || !s->has_value())
        throw SweepSpecError(std::string("sweep: output '") + to_string(output) +
                             "' needs parameter '" + name +
                             "' fixed or on an axis");
    return **s;
}

}  // namespace detail

inline void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 3)
        throw SweepSpecError("sweep: between 1 and 3 axes required");
    if (outputs.empty()) throw SweepSpecError("sweep: empty output selection");
    ParamSet probe = fixed;
    for (const AxisSpec& axis : axes) {
        auto* s = probe.slot(axis.param);
        if (!s) throw SweepSpecError("sweep: unknown axis name '" + axis.param + "'");
        if (!(axis.min > 0.0) || !(axis.max > axis.min))
            throw SweepSpecError("sweep: axis '" + axis.param +
                                 "' bounds must be positive and ordered (min < max)");
        if (axis.points < 2)
            throw SweepSpecError("sweep: axis '" + axis.param + "' needs at least 2 points");
        *s = axis.min;  // mark as provided for the requirement probe
    }
    // Evaluate every output once at the axis minima so missing parameters are
    // reported before any rows are produced.
    struct Need { SweepOutput out; std::vector<const char*> names; };
    const Need needs[] = {
        {SweepOutput::verdict, {"e", "P", "A", "t"}},
        {SweepOutput::margin, {"e", "P", "A", "t"}},
        {SweepOutput::min_reward, {"e", "A", "t"}},
        {SweepOutput::fe_curve, {"e", "P", "N"}},
        {SweepOutput::ic_curve, {"e", "P", "A", "t", "N"}},
        {SweepOutput::designer_cost, {"e", "P", "A", "t"}},
        {SweepOutput::elasticity, {"e"}},
    };
    for (const SweepOutput out : outputs)
        for (const Need& need : needs)
            if (need.out == out)
                for (const char* name : need.names) detail::required(probe, name, out);
}

/// Evaluates the grid. Grid points are independent; rows are emitted in
/// deterministic order regardless of evaluation strategy.
inline SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    for (const AxisSpec& axis : spec.axes) result.columns.push_back("param_" + axis.param);
    for (const SweepOutput out : spec.outputs)
        result.columns.push_back(std::string("output_") + to_string(out));

    std::vector<std::vector<double>> grids;
    grids.reserve(spec.axes.size());
    std::size_t total = 1;
    for (const AxisSpec& axis : spec.axes) {
        grids.push_back(detail::axis_values(axis));
        total *= grids.back().size();
    }
    result.rows.reserve(total);

    std::vector<std::size_t> idx(spec.axes.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        // outer-to-inner: axes[0] varies slowest
        std::size_t rem = flat;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            idx[a] = rem % grids[a].size();
            rem /= grids[a].size();
        }
        ParamSet point = spec.fixed;
        std::vector<double> row;
        row.reserve(result.columns.size());
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const double value = grids[a][idx[a]];
            *point.slot(spec.axes[a].param) = value;
            row.push_back(value);
        }
        const AttackValueModel model = point.value_scale
                                           ? spec.attack_value.with_scale(*point.value_scale)
                                           : spec.attack_value;
        for (const SweepOutput out : spec.outputs) {
            double value = 0.0;
            switch (out) {
                case SweepOutput::verdict:
                case SweepOutput::margin: {
                    const auto verdict = sustainability_condition(
                        model, detail::required(point, "e", out),
                        detail::required(point, "P", out), detail::required(point, "A", out),
                        detail::required(point, "t", out));
                    value = out == SweepOutput::verdict ? (verdict.sustainable ? 1.0 : 0.0)
                                                        : verdict.margin;
                    break;
                }
                case SweepOutput::min_reward:
                    value = min_block_reward(model, detail::required(point, "e", out),
                                             detail::required(point, "A", out),
                                             detail::required(point, "t", out));
                    break;
                case SweepOutput::fe_curve:
                    value = detail::required(point, "e", out) *
                            detail::required(point, "P", out) /
                            detail::required(point, "N", out);
                    break;
                case SweepOutput::ic_curve:
                    value = min_deterring_cost(
                        model, detail::required(point, "e", out),
                        detail::required(point, "P", out), detail::required(point, "A", out),
                        detail::required(point, "t", out), detail::required(point, "N", out));
                    break;
                case SweepOutput::designer_cost: {
                    const double e = detail::required(point, "e", out);
                    const double p = detail::required(point, "P", out);
                    const double a = detail::required(point, "A", out);
                    const double t = detail::required(point, "t", out);
                    value = (model.value(e) + t * e * p) / (a * t);
                    break;
                }
                case SweepOutput::elasticity:
                    try {
                        value = model.elasticity(detail::required(point, "e", out));
                    } catch (const UndefinedElasticityError&) {
                        value = std::numeric_limits<double>::quiet_NaN();
                    }
                    break;
            }
            row.push_back(value);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

/// One sample of the free-entry and deterrence cost curves at a node count.
/// Their ratio AteP/(V+teP) is N-invariant: both curves scale as 1/N, so one
/// regime (which curve lies above) holds over the whole range.
struct FrontierPoint {
    double nodes = 0.0;
    double fe_cost = 0.0;  // eP/N
    double ic_cost = 0.0;  // (V(e)+teP)/(AtN)
};

/// Samples both cost curves over a node-count range. fe_cost >= ic_cost at
/// every N exactly when the sustainability margin is >= 0 (the stable
/// regime); fe_cost < ic_cost everywhere otherwise.
inline std::vector<FrontierPoint> fe_ic_frontier(const AttackValueModel& attack_value,
                                                 double exchange_rate, double block_reward,
                                                 double supermajority, double escrow_blocks,
                                                 const AxisSpec& node_axis) {
    if (!(node_axis.min > 0.0) || !(node_axis.max > node_axis.min) || node_axis.points < 2)
        throw SweepSpecError("frontier: node range must be positive and ordered with >= 2 points");
    std::vector<FrontierPoint> points;
    points.reserve(static_cast<std::size_t>(node_axis.points));
    for (const double n : detail::axis_values(node_axis)) {
        FrontierPoint fp;
        fp.nodes = n;
        fp.fe_cost = exchange_rate * block_reward / n;
        fp.ic_cost = min_deterring_cost(attack_value, exchange_rate, block_reward,
                                        supermajority, escrow_blocks, n);
        points.push_back(fp);
    }
    return points;
}

enum class PlotFormat { csv, jsonl };

namespace detail {

inline std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Writes the result set: CSV with a header row, or line-delimited JSON
/// records keyed by the column names. Floats are the shortest decimal that
/// round-trips (17 significant digits suffice to read them back exactly);
/// newlines are line-feed only. Non-finite values appear as "nan"/"inf" in
/// CSV and null in JSONL.
inline void emit_plot_data(const SweepResult& result, PlotFormat format, std::ostream& os) {
    if (result.rows.empty() || result.columns.empty())
        throw SweepSpecError("emit: empty result set");
    if (format == PlotFormat::csv) {
        std::string line;
        for (std::size_t i = 0; i < result.columns.size(); ++i) {
            if (i) line += ',';
            line += result.columns[i];
        }
        line += '\n';
        os << line;
        for (const auto& row : result.rows) {
            line.clear();
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) line += ',';
                line += detail::shortest(row[i]);
            }
            line += '\n';
            os << line;
        }
    } else {
        for (const auto& row : result.rows) {
            std::string line = "{";
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) line += ',';
                line += '"';
                line += result.columns[i];
                line += "\":";
                line += std::isfinite(row[i]) ? detail::shortest(row[i]) : "null";
            }
            line += "}\n";
            os << line;
        }
    }
    if (!os) throw std::runtime_error("emit: write failed");
}

inline void emit_plot_data(const SweepResult& result, PlotFormat format,
                           const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("emit: cannot open '" + path.string() + "' for writing");
    emit_plot_data(result, format, os);
    os.flush();
    if (!os) throw std::runtime_error("emit: write to '" + path.string() + "' failed");
}

}  // namespace chainecon
