#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainecon/econ.hpp"
#include "chainecon/errors.hpp"

// The designer problem: choose (c, N, P) for PoW or (S, N, P) for PoS to
// minimise the per-block network cost subject to attack deterrence
// (AtNc - teP >= V) and node participation (Nc <= eP).
//
// With an endogenous reward the optimum is the permissionless one: P* =
// V/(e(A-1)t) with both constraints binding and cost eP*. With a fixed
// reward and a non-negative sustainability margin, regulating N lets the
// network sit on the deterrence constraint at cost (V + teP)/(At) < eP.

namespace chainecon {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Search box for the grid oracle and the reported (c, N) split. Axes are
// strictly positive; cost_or_stake is c (dollars) for PoW, S (tokens) for PoS.
struct DesignerBounds {
    Interval cost_or_stake;
    Interval nodes;
    Interval reward;
};

enum class RewardRegime { fixed, endogenous };

struct DesignerProblem {
    ConsensusKind kind = ConsensusKind::pow;
    AttackValueModel attack_value;
    double exchange_rate = 0.0;  // e
    double supermajority = 0.0;  // A
    double escrow_blocks = 0.0;  // t
    double interest_rate = 0.0;  // r; required for PoS to convert cost to stake
    RewardRegime regime = RewardRegime::endogenous;
    double fixed_reward = 0.0;   // P when regime == fixed
    DesignerBounds bounds;
    std::optional<double> pinned_nodes;  // caller-chosen N for the cost split

    void validate() const {
        detail::require_positive(exchange_rate, "exchange_rate (e)");
        detail::require_supermajority(supermajority);
        detail::require_escrow(escrow_blocks);
        if (kind == ConsensusKind::pos && !(interest_rate > 0.0))
            throw std::domain_error("designer: proof of stake requires interest_rate (r) > 0");
        if (regime == RewardRegime::fixed && !(fixed_reward > 0.0))
            throw std::domain_error("designer: fixed regime requires a block reward (P) > 0");
        check_interval(bounds.cost_or_stake, "cost_or_stake");
        check_interval(bounds.nodes, "nodes");
        check_interval(bounds.reward, "reward");
        if (pinned_nodes &&
            (!(*pinned_nodes >= bounds.nodes.lo) || !(*pinned_nodes <= bounds.nodes.hi)))
            throw std::domain_error("designer: pinned node count must lie within the node bounds");
    }

private:
    static void check_interval(const Interval& iv, const char* name) {
        if (!(iv.lo > 0.0) || !(iv.hi >= iv.lo))
            throw std::domain_error(std::string("designer: bounds for ") + name +
                                    " must satisfy 0 < lo <= hi");
    }
};

struct DesignerSolution {
    double cost_or_stake = 0.0;  // c (PoW, dollars) or S (PoS, tokens)
    double nodes = 0.0;
    double reward = 0.0;         // P, tokens
    double total_cost = 0.0;     // dollars per block
    bool binds_ic = false;       // deterrence constraint active at the optimum
    bool binds_fe = false;       // participation constraint active
    bool feasible = false;
    std::string note;            // how the indeterminate (c, N) split was resolved
};

namespace detail {

// The cost pins cN (PoW) or eSNr (PoS) but not the split; the split is
// economically indeterminate, so we report the caller's N when pinned and the
// log-midpoint of the node bounds otherwise.
inline void fill_split(const DesignerProblem& problem, DesignerSolution& s) {
    if (problem.pinned_nodes) {
        s.nodes = *problem.pinned_nodes;
        s.note = "node count pinned by caller; cost split follows";
    } else {
        s.nodes = std::exp(0.5 * (std::log(problem.bounds.nodes.lo) +
                                  std::log(problem.bounds.nodes.hi)));
        s.note = "cost-node split is indeterminate; node count reported at the "
                 "log-midpoint of the node bounds";
    }
    if (problem.kind == ConsensusKind::pow) {
        s.cost_or_stake = s.total_cost / s.nodes;
    } else {
        s.cost_or_stake =
            s.total_cost / (problem.exchange_rate * problem.interest_rate * s.nodes);
    }
}

}  // namespace detail

/// Analytic solution of the designer problem.
///
/// Endogenous reward: P = V/(e(A-1)t), cost eP with both constraints binding;
/// identical to the permissionless optimum, so a permissioned network saves
/// nothing. Fixed reward with a non-negative sustainability margin: cost
/// (V + teP)/(At) on the deterrence constraint alone (participation also
/// binds exactly at the boundary). Fixed reward with a negative margin: no
/// (c, N) satisfies both constraints; the result is marked infeasible and
/// total_cost reports the deterrence floor (V + teP)/(At) — the cost a
/// deterring network would need, which exceeds what entry can support.
///
/// The bounds box drives the grid oracle and the reported split only; the
/// analytic reward is not clamped to it.
inline DesignerSolution solve_designer(const DesignerProblem& problem) {
    problem.validate();
    const double e = problem.exchange_rate;
    const double a = problem.supermajority;
    const double t = problem.escrow_blocks;
    const double v = problem.attack_value.value(e);

    DesignerSolution s;
    if (problem.regime == RewardRegime::endogenous) {
        s.reward = min_block_reward(problem.attack_value, e, a, t);
        s.total_cost = e * s.reward;
        s.feasible = true;
        s.binds_ic = true;
        s.binds_fe = true;
    } else {
        s.reward = problem.fixed_reward;
        const auto verdict = sustainability_condition(problem.attack_value, e, s.reward, a, t);
        s.total_cost = (v + t * e * s.reward) / (a * t);
        if (verdict.margin < 0.0) {
            s.feasible = false;
            s.note = "sustainability margin negative: deterrence floor exceeds eP, "
                     "no (c, N) satisfies both constraints; ";
        } else {
            s.feasible = true;
            s.binds_ic = true;
            s.binds_fe = std::abs(s.total_cost - e * s.reward) <= kAbsTol;
        }
    }
    const std::string prefix = s.note;
    detail::fill_split(problem, s);
    s.note = prefix.empty() ? s.note : prefix + s.note;
    return s;
}

/// Per-block saving of a permissioned network over free entry at a fixed
/// reward: eP - (V + teP)/(At) = margin/(At). Computed through the margin so
/// savings*A*t reproduces the sustainability margin to a few ulp even at the
/// boundary. Zero exactly when the margin is zero.
inline double cost_savings(const DesignerProblem& problem) {
    problem.validate();
    if (problem.regime != RewardRegime::fixed)
        throw InvalidRegimeError("cost_savings: defined for the fixed-reward regime only");
    const auto verdict =
        sustainability_condition(problem.attack_value, problem.exchange_rate,
                                 problem.fixed_reward, problem.supermajority,
                                 problem.escrow_blocks);
    if (verdict.margin < 0.0)
        throw InfeasibleError("cost_savings: sustainability margin is negative");
    return verdict.margin / (problem.supermajority * problem.escrow_blocks);
}

namespace detail {

inline std::vector<double> log_axis(const Interval& iv, int points) {
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double llo = std::log(iv.lo);
    const double lhi = std::log(iv.hi);
    for (int i = 0; i < points; ++i)
        xs[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (points - 1));
    xs.front() = iv.lo;
    xs.back() = iv.hi;
    return xs;
}

}  // namespace detail

/// Brute-force verification of solve_designer: scans a log-spaced grid over
/// the (c or S, N, P) box (P pinned in the fixed regime) and returns the
/// cheapest feasible grid point. Never beats the analytic optimum and
/// converges to it as the resolution grows. Infeasible grids produce an
/// infeasible result, not an error. Deterministic: ties break toward the
/// lexicographically smallest (cost_or_stake, nodes, reward) grid index.
inline DesignerSolution grid_search_oracle(const DesignerProblem& problem, int resolution) {
    problem.validate();
    if (resolution < 16)
        throw std::domain_error("grid oracle: resolution must be >= 16 points per axis");

    const double e = problem.exchange_rate;
    const double a = problem.supermajority;
    const double t = problem.escrow_blocks;
    const double r = problem.interest_rate;
    const double v = problem.attack_value.value(e);
    const bool pos = problem.kind == ConsensusKind::pos;

    const auto xs = detail::log_axis(problem.bounds.cost_or_stake, resolution);
    const auto ns = detail::log_axis(problem.bounds.nodes, resolution);
    const std::vector<double> ps =
        problem.regime == RewardRegime::fixed
            ? std::vector<double>{problem.fixed_reward}
            : detail::log_axis(problem.bounds.reward, resolution);

    DesignerSolution best;
    best.feasible = false;
    double best_cost = 0.0;
    std::int64_t best_xi = 0, best_ni = 0, best_pi = 0;

    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        const double n = ns[ni];
        for (std::size_t pi = 0; pi < ps.size(); ++pi) {
            const double p = ps[pi];
            const double revenue = e * p;
            const double reward_stream = t * revenue;
            // Both constraints are monotone in the cost axis: deterrence is a
            // floor, participation a cap, so the first feasible x in the
            // column is the column's cheapest point.
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                const double x = xs[xi];
                double cost, control;
                if (pos) {
                    cost = ((e * x) * n) * r;
                    control = ((((a * n) * t) * e) * x) * r;
                } else {
                    cost = n * x;
                    control = ((a * n) * x) * t;
                }
                if (cost > revenue) break;            // participation fails from here up
                if (control - reward_stream < v) continue;  // deterrence not yet met
                const bool improves =
                    !best.feasible || cost < best_cost ||
                    (cost == best_cost &&
                     std::tuple<std::int64_t, std::int64_t, std::int64_t>(
                         static_cast<std::int64_t>(xi), static_cast<std::int64_t>(ni),
                         static_cast<std::int64_t>(pi)) <
                         std::tie(best_xi, best_ni, best_pi));
                if (improves) {
                    best.feasible = true;
                    best_cost = cost;
                    best_xi = static_cast<std::int64_t>(xi);
                    best_ni = static_cast<std::int64_t>(ni);
                    best_pi = static_cast<std::int64_t>(pi);
                    best.cost_or_stake = x;
                    best.nodes = n;
                    best.reward = p;
                    best.total_cost = cost;
                }
                break;
            }
        }
    }

    if (!best.feasible) {
        best.note = "no feasible grid point in the bounds box";
        return best;
    }
    // Activity flags are grid-resolution approximations: a constraint counts
    // as binding when the point sits within one cost-axis step of it.
    const double step = std::pow(problem.bounds.cost_or_stake.hi /
                                     problem.bounds.cost_or_stake.lo,
                                 1.0 / (resolution - 1));
    const double revenue = e * best.reward;
    double control = pos ? ((((a * best.nodes) * t) * e) * best.cost_or_stake) * r
                         : ((a * best.nodes) * best.cost_or_stake) * t;
    best.binds_ic = control - t * revenue <= v * step + (step - 1.0) * t * revenue;
    best.binds_fe = best.total_cost * step >= revenue;
    best.note = "grid oracle optimum";
    return best;
}

}  // namespace chainecon
