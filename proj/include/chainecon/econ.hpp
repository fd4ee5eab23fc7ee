#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chainecon/attack_value.hpp"
#include "chainecon/params.hpp"

// Closed forms of the sustainability model. Every function here is pure and
// immutable-input; all of them are safe to call from any number of threads.
//
// The three conditions, in dollars per block:
//   free entry       eP/N = c            (PoS: S = P/(rN), e-independent)
//   deterrence       AtNc - teP >= V(e)  (PoS: ANteSr - teP >= V(e))
//   sustainability   (A-1)ePt >= V(e)    (identical for PoW and PoS)

namespace chainecon {

// Default tolerances. rel_tol guards closed-form identities, fd_tol guards
// finite-difference agreement (relative), abs_tol is the dollar half-width of
// the sustainability boundary band.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kFdTol = 1e-6;
inline constexpr double kAbsTol = 1e-6;

// Central-difference step, relative with an absolute floor.
inline double fd_step(double x) { return std::max(1e-6, 1e-6 * std::abs(x)); }

enum class NodeMode { continuous, integer };

namespace detail {
inline void require_positive(double x, const char* name) {
    if (!(x > 0.0)) throw std::domain_error(std::string("econ: ") + name + " must be > 0");
}
inline void require_escrow(double t) {
    if (!(t >= 1.0)) throw std::domain_error("econ: escrow_blocks (t) must be >= 1");
}
inline void require_supermajority(double a) {
    if (!(a > 1.0)) throw std::domain_error("econ: supermajority (A) must be > 1");
}
}  // namespace detail

/// Free-entry node count for PoW: the zero-profit entry point eP/c.
/// Integer mode returns the largest whole N with eP/N >= c (0 when even a
/// single node cannot break even); the result is nudged so that eP/N >= c and
/// eP/(N+1) < c hold under the same floating-point division the caller sees.
inline double equilibrium_node_count(double exchange_rate, double block_reward,
                                     double node_cost,
                                     NodeMode mode = NodeMode::continuous) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_positive(block_reward, "block_reward (P)");
    detail::require_positive(node_cost, "node_cost (c)");
    const double revenue = exchange_rate * block_reward;
    if (mode == NodeMode::continuous) return revenue / node_cost;
    double n = std::floor(revenue / node_cost);
    if (n < 0.0) n = 0.0;
    while (revenue / (n + 1.0) >= node_cost) n += 1.0;
    while (n >= 1.0 && revenue / n < node_cost) n -= 1.0;
    return n;
}

/// Free-entry stake for PoS: S = P/(rN). Does not depend on the exchange
/// rate; the number of nodes is pinned by the stake level alone.
inline double equilibrium_stake(double block_reward, double interest_rate,
                                double node_count) {
    detail::require_positive(block_reward, "block_reward (P)");
    detail::require_positive(interest_rate, "interest_rate (r)");
    detail::require_positive(node_count, "node_count (N)");
    return block_reward / (interest_rate * node_count);
}

/// Smallest per-node cost deterring an attack on a PoW network of N nodes:
/// c_min = (V(e) + teP)/(AtN). Any c >= c_min makes AtNc - teP >= V(e).
inline double min_deterring_cost(const AttackValueModel& attack_value,
                                 double exchange_rate, double block_reward,
                                 double supermajority, double escrow_blocks,
                                 double node_count) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_positive(block_reward, "block_reward (P)");
    detail::require_supermajority(supermajority);
    detail::require_escrow(escrow_blocks);
    detail::require_positive(node_count, "node_count (N)");
    const double v = attack_value.value(exchange_rate);
    return (v + escrow_blocks * exchange_rate * block_reward) /
           (supermajority * escrow_blocks * node_count);
}

/// Smallest per-node stake deterring an attack on a PoS network:
/// S_min = (V(e) + teP)/(eANtr). e*r*S_min equals min_deterring_cost.
inline double min_deterring_stake(const AttackValueModel& attack_value,
                                  double exchange_rate, double block_reward,
                                  double supermajority, double escrow_blocks,
                                  double node_count, double interest_rate) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_positive(block_reward, "block_reward (P)");
    detail::require_supermajority(supermajority);
    detail::require_escrow(escrow_blocks);
    detail::require_positive(node_count, "node_count (N)");
    detail::require_positive(interest_rate, "interest_rate (r)");
    const double v = attack_value.value(exchange_rate);
    return (v + escrow_blocks * exchange_rate * block_reward) /
           (exchange_rate * supermajority * node_count * escrow_blocks * interest_rate);
}

/// Outcome of the sustainability condition (A-1)ePt >= V(e).
struct SustainabilityVerdict {
    double margin = 0.0;       // (A-1)ePt - V(e), dollars
    bool sustainable = false;  // margin >= 0 (weak inequality)
    bool boundary = false;     // |margin| <= boundary_tol
};

/// The sustainability condition. Free entry and deterrence are jointly
/// satisfiable exactly when the margin (A-1)ePt - V(e) is non-negative; the
/// boundary flag marks margins within boundary_tol dollars of zero.
inline SustainabilityVerdict sustainability_condition(
    const AttackValueModel& attack_value, double exchange_rate, double block_reward,
    double supermajority, double escrow_blocks, double boundary_tol = kAbsTol) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_positive(block_reward, "block_reward (P)");
    detail::require_supermajority(supermajority);
    detail::require_escrow(escrow_blocks);
    SustainabilityVerdict verdict;
    verdict.margin = (supermajority - 1.0) * exchange_rate * block_reward * escrow_blocks -
                     attack_value.value(exchange_rate);
    verdict.sustainable = verdict.margin >= 0.0;
    verdict.boundary = std::abs(verdict.margin) <= boundary_tol;
    return verdict;
}

/// Kind-tagged overload: the condition is identical for PoW and PoS by
/// construction (same code path), so results are bit-identical across kinds.
inline SustainabilityVerdict sustainability_condition(
    ConsensusKind /*kind*/, const AttackValueModel& attack_value, double exchange_rate,
    double block_reward, double supermajority, double escrow_blocks,
    double boundary_tol = kAbsTol) {
    return sustainability_condition(attack_value, exchange_rate, block_reward,
                                    supermajority, escrow_blocks, boundary_tol);
}

/// Minimum block reward sustaining the network: P* = V(e)/(e(A-1)t).
/// The sustainability margin is exactly zero at P*.
inline double min_block_reward(const AttackValueModel& attack_value,
                               double exchange_rate, double supermajority,
                               double escrow_blocks) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_supermajority(supermajority);
    detail::require_escrow(escrow_blocks);
    return attack_value.value(exchange_rate) /
           (exchange_rate * (supermajority - 1.0) * escrow_blocks);
}

/// Kind-independent by construction (same closed form for PoW and PoS).
inline double min_block_reward(ConsensusKind /*kind*/, const AttackValueModel& attack_value,
                               double exchange_rate, double supermajority,
                               double escrow_blocks) {
    return min_block_reward(attack_value, exchange_rate, supermajority, escrow_blocks);
}

/// Attacker's profit at an explicit node count (the node_count field of the
/// params is ignored). Allows n = 0: an empty network costs nothing to
/// control. Used by the simulator during entry transients.
inline double attack_profit_at(ConsensusKind kind, const AttackValueModel& attack_value,
                               const NetworkParams& params, double node_count) {
    if (node_count < 0.0) throw std::domain_error("econ: node_count must be >= 0");
    const double v = attack_value.value(params.exchange_rate);
    const double t = static_cast<double>(params.escrow_blocks);
    const double reward = t * params.exchange_rate * params.block_reward;
    if (kind == ConsensusKind::pow) {
        const double control = (params.supermajority * node_count) * params.node_cost * t;
        return v - (control - reward);
    }
    if (!params.has_stake_terms())
        throw std::domain_error("econ: proof-of-stake attack profit requires stake (S) and interest_rate (r)");
    const double control = params.supermajority * node_count * t *
                           params.exchange_rate * params.stake * params.interest_rate;
    return v - (control - reward);
}

/// Attacker's profit from taking the network for t blocks:
///   PoW: V(e) - (ANc - eP)t
///   PoS: V(e) - (ANteSr - teP); the attacker keeps every block reward on the
///        alternative chain because slashing punishes anyone else building on it.
/// An attack is rational exactly when the result is positive.
inline double attack_profit(ConsensusKind kind, const AttackValueModel& attack_value,
                            const NetworkParams& params) {
    params.validate();
    return attack_profit_at(kind, attack_value, params, params.node_count);
}

/// Per-block dollar cost of running the network: N*c. For PoS parameter sets
/// node_cost is r*e*S by construction, so this is the stake's opportunity
/// cost e*S*N*r expressed in dollars.
inline double total_network_cost(ConsensusKind /*kind*/, const NetworkParams& params) {
    params.validate();
    return params.node_count * params.node_cost;
}

enum class SensitivityBranch { free_entry, binding_ic };

/// dN/dP: e/c along free entry, e/(Ac) along the binding deterrence
/// constraint. The free-entry slope strictly exceeds the deterrence slope,
/// which is why raising the reward promotes sustainability.
inline double node_count_sensitivity(SensitivityBranch branch, double exchange_rate,
                                     double node_cost, double supermajority = 0.0) {
    detail::require_positive(exchange_rate, "exchange_rate (e)");
    detail::require_positive(node_cost, "node_cost (c)");
    if (branch == SensitivityBranch::free_entry) return exchange_rate / node_cost;
    detail::require_supermajority(supermajority);
    return exchange_rate / (supermajority * node_cost);
}

}  // namespace chainecon
