#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainecon/econ.hpp"
#include "chainecon/rng.hpp"

// Agent-based oracle for the closed forms. Honest nodes enter while entry is
// profitable and leave while incumbency is not; a rational attacker watches
// the network every round.
//
// The attacker's profit is reported at every visited state, but the attack
// itself executes only at free-entry rest points (rounds where entry/exit
// leaves N unchanged): below the free-entry count even honest participation
// is profitable, so transient "attack profits" merely restate that the
// network is under-provisioned, and honest entry competes the opportunity
// away. An executed attack terminates the run.

namespace chainecon {

enum class EntryRule { one_per_round, proportional };

struct SimConfig {
    ConsensusKind kind = ConsensusKind::pow;
    NetworkParams params;  // node_count is the initial N
    AttackValueModel attack_value;
    std::int64_t rounds = 0;
    std::uint64_t seed = 0;
    EntryRule entry_rule = EntryRule::one_per_round;

    void validate() const {
        params.validate();
        if (rounds < 1) throw std::domain_error("sim: rounds must be >= 1");
        if (kind == ConsensusKind::pos && !params.has_stake_terms())
            throw std::domain_error("sim: proof of stake requires stake (S) and interest_rate (r)");
    }
};

struct TraceRow {
    std::int64_t round = 0;       // 1-based
    std::int64_t node_count = 0;  // after this round's entry/exit step
    double node_profit = 0.0;     // eP/N - c (prospective entrant's eP - c when N = 0)
    double attack_profit = 0.0;   // closed-form profit at this round's N
    bool attacked = false;        // attack executed this round; terminates the run
};

struct SimOutcome {
    std::vector<TraceRow> trace;
    std::int64_t final_node_count = 0;
    bool converged = false;  // N unchanged over the trailing 10% of executed rounds
    bool attacked = false;
};

/// Runs the entry/attack dynamics. Deterministic for a given (config, seed):
/// the pseudo-random source only selects which incumbent exits, never whether
/// the count changes.
inline SimOutcome run_sim(const SimConfig& config) {
    config.validate();
    const NetworkParams& p = config.params;
    const double revenue = p.exchange_rate * p.block_reward;
    const double cost = p.node_cost;  // PoS: r*e*S by construction
    const std::int64_t target = static_cast<std::int64_t>(equilibrium_node_count(
        p.exchange_rate, p.block_reward, p.node_cost, NodeMode::integer));

    Lcg64 rng(config.seed);
    std::vector<std::uint64_t> roster;
    std::uint64_t next_id = 0;
    std::int64_t n = static_cast<std::int64_t>(p.node_count);
    roster.reserve(static_cast<std::size_t>(std::max(n, target) + 4));
    for (std::int64_t i = 0; i < n; ++i) roster.push_back(next_id++);

    auto exit_one = [&] {
        const std::size_t idx = static_cast<std::size_t>(rng.next_below(roster.size()));
        roster[idx] = roster.back();
        roster.pop_back();
    };

    SimOutcome out;
    out.trace.reserve(static_cast<std::size_t>(config.rounds));

    for (std::int64_t round = 1; round <= config.rounds; ++round) {
        const std::int64_t before = n;
        if (config.entry_rule == EntryRule::one_per_round) {
            if (revenue / static_cast<double>(n + 1) - cost >= 0.0) {
                roster.push_back(next_id++);
                ++n;
            } else if (n >= 1 && revenue / static_cast<double>(n) - cost < 0.0) {
                exit_one();
                --n;
            }
        } else {
            if (n < target) {
                std::int64_t k = (target - n + 3) / 4;
                for (std::int64_t i = 0; i < k; ++i) roster.push_back(next_id++);
                n += k;
            } else if (n > target) {
                std::int64_t k = (n - target + 3) / 4;
                for (std::int64_t i = 0; i < k; ++i) exit_one();
                n -= k;
            }
        }
        const bool at_rest = n == before;

        TraceRow row;
        row.round = round;
        row.node_count = n;
        row.node_profit = revenue / static_cast<double>(std::max<std::int64_t>(n, 1)) - cost;
        row.attack_profit =
            attack_profit_at(config.kind, config.attack_value, p, static_cast<double>(n));
        row.attacked = at_rest && row.attack_profit > 0.0;
        out.trace.push_back(row);
        if (row.attacked) {
            out.attacked = true;
            break;
        }
    }

    out.final_node_count = out.trace.back().node_count;
    const std::size_t tail =
        std::max<std::size_t>(1, out.trace.size() / 10);
    out.converged = true;
    for (std::size_t i = out.trace.size() - tail; i < out.trace.size(); ++i)
        if (out.trace[i].node_count != out.final_node_count) {
            out.converged = false;
            break;
        }
    return out;
}

namespace detail {

inline void append_double(std::string& s, double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    s.append(buf, res.ptr);
}

}  // namespace detail

/// Trace export, one record per round: round,N,node_profit,attack_profit,attacked
/// Shortest round-trip decimals, line-feed newlines. Bit-identical for
/// identical (config, seed).
inline std::string trace_csv(const SimOutcome& outcome) {
    std::string s = "round,N,node_profit,attack_profit,attacked\n";
    for (const TraceRow& row : outcome.trace) {
        s += std::to_string(row.round);
        s += ',';
        s += std::to_string(row.node_count);
        s += ',';
        detail::append_double(s, row.node_profit);
        s += ',';
        detail::append_double(s, row.attack_profit);
        s += ',';
        s += row.attacked ? '1' : '0';
        s += '\n';
    }
    return s;
}

inline void write_trace_csv(const SimOutcome& outcome, std::ostream& os) {
    os << trace_csv(outcome);
}

struct AgreementRow {
    std::size_t config_index = 0;
    std::int64_t simulated_nodes = 0;    // N at termination
    std::int64_t closed_form_nodes = 0;  // integer free-entry count
    std::int64_t node_gap = 0;           // |simulated - closed form|
    bool attacked = false;               // simulator's flag
    bool closed_form_attack = false;     // attack profit at the closed-form count > 0
    bool attack_match = false;
};

struct AgreementReport {
    std::vector<AgreementRow> rows;  // ordered by config index
    double exact_match_fraction = 0.0;  // node_gap == 0 and attack_match
};

/// Runs every config and compares the simulated outcome against the closed
/// forms: the free-entry node count and the sign of the attack profit at it.
inline AgreementReport sweep_sim_vs_closed_form(const std::vector<SimConfig>& configs) {
    if (configs.empty())
        throw std::domain_error("sim sweep: at least one config required");
    AgreementReport report;
    report.rows.reserve(configs.size());
    std::size_t exact = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const SimConfig& config = configs[i];
        const SimOutcome outcome = run_sim(config);
        AgreementRow row;
        row.config_index = i;
        row.simulated_nodes = outcome.final_node_count;
        row.closed_form_nodes = static_cast<std::int64_t>(
            equilibrium_node_count(config.params.exchange_rate, config.params.block_reward,
                                   config.params.node_cost, NodeMode::integer));
        row.node_gap = std::abs(row.simulated_nodes - row.closed_form_nodes);
        row.attacked = outcome.attacked;
        row.closed_form_attack =
            attack_profit_at(config.kind, config.attack_value, config.params,
                             static_cast<double>(row.closed_form_nodes)) > 0.0;
        row.attack_match = row.attacked == row.closed_form_attack;
        if (row.node_gap == 0 && row.attack_match) ++exact;
        report.rows.push_back(row);
    }
    report.exact_match_fraction =
        static_cast<double>(exact) / static_cast<double>(configs.size());
    return report;
}

}  // namespace chainecon
