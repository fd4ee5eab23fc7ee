#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainecon {

enum class ConsensusKind { pow, pos };

inline const char* to_string(ConsensusKind kind) {
    return kind == ConsensusKind::pow ? "pow" : "pos";
}

/// The full symbol set of the model. Units:
///   node_cost      c  dollars per node per block (PoW resource cost)
///   block_reward   P  tokens per block (block award plus fees)
///   exchange_rate  e  dollars per token
///   node_count     N  nodes (real-valued; integer-mode operations floor it)
///   stake          S  tokens escrowed per node (PoS; 0 = not configured)
///   interest_rate  r  per-block rate (PoS opportunity cost; 0 = not configured)
///   supermajority  A  multiple of honest capacity an attacker must control, > 1
///   escrow_blocks  t  blocks an attacker must control before the attack pays
///
/// PoS parameter sets maintain c = r*e*S: the stake's per-block opportunity
/// cost in dollars is the PoS analogue of the PoW resource cost, and every
/// dollar-denominated operation reads it from node_cost.
struct NetworkParams {
    double node_cost = 0.0;
    double block_reward = 0.0;
    double exchange_rate = 0.0;
    double node_count = 0.0;
    double stake = 0.0;
    double interest_rate = 0.0;
    double supermajority = 0.0;
    std::int64_t escrow_blocks = 0;

    static NetworkParams for_pow(double node_cost, double block_reward,
                                 double exchange_rate, double node_count,
                                 double supermajority, std::int64_t escrow_blocks) {
        NetworkParams p;
        p.node_cost = node_cost;
        p.block_reward = block_reward;
        p.exchange_rate = exchange_rate;
        p.node_count = node_count;
        p.supermajority = supermajority;
        p.escrow_blocks = escrow_blocks;
        p.validate();
        return p;
    }

    // node_cost is derived as r*e*S.
    static NetworkParams for_pos(double block_reward, double exchange_rate,
                                 double node_count, double stake, double interest_rate,
                                 double supermajority, std::int64_t escrow_blocks) {
        if (!(stake > 0.0)) throw std::domain_error("params: stake must be > 0 for proof of stake");
        if (!(interest_rate > 0.0)) throw std::domain_error("params: interest_rate must be > 0 for proof of stake");
        NetworkParams p;
        p.block_reward = block_reward;
        p.exchange_rate = exchange_rate;
        p.node_count = node_count;
        p.stake = stake;
        p.interest_rate = interest_rate;
        p.supermajority = supermajority;
        p.escrow_blocks = escrow_blocks;
        p.node_cost = interest_rate * exchange_rate * stake;
        p.validate();
        return p;
    }

    /// The PoS network with the same per-node dollar cost: keeps node_cost
    /// bit-identical and derives the stake S = c/(r*e) whose opportunity cost
    /// it is. Used for PoW/PoS equivalence comparisons.
    NetworkParams matched_pos(double interest) const {
        if (!(interest > 0.0)) throw std::domain_error("params: interest_rate must be > 0");
        NetworkParams p = *this;
        p.interest_rate = interest;
        p.stake = node_cost / (interest * exchange_rate);
        p.validate();
        return p;
    }

    bool has_stake_terms() const { return stake > 0.0 && interest_rate > 0.0; }

    void validate() const {
        if (!(node_cost > 0.0)) throw std::domain_error("params: node_cost (c) must be > 0");
        if (!(block_reward > 0.0)) throw std::domain_error("params: block_reward (P) must be > 0");
        if (!(exchange_rate > 0.0)) throw std::domain_error("params: exchange_rate (e) must be > 0");
        if (!(node_count >= 1.0)) throw std::domain_error("params: node_count (N) must be >= 1");
        if (!(stake >= 0.0)) throw std::domain_error("params: stake (S) must be >= 0");
        if (!(interest_rate >= 0.0)) throw std::domain_error("params: interest_rate (r) must be >= 0");
        if (!(supermajority > 1.0)) throw std::domain_error("params: supermajority (A) must be > 1");
        if (escrow_blocks < 1) throw std::domain_error("params: escrow_blocks (t) must be >= 1");
    }
};

}  // namespace chainecon
