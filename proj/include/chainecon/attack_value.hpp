#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainecon/errors.hpp"

namespace chainecon {

enum class AttackValueKind { constant, power_law, tabulated };

/// Private benefit V(e) an attacker derives from controlling the chain,
/// modelled as a non-decreasing function of the exchange rate e:
///
///   constant:   V(e) = k
///   power_law:  V(e) = k * e^eta          (eta >= 0)
///   tabulated:  scale * linear interpolation between (e, V) knots,
///               flat extrapolation beyond the first/last knot
///
/// All values are dollars. Identically-zero V is allowed (k = 0).
class AttackValueModel {
public:
    // Default: no private attack benefit.
    AttackValueModel() : kind_(AttackValueKind::constant), scale_(0.0) {}

    static AttackValueModel constant(double k) {
        if (!(k >= 0.0)) throw std::domain_error("attack value: constant k must be >= 0");
        AttackValueModel m;
        m.kind_ = AttackValueKind::constant;
        m.scale_ = k;
        return m;
    }

    static AttackValueModel power_law(double k, double eta) {
        if (!(k >= 0.0)) throw std::domain_error("attack value: power-law k must be >= 0");
        if (!(eta >= 0.0)) throw std::domain_error("attack value: power-law eta must be >= 0 (V must be non-decreasing)");
        AttackValueModel m;
        m.kind_ = AttackValueKind::power_law;
        m.scale_ = k;
        m.exponent_ = eta;
        return m;
    }

    // Knots must have strictly increasing positive e and non-negative,
    // non-decreasing V.
    static AttackValueModel tabulated(std::vector<std::pair<double, double>> knots) {
        if (knots.empty()) throw std::domain_error("attack value: table must have at least one knot");
        for (std::size_t i = 0; i < knots.size(); ++i) {
            if (!(knots[i].first > 0.0))
                throw std::domain_error("attack value: table knot e must be > 0");
            if (!(knots[i].second >= 0.0))
                throw std::domain_error("attack value: table knot V must be >= 0");
            if (i > 0 && !(knots[i].first > knots[i - 1].first))
                throw std::domain_error("attack value: table knots must have strictly increasing e");
            if (i > 0 && knots[i].second < knots[i - 1].second)
                throw std::domain_error("attack value: table V must be non-decreasing in e");
        }
        AttackValueModel m;
        m.kind_ = AttackValueKind::tabulated;
        m.scale_ = 1.0;
        m.knots_ = std::move(knots);
        return m;
    }

    AttackValueKind kind() const { return kind_; }
    double scale() const { return scale_; }
    double exponent() const { return exponent_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

    // Copy of the model with the scale coefficient replaced; for tabulated
    // models the scale multiplies the interpolated table (base scale 1).
    AttackValueModel with_scale(double k) const {
        if (!(k >= 0.0)) throw std::domain_error("attack value: scale must be >= 0");
        AttackValueModel m = *this;
        m.scale_ = k;
        return m;
    }

    double value(double exchange_rate) const {
        if (!(exchange_rate > 0.0))
            throw std::domain_error("attack value: exchange rate must be > 0");
        switch (kind_) {
            case AttackValueKind::constant:
                return scale_;
            case AttackValueKind::power_law:
                return scale_ * std::pow(exchange_rate, exponent_);
            case AttackValueKind::tabulated:
                return scale_ * interpolate(exchange_rate);
        }
        return 0.0;
    }

    /// Elasticity (e/V)V'(e). Exact for power laws (eta) and constants (0);
    /// tabulated models use a centered difference of ln V over ln e through
    /// the interpolant, which reproduces the log-log knot slope.
    double elasticity(double exchange_rate) const {
        const double v = value(exchange_rate);
        if (v == 0.0)
            throw UndefinedElasticityError("attack value elasticity undefined: V(e) = 0");
        switch (kind_) {
            case AttackValueKind::constant:
                return 0.0;
            case AttackValueKind::power_law:
                return exponent_;
            case AttackValueKind::tabulated: {
                double h = std::max(1e-6, 1e-6 * std::abs(exchange_rate));
                h = std::min(h, exchange_rate / 2.0);  // keep e - h positive
                const double vp = value(exchange_rate + h);
                const double vm = value(exchange_rate - h);
                if (vp == 0.0 || vm == 0.0)
                    throw UndefinedElasticityError("attack value elasticity undefined: V = 0 near e");
                return (std::log(vp) - std::log(vm)) /
                       (std::log(exchange_rate + h) - std::log(exchange_rate - h));
            }
        }
        return 0.0;
    }

private:
    double interpolate(double e) const {
        if (e <= knots_.front().first) return knots_.front().second;
        if (e >= knots_.back().first) return knots_.back().second;
        auto hi = std::upper_bound(
            knots_.begin(), knots_.end(), e,
            [](double x, const std::pair<double, double>& knot) { return x < knot.first; });
        auto lo = hi - 1;
        const double w = (e - lo->first) / (hi->first - lo->first);
        return lo->second + w * (hi->second - lo->second);
    }

    AttackValueKind kind_;
    double scale_ = 0.0;
    double exponent_ = 0.0;
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace chainecon
