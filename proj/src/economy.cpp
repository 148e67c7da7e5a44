#include "radixecon/economy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radixecon {

namespace {

void require_gt1(double x, const char* what) {
    if (!(x > 1.0)) {  // also rejects NaN
        std::string message = what;
        throw std::domain_error(message + " must be greater than 1");
    }
}

}  // namespace

double fractional_width(double upper_bound, double radix) {
    require_gt1(upper_bound, "upper bound");
    require_gt1(radix, "radix");
    return std::log(upper_bound) / std::log(radix);
}

double e1_cost(double radix, double upper_bound) {
    return radix * fractional_width(upper_bound, radix);
}

double e1_optimal_radix() {
    return std::numbers::e;
}

double e2_cost(double radix, double upper_bound) {
    return radix + fractional_width(upper_bound, radix);
}

double e2_condition(double radix, double upper_bound) {
    require_gt1(upper_bound, "upper bound");
    require_gt1(radix, "radix");
    double log_r = std::log(radix);
    return radix * log_r * log_r - std::log(upper_bound);
}

RootResult e2_optimal_radix(double upper_bound, double tolerance) {
    if (!(upper_bound > 1.0))
        throw std::domain_error("no optimum for upper bound <= 1");
    if (!(tolerance > 0.0))
        throw std::domain_error("tolerance must be positive");

    const double target = std::log(upper_bound);
    auto condition = [target](double r) {
        double log_r = std::log(r);
        return r * log_r * log_r - target;
    };

    double lo = 1.0 + 1e-9;
    double hi = std::max(upper_bound, 16.0);
    double f_lo = condition(lo);
    double f_hi = condition(hi);
    if (f_lo > 0.0 || f_hi < 0.0)  // no sign change: report, don't guess
        return {0.5 * (lo + hi), std::abs(f_lo) < std::abs(f_hi) ? f_lo : f_hi, 0, false};

    double root = 0.5 * (lo + hi);
    double f = condition(root);
    int iterations = 0;
    const int max_iterations = 200;
    while (std::abs(f) > tolerance && iterations < max_iterations) {
        ++iterations;
        // Newton step when it lands inside the bracket, bisection otherwise.
        double log_r = std::log(root);
        double slope = log_r * (log_r + 2.0);
        double next = slope != 0.0 ? root - f / slope : lo;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        root = next;
        f = condition(root);
        if (f < 0.0)
            lo = root;
        else
            hi = root;
    }
    return {root, f, iterations, std::abs(f) <= tolerance};
}

std::vector<EconomySample> cost_curve(CostModel model, double upper_bound,
                                      double r_min, double r_max, int steps) {
    require_gt1(upper_bound, "upper bound");
    require_gt1(r_min, "r_min");
    if (!(r_max > r_min))
        throw std::domain_error("r_max must be greater than r_min");
    if (steps < 2)
        throw std::domain_error("steps must be at least 2");

    std::vector<EconomySample> samples;
    samples.reserve(static_cast<std::size_t>(steps) + 1);
    const double span = r_max - r_min;
    for (int i = 0; i <= steps; ++i) {
        double r = i == steps ? r_max : r_min + span * i / steps;
        double cost = model == CostModel::e1 ? e1_cost(r, upper_bound)
                                             : e2_cost(r, upper_bound);
        samples.push_back({r, cost});
    }
    return samples;
}

double trit_bit_equivalence(int trit_count) {
    if (trit_count < 1)
        throw std::domain_error("trit count must be at least 1");
    return trit_count * (std::log(3.0) / std::log(2.0));
}

BigInt ternary_range(int trit_count) {
    if (trit_count < 1)
        throw std::domain_error("trit count must be at least 1");
    return BigInt(pow(BigInt(3), static_cast<unsigned>(trit_count)));
}

double device_state_efficiency(int states_available, int states_used) {
    if (states_used < 2 || states_used > states_available)
        throw std::domain_error("states used must satisfy 2 <= used <= available");
    return static_cast<double>(states_used) / static_cast<double>(states_available);
}

}  // namespace radixecon
