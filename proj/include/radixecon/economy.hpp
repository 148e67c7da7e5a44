#pragma once

#include <vector>

#include "radixecon/bigint.hpp"

namespace radixecon {

/// Which representation-cost criterion to evaluate: the radix-width product
/// E1(r, w) = r * w or the sum E2(r, w) = r + w.
enum class CostModel { e1, e2 };

/// One point of a sampled cost curve.
struct EconomySample {
    double r;
    double cost;
};

/// Converged (or not) root of the E2 optimality condition.
struct RootResult {
    double r = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Real-valued representation width w with r^w = upper_bound, i.e.
/// ln(upper_bound) / ln(radix). Both arguments must exceed 1.
double fractional_width(double upper_bound, double radix);

/// E1 cost r * w with w eliminated through the constraint r^w = upper_bound.
double e1_cost(double radix, double upper_bound);

/// Radix minimizing e1_cost for every upper bound: the constant e.
double e1_optimal_radix();

/// E2 cost r + w with w eliminated through the constraint r^w = upper_bound.
double e2_cost(double radix, double upper_bound);

/// Stationarity condition of e2_cost: f(r) = r * ln^2(r) - ln(upper_bound).
/// Its unique root on r > 1 is the E2-optimal radix.
double e2_condition(double radix, double upper_bound);

/// Solve e2_condition(r) = 0 for the given upper bound. f(r) has exactly one
/// root on r > 1 (r * ln^2 r grows strictly from 0), so a sign-change bracket
/// on [1 + 1e-9, max(upper_bound, 16)] always exists; bisection narrows it
/// and Newton steps polish inside the bracket. The result is converged when
/// |residual| <= tolerance; a bracket or iteration failure reports
/// converged = false rather than a silent wrong answer.
RootResult e2_optimal_radix(double upper_bound, double tolerance = 1e-10);

/// Sample a cost curve on [r_min, r_max]: steps+1 uniformly spaced points
/// inclusive of both endpoints, in increasing r order.
std::vector<EconomySample> cost_curve(CostModel model, double upper_bound,
                                      double r_min, double r_max, int steps);

/// Number of bits spanning the same range as trit_count trits:
/// trit_count * ln(3) / ln(2).
double trit_bit_equivalence(int trit_count);

/// Count of distinct values of a trit_count-trit word: 3^trit_count, exact.
BigInt ternary_range(int trit_count);

/// Fraction of a device's distinguishable states used by an encoding,
/// e.g. ternary arithmetic on four-state hardware uses 3/4 = 0.75.
double device_state_efficiency(int states_available, int states_used);

}  // namespace radixecon
