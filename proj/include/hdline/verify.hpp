#ifndef HDLINE_VERIFY_HPP
#define HDLINE_VERIFY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hdline/ext_rational.hpp"
#include "hdline/line_model.hpp"

// Brute-force certificates for schedules and capacities on small networks.
namespace hdline::verify {

inline constexpr int kDefaultExhaustiveLimit = 20;

// The empty cut and the suffixes [i:N], in the order empty, [N:N], ..., [1:N].
std::vector<Cut> fundamental_cuts(int relay_count);

struct MinCut {
    ExtRational value;
    Cut cut;
};

// Minimum of cut_value over all 2^N cuts. Ties go to the smallest bitmask.
MinCut min_cut_exhaustive(const Schedule& sched, const LineNetwork& net, int max_relays = kDefaultExhaustiveLimit);

// Minimum of cut_value over the N+1 fundamental cuts only.
MinCut min_cut_fundamental(const Schedule& sched, const LineNetwork& net);

struct OptimalityCertificate {
    ExtRational rate;   // achieved by the schedule
    ExtRational bound;  // closed-form capacity
    bool optimal = false;
    int bottleneck = 0;  // relay i minimising hm(l_i, l_{i+1})
};

OptimalityCertificate certify_schedule_optimal(const Schedule& sched, const LineNetwork& net);

struct SandwichReport {
    ExtRational epsilon;
    ExtRational rational_capacity;  // C(q)
    ExtRational schedule_rate;      // rate of the q-optimal schedule on the real links
    ExtRational real_capacity;      // C(l), exact on the binary value of the doubles
    bool lower_holds = false;       // C(q) <= rate
    bool middle_holds = false;      // rate <= C(l)
    bool upper_holds = false;       // C(l) <= C(q) + eps
    bool rationalization_holds = false;  // l_i - eps <= q_i <= l_i for every link
    bool all_hold() const noexcept { return lower_holds && middle_holds && upper_holds && rationalization_holds; }
};

// Checks l - 1/D <= q <= l and C(q) <= C^{lambda_q}(l) <= C(l) <= C(q) + 1/D,
// allowing `tolerance` of slack in the capacity chain.
SandwichReport epsilon_sandwich_check(std::span<const double> links, std::uint64_t denominator,
                                      double tolerance = 1e-9);

} // namespace hdline::verify

#endif
