#ifndef HDLINE_SCHEDULER_HPP
#define HDLINE_SCHEDULER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hdline/ext_rational.hpp"
#include "hdline/line_model.hpp"

// Simple-schedule construction by interval edge colouring of the multigraph
// that replaces link i with n_i = M / l_i parallel edges.
namespace hdline::scheduler {

inline constexpr std::uint64_t kDefaultDenominator = 1'000'000;

struct Integerized {
    LineNetwork net;    // integer capacities
    ExtRational scale;  // original l_i = scale * net.link(i)
};

struct Multiplicities {
    mpz_class common_multiple;      // M
    std::vector<mpz_class> counts;  // n_1..n_{N+1}, n_i * l_i = M
};

struct ColorInterval {
    mpz_class left;
    mpz_class right;

    friend bool operator==(const ColorInterval&, const ColorInterval&) = default;
};

struct ColorAssignment {
    mpz_class max_degree;                // Delta
    std::vector<ColorInterval> intervals;  // C_1..C_{N+1}
};

struct ColorGroup {
    ColorInterval colors;  // I_j
    State state;           // row j of the state matrix
    ExtRational weight;    // |I_j| / Delta
};

struct GroupedSchedule {
    mpz_class max_degree;
    std::vector<mpz_class> boundaries;  // p_u, strictly descending
    std::vector<ColorGroup> groups;     // descending colour order

    Schedule to_schedule() const;
};

// Multiplies through by the lcm of the denominators.
Integerized integerize(const LineNetwork& net);

// M = lcm(l_1..l_{N+1}), n_i = M / l_i. Requires positive integer links.
Multiplicities multiplicities(const LineNetwork& integer_net);

// Delta = max_i (n_i + n_{i+1}); even links take [1:n_i], odd links [Delta-n_i+1:Delta].
ColorAssignment color_intervals(const Multiplicities& mult);

// Groups colours that drive the network into the same state.
GroupedSchedule group_colors(int relay_count, const mpz_class& max_degree,
                             std::span<const ColorInterval> intervals);

GroupedSchedule build_grouped_schedule(const LineNetwork& net);

// Simple schedule (at most N+1 states) whose rate equals the closed-form capacity.
Schedule build_simple_schedule(const LineNetwork& net);

struct Rationalized {
    LineNetwork net;
    ExtRational epsilon;  // 1/D
};

// q_i = floor(l_i * D) / D, so l_i - 1/D < q_i <= l_i.
Rationalized rationalize_real(std::span<const double> links, std::uint64_t denominator = kDefaultDenominator);

} // namespace hdline::scheduler

#endif
