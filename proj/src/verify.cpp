#include "hdline/verify.hpp"

#include <optional>

#include "hdline/error.hpp"
#include "hdline/scheduler.hpp"

namespace hdline::verify {

std::vector<Cut> fundamental_cuts(int relay_count)
{
    if (relay_count < 1) throw Error(ErrorCode::DegenerateNetwork, "fundamental cuts need at least one relay");
    std::vector<Cut> cuts;
    cuts.reserve(static_cast<std::size_t>(relay_count) + 1);
    cuts.emplace_back(relay_count, std::vector<int>{});
    for (int i = relay_count; i >= 1; --i) {
        std::vector<int> suffix;
        for (int r = i; r <= relay_count; ++r) suffix.push_back(r);
        cuts.emplace_back(relay_count, std::move(suffix));
    }
    return cuts;
}

MinCut min_cut_exhaustive(const Schedule& sched, const LineNetwork& net, int max_relays)
{
    const int n = net.relay_count();
    if (n > max_relays || n > 62) {
        throw Error(ErrorCode::CapacityLimit, "exhaustive cut search over 2^" + std::to_string(n) +
                                                  " cuts exceeds the limit of N <= " + std::to_string(max_relays));
    }
    std::optional<MinCut> best;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Cut cut = Cut::from_mask(mask, n);
        ExtRational value = cut_value(sched, cut, net);
        if (!best || value < best->value) best = MinCut{std::move(value), std::move(cut)};
    }
    return std::move(*best);
}

MinCut min_cut_fundamental(const Schedule& sched, const LineNetwork& net)
{
    std::optional<MinCut> best;
    for (auto& cut : fundamental_cuts(net.relay_count())) {
        ExtRational value = cut_value(sched, cut, net);
        if (!best || value < best->value || (value == best->value && cut.mask() < best->cut.mask())) {
            best = MinCut{std::move(value), std::move(cut)};
        }
    }
    return std::move(*best);
}

OptimalityCertificate certify_schedule_optimal(const Schedule& sched, const LineNetwork& net)
{
    OptimalityCertificate out;
    out.rate = schedule_rate_fundamental(sched, net);
    out.bottleneck = closed_form_bottleneck(net);
    out.bound = closed_form_capacity(net);
    out.optimal = out.rate == out.bound;
    return out;
}

SandwichReport epsilon_sandwich_check(std::span<const double> links, std::uint64_t denominator, double tolerance)
{
    const auto rationalized = scheduler::rationalize_real(links, denominator);
    std::vector<ExtRational> exact;
    exact.reserve(links.size());
    for (double l : links) exact.push_back(ExtRational::from_double(l));
    const LineNetwork real_net(std::move(exact));

    SandwichReport out;
    out.rationalization_holds = true;
    for (int i = 1; i <= real_net.link_count(); ++i) {
        const ExtRational& l = real_net.link(i);
        const ExtRational& q = rationalized.net.link(i);
        out.rationalization_holds = out.rationalization_holds && q <= l && l <= q + rationalized.epsilon;
    }
    out.epsilon = rationalized.epsilon;
    out.rational_capacity = closed_form_capacity(rationalized.net);
    out.schedule_rate = schedule_rate_fundamental(scheduler::build_simple_schedule(rationalized.net), real_net);
    out.real_capacity = closed_form_capacity(real_net);

    const ExtRational slack = ExtRational::from_double(tolerance);
    out.lower_holds = out.rational_capacity <= out.schedule_rate + slack;
    out.middle_holds = out.schedule_rate <= out.real_capacity + slack;
    out.upper_holds = out.real_capacity <= out.rational_capacity + out.epsilon + slack;
    return out;
}

} // namespace hdline::verify
