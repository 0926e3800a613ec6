#include "hdline/scheduler.hpp"

#include <algorithm>
#include <cmath>

#include "hdline/error.hpp"

namespace hdline::scheduler {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b)
{
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool contains(const ColorInterval& outer, const mpz_class& left, const mpz_class& right)
{
    return outer.left <= left && right <= outer.right;
}

} // namespace

Schedule GroupedSchedule::to_schedule() const
{
    std::vector<std::pair<State, ExtRational>> entries;
    entries.reserve(groups.size());
    for (const auto& g : groups) entries.emplace_back(g.state, g.weight);
    return Schedule(entries);
}

Integerized integerize(const LineNetwork& net)
{
    mpz_class denominators = 1;
    for (int i = 1; i <= net.link_count(); ++i) {
        const ExtRational& l = net.link(i);
        if (l.is_infinite() || l.is_zero()) {
            throw Error(ErrorCode::UnsupportedCapacity,
                        "link " + std::to_string(i) + " has capacity " + l.to_string() +
                            "; scheduling needs finite positive capacities");
        }
        denominators = lcm(denominators, l.denominator());
    }
    std::vector<ExtRational> scaled;
    scaled.reserve(static_cast<std::size_t>(net.link_count()));
    for (const auto& l : net.links()) scaled.emplace_back(mpq_class(l.value() * denominators));
    return {LineNetwork(std::move(scaled)), ExtRational(mpq_class(1, denominators))};
}

Multiplicities multiplicities(const LineNetwork& integer_net)
{
    Multiplicities out;
    out.common_multiple = 1;
    for (const auto& l : integer_net.links()) {
        if (!l.is_integer() || l.is_zero()) {
            throw Error(ErrorCode::UnsupportedCapacity, "multiplicities need positive integer links, got " +
                                                            l.to_string());
        }
        out.common_multiple = lcm(out.common_multiple, l.numerator());
    }
    out.counts.reserve(integer_net.links().size());
    for (const auto& l : integer_net.links()) out.counts.push_back(out.common_multiple / l.numerator());
    return out;
}

ColorAssignment color_intervals(const Multiplicities& mult)
{
    const auto& n = mult.counts;
    if (n.size() < 2) throw Error(ErrorCode::DegenerateNetwork, "colouring needs at least one relay");

    ColorAssignment out;
    out.max_degree = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
        mpz_class degree = n[i] + n[i + 1];
        if (degree > out.max_degree) out.max_degree = degree;
    }
    out.intervals.reserve(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
        const bool even = (k + 1) % 2 == 0;  // link index is k+1
        if (even) {
            out.intervals.push_back({mpz_class(1), n[k]});
        } else {
            out.intervals.push_back({mpz_class(out.max_degree - n[k] + 1), out.max_degree});
        }
    }
    return out;
}

GroupedSchedule group_colors(int relay_count, const mpz_class& max_degree, std::span<const ColorInterval> intervals)
{
    const int n = relay_count;
    if (n < 1) throw Error(ErrorCode::DegenerateNetwork, "grouping needs at least one relay");
    if (intervals.size() != static_cast<std::size_t>(n) + 1) {
        throw Error(ErrorCode::InternalInvariant, "expected N+1 colour intervals");
    }
    for (const auto& c : intervals) {
        if (c.left < 1 || c.right > max_degree || c.left > c.right) {
            throw Error(ErrorCode::InternalInvariant,
                        "malformed colour interval [" + c.left.get_str() + ":" + c.right.get_str() + "]");
        }
    }

    std::vector<mpz_class> p;
    p.reserve(2 * intervals.size());
    for (const auto& c : intervals) p.push_back(c.left);
    for (const auto& c : intervals) p.push_back(c.right + 1);
    std::sort(p.begin(), p.end(), std::greater<>());
    p.erase(std::unique(p.begin(), p.end()), p.end());

    GroupedSchedule out;
    out.max_degree = max_degree;
    out.groups.reserve(p.size() - 1);
    const std::size_t links = intervals.size();
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        const mpz_class right = p[j] - 1;
        const mpz_class& left = p[j + 1];
        std::vector<std::uint8_t> row(static_cast<std::size_t>(n), 0);
        std::uint8_t state = 1;
        for (std::size_t i = 1; i <= links; ++i) {
            if (contains(intervals[i - 1], left, right)) {
                state = 0;
                if (i < links) row[i - 1] = 0;
                if (i > 1) row[i - 2] = 1;
            } else if (i < links) {
                row[i - 1] = state;
            }
        }
        ExtRational weight(mpq_class(right - left + 1, max_degree));
        out.groups.push_back({{left, right}, State(std::move(row)), std::move(weight)});
    }
    out.boundaries = std::move(p);
    return out;
}

GroupedSchedule build_grouped_schedule(const LineNetwork& net)
{
    if (net.relay_count() < 1) {
        throw Error(ErrorCode::DegenerateNetwork, "scheduling needs at least one relay");
    }
    const Integerized integer = integerize(net);
    const Multiplicities mult = multiplicities(integer.net);
    const ColorAssignment colors = color_intervals(mult);
    return group_colors(net.relay_count(), colors.max_degree, colors.intervals);
}

Schedule build_simple_schedule(const LineNetwork& net) { return build_grouped_schedule(net).to_schedule(); }

Rationalized rationalize_real(std::span<const double> links, std::uint64_t denominator)
{
    if (denominator < 1) throw Error(ErrorCode::InvalidArgument, "denominator must be at least 1");
    const mpz_class d(static_cast<unsigned long>(denominator));
    std::vector<ExtRational> rational;
    rational.reserve(links.size());
    for (std::size_t i = 0; i < links.size(); ++i) {
        const double l = links[i];
        if (!std::isfinite(l) || l <= 0.0) {
            throw Error(ErrorCode::InvalidArgument,
                        "link " + std::to_string(i + 1) + " must be a finite positive capacity");
        }
        // Exact floor of l * D; the double is converted without rounding.
        const mpq_class scaled = mpq_class(l) * d;
        mpz_class floored;
        mpz_fdiv_q(floored.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        if (floored == 0) {
            throw Error(ErrorCode::ResolutionTooCoarse,
                        "link " + std::to_string(i + 1) + " rounds to 0 at denominator " + d.get_str() +
                            "; increase D");
        }
        rational.emplace_back(mpq_class(floored, d));
    }
    return {LineNetwork(std::move(rational)), ExtRational(mpq_class(1, d))};
}

} // namespace hdline::scheduler
