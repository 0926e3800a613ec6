#include "hdline/line_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hdline/error.hpp"

namespace hdline {

namespace {

void require_relays(const LineNetwork& net)
{
    if (net.relay_count() < 1) {
        throw Error(ErrorCode::DegenerateNetwork,
                    "network has no relay; its capacity is the single link l_1 = " + net.link(1).to_string());
    }
}

void require_matching(const Schedule& sched, const LineNetwork& net)
{
    require_relays(net);
    if (sched.relay_count() != net.relay_count()) {
        throw Error(ErrorCode::InvalidArgument,
                    "schedule has " + std::to_string(sched.relay_count()) + " relays, network has " +
                        std::to_string(net.relay_count()));
    }
}

double log2_one_plus(double magnitude_squared) { return std::log2(1.0 + magnitude_squared); }

} // namespace

// ---------------------------------------------------------------- LineNetwork

LineNetwork::LineNetwork(std::vector<ExtRational> links, bool allow_degenerate) : links_(std::move(links))
{
    if (links_.empty()) throw Error(ErrorCode::InvalidArgument, "a line network needs at least one link");
    for (std::size_t i = 0; i < links_.size(); ++i) {
        if (links_[i].is_zero()) {
            if (!allow_degenerate) {
                throw Error(ErrorCode::InvalidArgument, "link " + std::to_string(i + 1) + " has zero capacity");
            }
            degenerate_ = true;
        }
    }
}

LineNetwork LineNetwork::parse(std::string_view comma_separated, bool allow_degenerate)
{
    std::vector<ExtRational> links;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        const auto comma = comma_separated.find(',', start);
        const auto token = comma_separated.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                         : comma - start);
        links.push_back(ExtRational::parse(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return LineNetwork(std::move(links), allow_degenerate);
}

const ExtRational& LineNetwork::link(int i) const
{
    if (i < 1 || i > link_count()) {
        throw Error(ErrorCode::InvalidArgument, "link index " + std::to_string(i) + " out of range");
    }
    return links_[static_cast<std::size_t>(i - 1)];
}

std::string LineNetwork::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < links_.size(); ++i) {
        if (i) out += ",";
        out += links_[i].to_string();
    }
    return out + ")";
}

// ---------------------------------------------------------------------- State

State::State(std::string_view bits)
{
    bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::ParseError, "state must be a string of 0/1, got '" + std::string(bits) + "'");
        }
        bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

State::State(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    for (auto b : bits_) {
        if (b > 1) throw Error(ErrorCode::InvalidArgument, "state bits must be 0 or 1");
    }
}

State State::from_mask(std::uint64_t mask, int relay_count)
{
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(relay_count));
    for (int i = 0; i < relay_count; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    return State(std::move(bits));
}

bool State::transmits(int relay) const
{
    if (relay < 1 || relay > relay_count()) {
        throw Error(ErrorCode::InvalidArgument, "relay index " + std::to_string(relay) + " out of range");
    }
    return bits_[static_cast<std::size_t>(relay - 1)] != 0;
}

std::string State::to_string() const
{
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
    return out;
}

// ------------------------------------------------------------------------ Cut

Cut::Cut(int relay_count, std::vector<int> members) : relay_count_(relay_count), members_(std::move(members))
{
    if (relay_count < 0) throw Error(ErrorCode::InvalidArgument, "negative relay count");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int m : members_) {
        if (m < 1 || m > relay_count) {
            throw Error(ErrorCode::InvalidArgument, "cut member " + std::to_string(m) + " outside [1:" +
                                                        std::to_string(relay_count) + "]");
        }
    }
}

Cut Cut::from_mask(std::uint64_t mask, int relay_count)
{
    std::vector<int> members;
    for (int i = 0; i < relay_count; ++i) {
        if ((mask >> i) & 1U) members.push_back(i + 1);
    }
    return Cut(relay_count, std::move(members));
}

bool Cut::contains(int relay) const { return std::binary_search(members_.begin(), members_.end(), relay); }

std::uint64_t Cut::mask() const
{
    if (relay_count_ > 64) throw Error(ErrorCode::CapacityLimit, "cut mask needs at most 64 relays");
    std::uint64_t m = 0;
    for (int r : members_) m |= std::uint64_t{1} << (r - 1);
    return m;
}

std::string Cut::to_string() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    os << "}";
    return os.str();
}

// ------------------------------------------------------------------- Schedule

Schedule::Schedule(const std::vector<std::pair<State, ExtRational>>& entries)
{
    if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "schedule has no states");
    relay_count_ = entries.front().first.relay_count();
    ExtRational total(0);
    for (const auto& [state, weight] : entries) {
        if (state.relay_count() != relay_count_) {
            throw Error(ErrorCode::InvalidArgument, "schedule states have different lengths");
        }
        if (weight.is_infinite()) throw Error(ErrorCode::InvalidArgument, "infinite schedule weight");
        if (weight.is_zero()) continue;
        total += weight;
        auto [it, inserted] = entries_.emplace(state, weight);
        if (!inserted) it->second += weight;
    }
    if (total != ExtRational(1)) {
        throw Error(ErrorCode::InvalidArgument, "schedule weights sum to " + total.to_string() + ", not 1");
    }
}

// ----------------------------------------------------------------- operations

std::vector<double> from_channel_gains(std::span<const double> magnitudes)
{
    std::vector<double> out;
    out.reserve(magnitudes.size());
    for (double h : magnitudes) {
        if (!std::isfinite(h) || h < 0.0) {
            throw Error(ErrorCode::InvalidGain, "channel gain magnitude must be finite and nonnegative");
        }
        out.push_back(log2_one_plus(h * h));
    }
    return out;
}

std::vector<double> from_channel_gains(std::span<const std::complex<double>> gains)
{
    std::vector<double> out;
    out.reserve(gains.size());
    for (const auto& h : gains) {
        if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
            throw Error(ErrorCode::InvalidGain, "channel gain must be finite");
        }
        out.push_back(log2_one_plus(std::norm(h)));
    }
    return out;
}

ExtRational closed_form_capacity(const LineNetwork& net)
{
    const int i = closed_form_bottleneck(net);
    return harmonic_half(net.link(i), net.link(i + 1));
}

int closed_form_bottleneck(const LineNetwork& net)
{
    require_relays(net);
    int best = 1;
    ExtRational best_value = harmonic_half(net.link(1), net.link(2));
    for (int i = 2; i <= net.relay_count(); ++i) {
        ExtRational v = harmonic_half(net.link(i), net.link(i + 1));
        if (v < best_value) {
            best_value = std::move(v);
            best = i;
        }
    }
    return best;
}

std::vector<ExtRational> distributed_capacity_fold(const LineNetwork& net)
{
    require_relays(net);
    std::vector<ExtRational> m;
    m.reserve(static_cast<std::size_t>(net.relay_count()));
    ExtRational previous = ExtRational::infinity();
    for (int i = 1; i <= net.relay_count(); ++i) {
        previous = min(harmonic_half(net.link(i), net.link(i + 1)), previous);
        m.push_back(previous);
    }
    return m;
}

ExtRational fd_capacity(const LineNetwork& net)
{
    require_relays(net);
    return *std::min_element(net.links().begin(), net.links().end());
}

bool state_activates_link(const State& s, int link)
{
    const int n = s.relay_count();
    if (link < 1 || link > n + 1) {
        throw Error(ErrorCode::InvalidArgument, "link index " + std::to_string(link) + " out of range");
    }
    const bool receiver_listens = link == n + 1 || !s.transmits(link);
    const bool sender_talks = link == 1 || s.transmits(link - 1);
    return receiver_listens && sender_talks;
}

ExtRational cut_value(const Schedule& sched, const Cut& cut, const LineNetwork& net)
{
    require_matching(sched, net);
    const int n = net.relay_count();
    if (cut.relay_count() != n) throw Error(ErrorCode::InvalidArgument, "cut and network sizes differ");

    // Links i with i in A u {N+1} and i-1 in A^c u {0}.
    std::vector<int> crossing;
    for (int i = 1; i <= n + 1; ++i) {
        const bool head_in_a = i == n + 1 || cut.contains(i);
        const bool tail_in_ac = i == 1 || !cut.contains(i - 1);
        if (head_in_a && tail_in_ac) crossing.push_back(i);
    }
    for (int i : crossing) {
        if (net.link(i).is_infinite()) return ExtRational::infinity();
    }

    ExtRational total(0);
    for (const auto& [state, weight] : sched.entries()) {
        ExtRational active(0);
        for (int i : crossing) {
            if (state_activates_link(state, i)) active += net.link(i);
        }
        if (!active.is_zero()) total += weight * active;
    }
    return total;
}

std::vector<ExtRational> link_activation_fractions(const Schedule& sched)
{
    const int n = sched.relay_count();
    std::vector<ExtRational> fractions(static_cast<std::size_t>(n + 1), ExtRational(0));
    for (const auto& [state, weight] : sched.entries()) {
        const auto& bits = state.bits();
        // Link i active iff bit_{i-1} = 1 (or i = 1) and bit_i = 0 (or i = N+1).
        for (int i = 1; i <= n + 1; ++i) {
            const bool sender = i == 1 || bits[static_cast<std::size_t>(i - 2)] != 0;
            const bool receiver = i == n + 1 || bits[static_cast<std::size_t>(i - 1)] == 0;
            if (sender && receiver) fractions[static_cast<std::size_t>(i - 1)] += weight;
        }
    }
    return fractions;
}

ExtRational schedule_rate_fundamental(const Schedule& sched, const LineNetwork& net)
{
    require_matching(sched, net);
    const auto fractions = link_activation_fractions(sched);
    ExtRational rate = ExtRational::infinity();
    for (int i = 1; i <= net.link_count(); ++i) {
        const ExtRational& capacity = net.link(i);
        if (capacity.is_infinite()) continue;
        rate = min(rate, fractions[static_cast<std::size_t>(i - 1)] * capacity);
    }
    return rate;
}

} // namespace hdline
