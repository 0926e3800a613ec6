#ifndef HDLINE_LINE_MODEL_HPP
#define HDLINE_LINE_MODEL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdline/ext_rational.hpp"

namespace hdline {

// Link capacities l_1..l_{N+1} of an N-relay half-duplex line network.
// Node 0 is the source, node N+1 the destination; link i joins node i-1 to node i.
class LineNetwork {
public:
    // Zero capacities are rejected unless allow_degenerate is set (0/1 witness networks).
    explicit LineNetwork(std::vector<ExtRational> links, bool allow_degenerate = false);

    static LineNetwork parse(std::string_view comma_separated, bool allow_degenerate = false);

    int relay_count() const noexcept { return static_cast<int>(links_.size()) - 1; }
    int link_count() const noexcept { return static_cast<int>(links_.size()); }
    // 1-indexed, i in [1:N+1].
    const ExtRational& link(int i) const;
    const std::vector<ExtRational>& links() const noexcept { return links_; }
    bool degenerate() const noexcept { return degenerate_; }

    std::string to_string() const;

    friend bool operator==(const LineNetwork&, const LineNetwork&) = default;

private:
    std::vector<ExtRational> links_;
    bool degenerate_ = false;
};

// Relay on/off configuration. Bit i (1-indexed, leftmost character) is S_i:
// 1 = transmit, 0 = receive. Source and destination are implicit.
class State {
public:
    State() = default;
    explicit State(std::string_view bits);
    explicit State(std::vector<std::uint8_t> bits);
    // Relay i takes bit (i-1) of mask.
    static State from_mask(std::uint64_t mask, int relay_count);

    int relay_count() const noexcept { return static_cast<int>(bits_.size()); }
    bool transmits(int relay) const;
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    std::string to_string() const;

    friend auto operator<=>(const State&, const State&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Destination-side relay set A of a cut.
class Cut {
public:
    Cut(int relay_count, std::vector<int> members);
    // Relay i is a member iff bit (i-1) of mask is set.
    static Cut from_mask(std::uint64_t mask, int relay_count);

    int relay_count() const noexcept { return relay_count_; }
    const std::vector<int>& members() const noexcept { return members_; }
    bool contains(int relay) const;
    std::uint64_t mask() const;
    std::string to_string() const;

    friend bool operator==(const Cut&, const Cut&) = default;

private:
    int relay_count_;
    std::vector<int> members_;
};

// Distribution over states with strictly positive weights summing to exactly one.
class Schedule {
public:
    // Entries with the same state are merged; zero weights are dropped.
    explicit Schedule(const std::vector<std::pair<State, ExtRational>>& entries);

    int relay_count() const noexcept { return relay_count_; }
    const std::map<State, ExtRational>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_simple() const noexcept { return entries_.size() <= static_cast<std::size_t>(relay_count_) + 1; }

private:
    int relay_count_ = 0;
    std::map<State, ExtRational> entries_;
};

// l_i = log2(1 + |h_i|^2), floats only at this boundary.
std::vector<double> from_channel_gains(std::span<const double> magnitudes);
std::vector<double> from_channel_gains(std::span<const std::complex<double>> gains);

ExtRational closed_form_capacity(const LineNetwork& net);

// Index i in [1:N] of the smallest hm(l_i, l_{i+1}); lowest index on ties.
int closed_form_bottleneck(const LineNetwork& net);

// m_i = min(hm(l_i, l_{i+1}), m_{i-1}), m_0 = inf, as each relay would forward it.
std::vector<ExtRational> distributed_capacity_fold(const LineNetwork& net);

ExtRational fd_capacity(const LineNetwork& net);

// Link i (in [1:N+1]) is active iff node i receives and node i-1 transmits.
bool state_activates_link(const State& s, int link);

// Sum over states of lambda_s times the active capacities crossing cut A.
// A cut crossing an infinite link has infinite value.
ExtRational cut_value(const Schedule& sched, const Cut& cut, const LineNetwork& net);

// Per link i, the total weight of states activating it.
std::vector<ExtRational> link_activation_fractions(const Schedule& sched);

// min over links of (activation fraction) * l_i; infinite links never bind.
ExtRational schedule_rate_fundamental(const Schedule& sched, const LineNetwork& net);

} // namespace hdline

#endif
