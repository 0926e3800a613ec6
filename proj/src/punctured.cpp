#include "hdline/punctured.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hdline/error.hpp"

namespace hdline::punctured {

namespace {

std::vector<int> activated_links(const State& s)
{
    std::vector<int> out;
    for (int i = 1; i <= s.relay_count() + 1; ++i) {
        if (state_activates_link(s, i)) out.push_back(i);
    }
    return out;
}

} // namespace

PuncturedSet::PuncturedSet(int low, int high, std::vector<int> elements)
    : low_(low), high_(high), elements_(std::move(elements))
{
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const int v = elements_[k];
        if (v < low_ || v > high_) {
            throw Error(ErrorCode::InvalidArgument, std::to_string(v) + " outside [" + std::to_string(low_) + ":" +
                                                        std::to_string(high_) + "]");
        }
        if (k > 0 && v - elements_[k - 1] <= 1) {
            throw Error(ErrorCode::InvalidArgument, "elements must increase by at least 2");
        }
    }
}

bool PuncturedSet::contains(int v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

bool is_primitive(const PuncturedSet& h)
{
    for (int v = h.low(); v <= h.high(); ++v) {
        if (h.contains(v)) continue;
        if (!h.contains(v - 1) && !h.contains(v + 1)) return false;
    }
    return true;
}

std::vector<PuncturedSet> enumerate_primitive(int low, int high, int max_span)
{
    if (high < low) return {PuncturedSet(low, high, {})};
    if (high - low > max_span) {
        throw Error(ErrorCode::CapacityLimit, "range [" + std::to_string(low) + ":" + std::to_string(high) +
                                                  "] exceeds the enumeration span " + std::to_string(max_span));
    }
    // A primitive set starts at low or low+1, steps by 2 or 3, and stops at high-1 or high.
    std::vector<PuncturedSet> out;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int last) {
        if (last >= high - 1) {
            out.emplace_back(low, high, current);
            return;
        }
        for (int step : {2, 3}) {
            const int next = last + step;
            if (next > high) continue;
            current.push_back(next);
            extend(next);
            current.pop_back();
        }
    };
    for (int first : {low, low + 1}) {
        if (first > high) continue;
        current.assign(1, first);
        extend(first);
    }
    return out;
}

mpz_class count_primitive_recurrence(int n)
{
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "T(n) is defined for n >= 1");
    // Bases from enumerating P(1,1), P(1,2), P(1,3).
    std::vector<mpz_class> t = {0, 1, 2, 2};
    for (int k = 4; k <= n; ++k) t.push_back(t[static_cast<std::size_t>(k - 2)] + t[static_cast<std::size_t>(k - 3)]);
    return t[static_cast<std::size_t>(n)];
}

PuncturedSet cut_to_punctured(const Cut& cut)
{
    const int n = cut.relay_count();
    std::vector<int> b;
    for (int i = 1; i <= n + 1; ++i) {
        const bool head = i == n + 1 || cut.contains(i);
        const bool tail = i == 1 || !cut.contains(i - 1);
        if (head && tail) b.push_back(i);
    }
    return PuncturedSet(1, n + 1, std::move(b));
}

CutFromPunctured punctured_to_cut(const PuncturedSet& b)
{
    if (b.low() != 1 || b.high() < 2) {
        throw Error(ErrorCode::InvalidArgument, "expected a punctured subset of [1:N+1] with N >= 1");
    }
    const int n = b.high() - 1;
    const bool degenerate = b.empty();
    const int sup = degenerate ? 0 : b.elements().back();
    std::vector<int> a;
    for (int v : b.elements()) {
        if (v != n + 1) a.push_back(v);
    }
    for (int i = sup + 1; i <= n; ++i) a.push_back(i);
    return {Cut(n, std::move(a)), degenerate};
}

ExtRational objective_g1(const Cut& cut, const LineNetwork& net)
{
    const int n = cut.relay_count();
    if (net.relay_count() != n) throw Error(ErrorCode::InvalidArgument, "cut and network sizes differ");
    ExtRational total(0);
    for (int i = 1; i <= n + 1; ++i) {
        const bool head = i == n + 1 || cut.contains(i);
        const bool tail = i == 1 || !cut.contains(i - 1);
        if (head && tail) total += net.link(i);
    }
    return total;
}

ExtRational objective_g2(const PuncturedSet& b, const LineNetwork& net)
{
    ExtRational total(0);
    for (int i : b.elements()) total += net.link(i);
    return total;
}

namespace {

void require_primitive_image(const Cut& cut)
{
    const PuncturedSet b = cut_to_punctured(cut);
    if (!is_primitive(b) || !(punctured_to_cut(b).cut == cut)) {
        throw Error(ErrorCode::WitnessNotApplicable,
                    "cut " + cut.to_string() + " is not the image of a primitive punctured subset");
    }
}

} // namespace

LineNetwork witness_network_for_cut(const Cut& cut)
{
    require_primitive_image(cut);
    const PuncturedSet b = cut_to_punctured(cut);
    std::vector<ExtRational> links;
    for (int i = 1; i <= cut.relay_count() + 1; ++i) {
        links.push_back(b.contains(i) ? ExtRational(1) : ExtRational::infinity());
    }
    return LineNetwork(std::move(links));
}

LineNetwork zero_one_witness(const Cut& cut)
{
    const PuncturedSet b = cut_to_punctured(cut);
    std::vector<ExtRational> links;
    for (int i = 1; i <= cut.relay_count() + 1; ++i) links.emplace_back(b.contains(i) ? 1 : 0);
    return LineNetwork(std::move(links), /*allow_degenerate=*/true);
}

State complement_state(const Cut& cut)
{
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(cut.relay_count()));
    for (int r = 1; r <= cut.relay_count(); ++r) bits[static_cast<std::size_t>(r - 1)] = cut.contains(r) ? 0 : 1;
    return State(std::move(bits));
}

WitnessReport verify_witness(const Cut& cut, int max_relays)
{
    const int n = cut.relay_count();
    if (n > max_relays || n > 62) {
        throw Error(ErrorCode::CapacityLimit, "witness scan over 2^" + std::to_string(n) + " states exceeds N <= " +
                                                  std::to_string(max_relays));
    }
    const LineNetwork net = witness_network_for_cut(cut);
    const PuncturedSet b = cut_to_punctured(cut);

    WitnessReport out;
    out.fd_capacity = fd_capacity(net);
    out.target = complement_state(cut);
    out.target_rate = schedule_rate_fundamental(Schedule({{out.target, ExtRational(1)}}), net);

    ExtRational best(0);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        State s = State::from_mask(mask, n);
        const ExtRational rate = schedule_rate_fundamental(Schedule({{s, ExtRational(1)}}), net);
        if (rate > best || out.optimal_states.empty()) {
            best = rate;
            out.optimal_states.clear();
        }
        if (rate == best) out.optimal_states.push_back(std::move(s));
    }
    std::sort(out.optimal_states.begin(), out.optimal_states.end());

    out.target_reaches_fd = out.target_rate == out.fd_capacity && best == out.fd_capacity;
    out.unique_up_to_activation =
        out.target_reaches_fd && std::all_of(out.optimal_states.begin(), out.optimal_states.end(),
                                             [&](const State& s) { return activated_links(s) == b.elements(); });
    out.target_unique = out.target_reaches_fd && out.optimal_states.size() == 1 && out.optimal_states[0] == out.target;
    return out;
}

LowerBoundCertificate lower_bound_certificate(int relay_count, int max_span)
{
    if (relay_count < 1) throw Error(ErrorCode::InvalidArgument, "lower bound needs N >= 1");
    const int n = relay_count + 1;
    LowerBoundCertificate out;
    out.relay_count = relay_count;
    out.enumerated = static_cast<unsigned long>(enumerate_primitive(1, n, max_span).size());
    out.recurrence = count_primitive_recurrence(n);
    out.counts_agree = out.enumerated == out.recurrence;
    out.bound = std::exp2(n / 3.0) / 2.0;
    // T >= 2^{n/3}/2  <=>  (2T)^3 >= 2^n, compared exactly.
    mpz_class lhs = 2 * out.recurrence;
    lhs = lhs * lhs * lhs;
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(n));
    out.bound_holds = lhs >= rhs;
    const mpz_class previous = count_primitive_recurrence(n - 1);
    out.growth_ratio = mpq_class(out.recurrence, previous).get_d();
    return out;
}

} // namespace hdline::punctured
