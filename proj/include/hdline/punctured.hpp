#ifndef HDLINE_PUNCTURED_HPP
#define HDLINE_PUNCTURED_HPP

#include <vector>

#include <gmpxx.h>

#include "hdline/ext_rational.hpp"
#include "hdline/line_model.hpp"

// Punctured subsets of integer ranges and their link to maximum FD cuts and
// to the size of the smallest sufficient state space.
namespace hdline::punctured {

inline constexpr int kDefaultEnumerationSpan = 30;

// Subset of [low:high] with no two consecutive integers. An empty range
// (low > high) admits only the empty set.
class PuncturedSet {
public:
    PuncturedSet(int low, int high, std::vector<int> elements);

    int low() const noexcept { return low_; }
    int high() const noexcept { return high_; }
    const std::vector<int>& elements() const noexcept { return elements_; }
    bool contains(int v) const;
    bool empty() const noexcept { return elements_.empty(); }

    friend bool operator==(const PuncturedSet&, const PuncturedSet&) = default;
    friend auto operator<=>(const PuncturedSet& a, const PuncturedSet& b) { return a.elements_ <=> b.elements_; }

private:
    int low_;
    int high_;
    std::vector<int> elements_;
};

// True iff no element of the range can be added while staying punctured.
bool is_primitive(const PuncturedSet& h);

// P(low, high) in lexicographic order of element lists.
std::vector<PuncturedSet> enumerate_primitive(int low, int high, int max_span = kDefaultEnumerationSpan);

// T(n) = T(n-2) + T(n-3), T(1) = 1, T(2) = 2, T(3) = 2.
mpz_class count_primitive_recurrence(int n);

// B_A = { i in [1:N+1] : i in A u {N+1}, i-1 in A^c u {0} }.
PuncturedSet cut_to_punctured(const Cut& cut);

struct CutFromPunctured {
    Cut cut;
    bool degenerate = false;  // B was empty, sup taken as 0
};

// A = { i in [1:N] : i > sup B } u (B \ {N+1}), for B punctured in [1:N+1].
CutFromPunctured punctured_to_cut(const PuncturedSet& b);

ExtRational objective_g1(const Cut& cut, const LineNetwork& net);
ExtRational objective_g2(const PuncturedSet& b, const LineNetwork& net);

// Capacities 1 on B_A and infinity elsewhere. A must be the image of a
// primitive punctured subset of [1:N+1].
LineNetwork witness_network_for_cut(const Cut& cut);

// Capacities 1 on B_A and 0 elsewhere (flagged degenerate).
LineNetwork zero_one_witness(const Cut& cut);

// Indicator of A^c: the state that activates exactly the links in B_A.
State complement_state(const Cut& cut);

struct WitnessReport {
    ExtRational fd_capacity;
    State target;                      // indicator of A^c
    ExtRational target_rate;
    std::vector<State> optimal_states;  // single states reaching the best single-state rate
    bool target_reaches_fd = false;
    // Every optimal state activates exactly B_A, and every other state is strictly worse.
    bool unique_up_to_activation = false;
    bool target_unique = false;  // target is the only optimal state
};

// Scans all 2^N single-state schedules on the witness network for A.
WitnessReport verify_witness(const Cut& cut, int max_relays = 12);

struct LowerBoundCertificate {
    int relay_count = 0;
    mpz_class enumerated;  // |P(1, N+1)|
    mpz_class recurrence;  // T(N+1)
    bool counts_agree = false;
    double bound = 0.0;    // 2^{(N+1)/3} / 2
    bool bound_holds = false;
    double growth_ratio = 0.0;  // T(N+1) / T(N), 0 when undefined
};

LowerBoundCertificate lower_bound_certificate(int relay_count, int max_span = kDefaultEnumerationSpan);

} // namespace hdline::punctured

#endif
