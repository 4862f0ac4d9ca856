#ifndef DEFCOLOR_DISCHARGING_HPP
#define DEFCOLOR_DISCHARGING_HPP

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "defcolor/embedding.hpp"

namespace defcolor {

using Rational = boost::rational<long long>;

/// Exact per-vertex charges; starts at deg(v) and is redistributed by the
/// discharging rules with the total preserved exactly.
struct ChargeLedger {
    int t = 0;
    std::vector<Rational> charge;
    Rational total() const;
};

ChargeLedger initial_charges(const Graph& g, int t);

/// Applies the three discharging rules to a triangulated rotation system:
/// degree-(t+2) vertices pay 1/(floor(t/2)+1) to each degree-t neighbour;
/// vertices of degree >= t+3 pay the same when t is odd and 2/(t/2+1) when
/// t is even.
ChargeLedger apply_rules(const RotationSystem& rs, int t);

struct PropertyCheck {
    std::string name;
    bool holds = false;
    std::string witness; // explanation when failing (or note when vacuous)
};

struct AuditReport {
    int t = 0;
    int n = 0;
    int m = 0;
    int f = 0;
    int mu = 0;
    bool t_in_range = false;           // the argument needs t >= 5
    long long charge_sum_minus_6n = 0; // sum(deg) - 6n, exactly 2m - 6n
    long long euler_side = 0;          // 6*mu - 12
    bool sums_equal = false;           // equality holds iff f = 2m/3
    Rational post_min_charge;
    std::vector<int> vertices_below_bound; // post-discharge charge < t+1
    std::vector<PropertyCheck> properties;
    long long contradiction_lhs = 0; // (2t+2)(t-5)
    long long contradiction_rhs = 0; // 6*mu - 12
    bool contradiction_holds = false; // lhs < rhs
    bool all_properties_hold = false;
};

/// Reproduces the counting argument on a concrete triangulated embedding:
/// charge sums, post-discharge minima, which structural properties hold, and
/// the final inequality. Diagnostic only; real inputs are expected to fail
/// at least one property.
AuditReport audit(const RotationSystem& rs, int t);

std::string audit_text(const AuditReport& report);

/// floor(sqrt(x)) by integer Newton iteration.
unsigned long long isqrt(unsigned long long x);

/// ceil(2 + sqrt(3*mu + 3)), evaluated exactly.
int required_list_size(int mu);

/// floor((7 + sqrt(24*mu + 1)) / 2), evaluated exactly.
int heawood_bound(int mu);

/// ceil(1.75 + sqrt(1.5*mu + 1/16)) = ceil((7 + sqrt(24*mu + 1)) / 4).
int lower_bound_choice1(int mu);

} // namespace defcolor

#endif
