#include "defcolor/discharging.hpp"

#include <cassert>
#include <sstream>

#include "defcolor/errors.hpp"

namespace defcolor {

Rational ChargeLedger::total() const {
    Rational sum(0);
    for (const auto& c : charge) sum += c;
    return sum;
}

ChargeLedger initial_charges(const Graph& g, int t) {
    ChargeLedger ledger;
    ledger.t = t;
    ledger.charge.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.charge.emplace_back(g.degree(v));
    return ledger;
}

ChargeLedger apply_rules(const RotationSystem& rs, int t) {
    if (!is_triangulated(rs)) throw NotTriangulated();
    const Graph& g = rs.graph();
    ChargeLedger ledger = initial_charges(g, t);
    const Rational before = ledger.total();

    const Rational base_share(1, t / 2 + 1);
    const Rational high_share = (t % 2 == 0) ? Rational(2, t / 2 + 1) : base_share;

    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        Rational share(0);
        if (d == t + 2)
            share = base_share;
        else if (d >= t + 3)
            share = high_share;
        else
            continue;
        for (int w : g.neighbours(v)) {
            if (g.degree(w) == t) {
                ledger.charge[v] -= share;
                ledger.charge[w] += share;
            }
        }
    }
    assert(ledger.total() == before);
    return ledger;
}

namespace {

std::string degree_list(const Graph& g, const std::vector<int>& vs) {
    std::string out;
    for (int v : vs) {
        if (!out.empty()) out += ", ";
        out += std::to_string(v) + " (deg " + std::to_string(g.degree(v)) + ")";
    }
    return out;
}

} // namespace

AuditReport audit(const RotationSystem& rs, int t) {
    if (!is_triangulated(rs)) throw NotTriangulated();
    const Graph& g = rs.graph();

    AuditReport rep;
    rep.t = t;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.f = trace_faces(rs).face_count();
    rep.mu = euler_genus(rs);
    rep.t_in_range = t >= 5;

    rep.charge_sum_minus_6n = 2LL * rep.m - 6LL * rep.n;
    rep.euler_side = 6LL * rep.mu - 12;
    rep.sums_equal = rep.charge_sum_minus_6n == rep.euler_side;

    const ChargeLedger after = apply_rules(rs, t);
    const Rational bound(t + 1);
    rep.post_min_charge = after.charge.empty() ? Rational(0) : after.charge[0];
    for (int v = 0; v < rep.n; ++v) {
        if (after.charge[v] < rep.post_min_charge)
            rep.post_min_charge = after.charge[v];
        if (after.charge[v] < bound) rep.vertices_below_bound.push_back(v);
    }

    auto add = [&](std::string name, bool holds, std::string witness) {
        rep.properties.push_back({std::move(name), holds, std::move(witness)});
    };

    {
        int bad = -1;
        for (int v = 0; v < rep.n && bad < 0; ++v)
            if (g.degree(v) < t) bad = v;
        add("min-degree >= t", bad < 0,
            bad < 0 ? "" : "vertex " + std::to_string(bad) + " has degree " +
                               std::to_string(g.degree(bad)));
    }
    add("max-degree >= 2t", g.max_degree() >= 2 * t,
        g.max_degree() >= 2 * t
            ? ""
            : "max degree is " + std::to_string(g.max_degree()));
    {
        std::pair<int, int> bad{-1, -1};
        for (int v = 0; v < rep.n && bad.first < 0; ++v) {
            if (g.degree(v) != t) continue;
            for (int w : g.neighbours(v)) {
                if (w > v && g.degree(w) == t) {
                    bad = {v, w};
                    break;
                }
            }
        }
        add("degree-t independence", bad.first < 0,
            bad.first < 0 ? ""
                          : "adjacent degree-t pair " + degree_list(g, {bad.first, bad.second}));
    }
    {
        std::vector<int> bad;
        for (int v = 0; v < rep.n && bad.empty(); ++v) {
            if (g.degree(v) != t) continue;
            const auto& nb = g.neighbours(v);
            for (size_t i = 0; i < nb.size() && bad.empty(); ++i)
                for (size_t j = i + 1; j < nb.size() && bad.empty(); ++j)
                    if (g.degree(nb[i]) == t + 1 && g.degree(nb[j]) == t + 1 &&
                        g.has_edge(nb[i], nb[j]))
                        bad = {v, nb[i], nb[j]};
        }
        add("(t,t+1,t+1)-triangle-free", bad.empty(),
            bad.empty() ? "" : "triangle " + degree_list(g, bad));
    }
    {
        int bad = -1;
        for (int v = 0; v < rep.n && bad < 0; ++v) {
            int tight = 0;
            for (int w : g.neighbours(v))
                if (g.degree(w) == t) ++tight;
            if (tight > g.degree(v) / 2) bad = v;
        }
        add("degree-t-neighbour cap floor(deg/2)", bad < 0,
            bad < 0 ? "" : "vertex " + std::to_string(bad));
    }
    {
        int bad = -1;
        for (int v = 0; v < rep.n && bad < 0; ++v) {
            if (g.degree(v) != t) continue;
            int high = 0;
            for (int w : g.neighbours(v))
                if (g.degree(w) >= t + 2) ++high;
            if (high < (t + 1) / 2) bad = v;
        }
        add("high-degree-neighbour floor ceil(t/2)", bad < 0,
            bad < 0 ? "" : "degree-t vertex " + std::to_string(bad));
    }
    {
        bool holds = true;
        std::string witness;
        if (t % 2 == 0) {
            for (int v = 0; v < rep.n && holds; ++v) {
                if (g.degree(v) != t) continue;
                int high = 0, very_high = 0;
                for (int w : g.neighbours(v)) {
                    if (g.degree(w) >= t + 2) ++high;
                    if (g.degree(w) >= t + 3) ++very_high;
                }
                if (high == t / 2 && very_high == 0) {
                    holds = false;
                    witness = "degree-t vertex " + std::to_string(v) +
                              " has t/2 high neighbours, all of degree t+2";
                }
            }
        } else {
            witness = "vacuous for odd t";
        }
        add("even-t wheel escape", holds, witness);
    }
    add("vertex count >= 2t+1", rep.n >= 2 * t + 1,
        rep.n >= 2 * t + 1 ? "" : "n = " + std::to_string(rep.n));

    rep.contradiction_lhs = (2LL * t + 2) * (t - 5LL);
    rep.contradiction_rhs = rep.euler_side;
    rep.contradiction_holds = rep.contradiction_lhs < rep.contradiction_rhs;
    rep.all_properties_hold = true;
    for (const auto& p : rep.properties)
        if (!p.holds) rep.all_properties_hold = false;
    return rep;
}

namespace {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

std::string audit_text(const AuditReport& rep) {
    std::ostringstream os;
    os << "discharging audit (t=" << rep.t << ")\n";
    os << "graph: n=" << rep.n << " m=" << rep.m << " f=" << rep.f
       << " genus=" << rep.mu << "\n";
    if (!rep.t_in_range)
        os << "note: t=" << rep.t
           << " is outside the operative range t >= 5 of the argument\n";
    os << "charge sums: sum(deg-6) = " << rep.charge_sum_minus_6n
       << ", 6*genus-12 = " << rep.euler_side
       << (rep.sums_equal ? " (equal)" : " (NOT equal)") << "\n";
    os << "post-discharge minimum charge: " << to_string(rep.post_min_charge)
       << "; vertices below t+1: " << rep.vertices_below_bound.size() << "\n";
    os << "structural properties:\n";
    for (const auto& p : rep.properties) {
        os << "  [" << (p.holds ? "hold" : "FAIL") << "] " << p.name;
        if (!p.witness.empty()) os << " -- " << p.witness;
        os << "\n";
    }
    os << "contradiction line: (2t+2)(t-5) = " << rep.contradiction_lhs
       << " < 6*genus-12 = " << rep.contradiction_rhs << " : "
       << (rep.contradiction_holds ? "true" : "false") << "\n";
    return os.str();
}

unsigned long long isqrt(unsigned long long x) {
    if (x < 2) return x;
    unsigned long long r = x;
    unsigned long long s = (r + x / r) / 2;
    while (s < r) {
        r = s;
        s = (r + x / r) / 2;
    }
    return r;
}

namespace {

void check_mu(int mu) {
    if (mu < 0) throw InvalidGraph("Euler genus must be nonnegative");
}

} // namespace

int required_list_size(int mu) {
    check_mu(mu);
    const unsigned long long x = 3ULL * mu + 3;
    const unsigned long long s = isqrt(x);
    return 2 + static_cast<int>(s * s == x ? s : s + 1);
}

int heawood_bound(int mu) {
    check_mu(mu);
    return static_cast<int>((7 + isqrt(24ULL * mu + 1)) / 2);
}

int lower_bound_choice1(int mu) {
    check_mu(mu);
    const unsigned long long x = 24ULL * mu + 1;
    const unsigned long long s = isqrt(x);
    if (s * s == x) return static_cast<int>((7 + s + 3) / 4);
    return static_cast<int>((7 + s) / 4 + 1);
}

} // namespace defcolor
