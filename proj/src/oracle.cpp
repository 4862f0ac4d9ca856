#include "defcolor/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>

#include "defcolor/errors.hpp"

namespace defcolor {

namespace {

struct Backtracker {
    const Graph& g;
    const ListAssignment& l;
    int d;
    unsigned long long budget;
    unsigned long long nodes = 0;
    std::vector<int> order;
    std::vector<int> col;
    std::vector<int> same; // same-colour coloured-neighbour count

    Backtracker(const Graph& gg, const ListAssignment& ll, int dd,
                unsigned long long b)
        : g(gg), l(ll), d(dd), budget(b) {
        const int n = g.vertex_count();
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b2) {
            if (g.degree(a) != g.degree(b2)) return g.degree(a) > g.degree(b2);
            return a < b2;
        });
        col.assign(n, kUncoloured);
        same.assign(n, 0);
    }

    bool search(size_t i) {
        if (i == order.size()) return true;
        const int v = order[i];
        for (int c : l.list(v)) {
            if (++nodes > budget) throw InstanceTooLarge(nodes);
            int cnt = 0;
            bool ok = true;
            for (int w : g.neighbours(v)) {
                if (col[w] != c) continue;
                ++cnt;
                if (cnt > d || same[w] + 1 > d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            col[v] = c;
            same[v] = cnt;
            for (int w : g.neighbours(v))
                if (col[w] == c) ++same[w];
            if (search(i + 1)) return true;
            for (int w : g.neighbours(v))
                if (col[w] == c && w != v) --same[w];
            col[v] = kUncoloured;
            same[v] = 0;
        }
        return false;
    }
};

} // namespace

OracleResult list_colourable(const Graph& g, const ListAssignment& l,
                             int defect_bound, unsigned long long node_budget) {
    const int n = g.vertex_count();
    if (l.size() != n)
        throw InvalidGraph("list assignment size does not match the graph");
    if (defect_bound < 0) throw InvalidGraph("defect bound must be >= 0");
    for (int v = 0; v < n; ++v)
        if (l.list(v).empty()) throw ListTooShort(v, 1);

    Backtracker bt(g, l, defect_bound, node_budget);
    OracleResult res;
    if (bt.search(0)) {
        res.status = SearchStatus::Sat;
        res.colouring = Colouring(bt.col);
    }
    res.nodes = bt.nodes;
    return res;
}

namespace {

// Enumerates sorted k-subsets per vertex. In canonical mode a list may use
// fresh colours only as the next unused ones, which enumerates exactly one
// representative per colour-relabelling class.
struct Enumerator {
    const Graph& g;
    int k, d, palette;
    bool canonical;
    unsigned long long budget;
    int jobs, worker;

    std::atomic<unsigned long long>* shared_nodes;
    unsigned long long local_assignments = 0;
    unsigned long long index = 0;
    std::optional<std::pair<unsigned long long, std::vector<std::vector<int>>>>
        counterexample;

    std::vector<std::vector<int>> lists;

    Enumerator(const Graph& gg, int kk, int dd, int p, bool canon,
               unsigned long long b, int j, int w,
               std::atomic<unsigned long long>* nodes)
        : g(gg), k(kk), d(dd), palette(p), canonical(canon), budget(b), jobs(j),
          worker(w), shared_nodes(nodes) {
        lists.resize(g.vertex_count());
    }

    bool run() { return rec(0, 0); }

    // returns false to stop the whole enumeration (counterexample found)
    bool rec(int i, int maxused) {
        if (i == g.vertex_count()) {
            const unsigned long long my_index = index++;
            if (my_index % static_cast<unsigned long long>(jobs) !=
                static_cast<unsigned long long>(worker))
                return true;
            ++local_assignments;
            const unsigned long long used =
                shared_nodes->load(std::memory_order_relaxed);
            if (used >= budget) throw InstanceTooLarge(used);
            OracleResult r =
                list_colourable(g, ListAssignment(lists), d, budget - used);
            shared_nodes->fetch_add(r.nodes, std::memory_order_relaxed);
            if (r.status == SearchStatus::Unsat) {
                counterexample = {my_index, lists};
                return false;
            }
            return true;
        }
        const int top = canonical ? std::min(palette, maxused + k) : palette;
        std::vector<int> sub(k);
        return subsets(i, maxused, top, 0, 1, sub);
    }

    bool subsets(int i, int maxused, int top, int chosen, int from,
                 std::vector<int>& sub) {
        if (chosen == k) {
            if (canonical) {
                int expect = maxused + 1;
                for (int c : sub) {
                    if (c <= maxused) continue;
                    if (c != expect) return true; // non-canonical, skip
                    ++expect;
                }
            }
            lists[i] = sub;
            return rec(i + 1, std::max(maxused, sub.back()));
        }
        for (int c = from; c <= top - (k - chosen - 1); ++c) {
            sub[chosen] = c;
            if (!subsets(i, maxused, top, chosen + 1, c + 1, sub)) return false;
        }
        return true;
    }
};

} // namespace

ChoosableVerdict choosable(const Graph& g, int k, int d,
                           const ChoosableOptions& options) {
    const int n = g.vertex_count();
    if (k <= 0) throw InvalidGraph("k must be positive");
    int p = options.palette_size > 0 ? options.palette_size : k * n;
    if (p < k) throw InvalidGraph("palette smaller than the list size");
    const int jobs = std::max(1, options.jobs);

    std::atomic<unsigned long long> nodes{0};
    std::vector<Enumerator> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back(g, k, d, p, options.canonicalize,
                             options.node_budget, jobs, w, &nodes);

    if (jobs == 1) {
        workers[0].run();
    } else {
        std::vector<std::thread> threads;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (auto& w : workers) {
            threads.emplace_back([&w, &error, &error_mutex] {
                try {
                    w.run();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        if (error) std::rethrow_exception(error);
    }

    ChoosableVerdict verdict;
    verdict.choosable = true;
    verdict.nodes = nodes.load();
    std::optional<std::pair<unsigned long long, std::vector<std::vector<int>>>> best;
    for (auto& w : workers) {
        verdict.assignments_tested += w.local_assignments;
        if (w.counterexample && (!best || w.counterexample->first < best->first))
            best = w.counterexample;
    }
    if (best) {
        verdict.choosable = false;
        verdict.counterexample = ListAssignment(best->second);
    }
    return verdict;
}

} // namespace defcolor
