#ifndef DEFCOLOR_ORACLE_HPP
#define DEFCOLOR_ORACLE_HPP

#include <optional>

#include "defcolor/colouring.hpp"
#include "defcolor/graph.hpp"

namespace defcolor {

inline constexpr unsigned long long kDefaultNodeBudget = 100'000'000ULL;

enum class SearchStatus { Sat, Unsat };

struct OracleResult {
    SearchStatus status = SearchStatus::Unsat;
    Colouring colouring; // witness when Sat
    unsigned long long nodes = 0;
};

/// Exhaustive backtracking over vertices in descending-degree order, pruning
/// any partial assignment where a vertex exceeds `defect_bound` same-coloured
/// neighbours. Unsat answers carry a full-search guarantee. Throws
/// InstanceTooLarge past the node budget.
OracleResult list_colourable(const Graph& g, const ListAssignment& l,
                             int defect_bound,
                             unsigned long long node_budget = kDefaultNodeBudget);

struct ChoosableOptions {
    int palette_size = 0; // 0 means the complete default k*n
    bool canonicalize = true;
    unsigned long long node_budget = kDefaultNodeBudget;
    int jobs = 1;
};

struct ChoosableVerdict {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;
    unsigned long long assignments_tested = 0;
    unsigned long long nodes = 0;
};

/// Tests (k,d)-choosability over the palette {1..p} by enumerating list
/// assignments (up to colour relabelling unless canonicalize is off) and
/// calling list_colourable on each. The default palette k*n is complete:
/// every assignment relabels into it.
ChoosableVerdict choosable(const Graph& g, int k, int d,
                           const ChoosableOptions& options = {});

} // namespace defcolor

#endif
